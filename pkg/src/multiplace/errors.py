"""Exception types shared across the package."""


class MultiplaceError(Exception):
    """Base class for all package-specific errors."""


class ZeroPolynomial(MultiplaceError):
    """An operation that requires a nonzero polynomial received zero."""


class ZeroArgument(MultiplaceError):
    """An operation that requires a nonzero argument received zero."""


class NonCoprimeModuli(MultiplaceError):
    """CRT moduli share a common factor."""


class UnsupportedRamification(MultiplaceError):
    """Local factorization hit a ramification shape outside the supported ones.

    Raised explicitly rather than approximating; the caller sees exactly which
    polynomial and prime were rejected.
    """


class PrecisionExhausted(MultiplaceError):
    """A p-adic computation ran out of certified digits.

    Callers retry with doubled precision up to the configured cap; if the cap
    is reached this propagates.
    """


class DegreeCapExceeded(MultiplaceError):
    """A splitting-field construction would exceed the configured degree cap."""


class ClosureMismatch(MultiplaceError):
    """Subgroups or data from different closures were mixed."""


class ClosureTooSmall(MultiplaceError):
    """The supplied closure does not contain the splitting field of a witness."""


class FieldMismatch(MultiplaceError):
    """Two place data do not live on the same field."""


class InconsistentSamePlace(MultiplaceError):
    """Two disjoint balls were requested at the same prime."""


class HypothesisViolated(MultiplaceError):
    """A structure description violates the hypothesis of the check requested."""


class PreconditionViolated(MultiplaceError):
    """An operation's documented precondition does not hold for the input."""


class MaxStepsExceeded(MultiplaceError):
    """A sampled chain failed to absorb within the step budget."""


class ParseError(MultiplaceError):
    """Malformed JSON input (schema violation, bad rational string, ...)."""
