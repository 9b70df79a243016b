"""Exact rational arithmetic: integers, CRT, and dense univariate polynomials.

Polynomials are immutable tuples of ``fractions.Fraction``, lowest degree
first, with no trailing zeros (the zero polynomial is the empty tuple).
Everything in this module is exact; no floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _gcd
from typing import Iterable, Sequence

from .errors import NonCoprimeModuli, ZeroPolynomial

Rat = Fraction


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: returns (g, s, t) with g = gcd(a, b) = s*a + t*b."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def inv_mod(a: int, m: int) -> int:
    g, s, _ = xgcd(a % m, m)
    if g != 1:
        raise NonCoprimeModuli(f"{a} is not invertible modulo {m}")
    return s % m


def crt(residues: Sequence[tuple[int, int]]) -> int:
    """Simultaneous congruence solver.

    ``residues`` is a list of (modulus, residue) pairs with pairwise coprime
    moduli.  Returns the unique residue modulo the product of the moduli.
    """
    x, m = 0, 1
    for modulus, r in residues:
        if modulus <= 0:
            raise NonCoprimeModuli(f"modulus {modulus} is not positive")
        g, s, _ = xgcd(m, modulus)
        if g != 1:
            raise NonCoprimeModuli(f"moduli {m} and {modulus} share factor {g}")
        # x' = x + m * (s * (r - x)) solves x' = x mod m, x' = r mod modulus
        x = (x + m * ((s * (r - x)) % modulus)) % (m * modulus)
        m *= modulus
    return x % m


def _as_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Poly:
    """Dense univariate polynomial over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Poly":
        out = cls([1])
        for r in roots:
            out = out * cls([-_as_rat(r), 1])
        return out

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __repr__(self):
        if self.is_zero:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x" if c != 1 else "x")
            else:
                terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return "Poly(" + " + ".join(terms) + ")"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = _as_rat(other)
            return Poly([c * a for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        out, base = Poly([1]), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero:
            raise ZeroPolynomial("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quo = [Fraction(0)] * (dq + 1)
        inv_lc = 1 / other.lc
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv_lc
            quo[k] = c
            if c:
                for i, oc in enumerate(other.coeffs):
                    rem[k + i] -= c * oc
        return Poly(quo), Poly(rem[: other.degree])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    # -- calculus and composition ------------------------------------------

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x) -> Fraction:
        acc = Fraction(0)
        xr = _as_rat(x)
        for c in reversed(self.coeffs):
            acc = acc * xr + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly([c])
        return acc

    def shift_arg(self, a) -> "Poly":
        """p(x) -> p(x + a)."""
        return self.compose(Poly([_as_rat(a), 1]))

    def scale_arg(self, c) -> "Poly":
        """p(x) -> p(c*x)."""
        cr = _as_rat(c)
        return Poly([coef * cr**i for i, coef in enumerate(self.coeffs)])

    def reversed_poly(self) -> "Poly":
        """p(x) -> x^deg * p(1/x)."""
        return Poly(tuple(reversed(self.coeffs)))

    # -- normalization -----------------------------------------------------

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self * (1 / self.lc)

    def content_and_primitive(self) -> tuple[Fraction, "Poly"]:
        """Write self = content * primitive with primitive in Z[x], gcd of
        coefficients 1 and positive leading coefficient."""
        if self.is_zero:
            return Fraction(0), self
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // _gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = _gcd(g, abs(v))
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), Poly([v // g for v in ints])

    def primitive(self) -> "Poly":
        return self.content_and_primitive()[1]

    def int_coeffs(self) -> list[int]:
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c}")
            out.append(c.numerator)
        return out


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic() if not a.is_zero else a


def squarefree_part(f: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of f."""
    if f.is_zero:
        raise ZeroPolynomial("squarefree part of zero")
    if f.degree == 0:
        return Poly([1])
    return (f // poly_gcd(f, f.derivative())).monic()


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm (characteristic zero): f = lc * prod g_i^i with the
    g_i monic, squarefree, and pairwise coprime."""
    if f.is_zero:
        raise ZeroPolynomial("squarefree decomposition of zero")
    f = f.monic()
    out: list[tuple[Poly, int]] = []
    if f.degree == 0:
        return out
    g = poly_gcd(f, f.derivative())
    c = f // g
    d = f.derivative() // g - c.derivative()
    i = 1
    while c.degree > 0:
        a = poly_gcd(c, d)
        if a.degree > 0:
            out.append((a, i))
        c2 = c // a
        d = d // a - c2.derivative()
        c = c2
        i += 1
    return out


def resultant(f: Poly, g: Poly) -> Fraction:
    """Resultant of two rational polynomials (Euclidean algorithm form)."""
    if f.is_zero or g.is_zero:
        return Fraction(0)
    if f.degree == 0:
        return f.lc ** g.degree
    if g.degree == 0:
        return g.lc ** f.degree
    r = f % g
    sign = -1 if (f.degree * g.degree) % 2 else 1
    if r.is_zero:
        return Fraction(0)
    return sign * g.lc ** (f.degree - r.degree) * resultant(g, r)


def discriminant(f: Poly) -> Fraction:
    if f.degree < 1:
        raise ZeroPolynomial("discriminant needs degree >= 1")
    n = f.degree
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc


def lagrange_interpolate(points: Sequence[tuple[Fraction, Fraction]]) -> Poly:
    """Unique polynomial of degree < len(points) through the given points."""
    total = Poly()
    xs = [(_as_rat(x), _as_rat(y)) for x, y in points]
    for i, (xi, yi) in enumerate(xs):
        if yi == 0:
            continue
        num = Poly([yi])
        for j, (xj, _) in enumerate(xs):
            if i == j:
                continue
            num = num * Poly([-xj, 1]) * (1 / (xi - xj))
        total = total + num
    return total
