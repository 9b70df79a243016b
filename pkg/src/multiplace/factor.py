"""Factorization over Q and over Z/p.

Integer polynomials mod p are plain lists of ints in [0, p), lowest degree
first, trailing zeros stripped.  The route to a rational factorization is the
classic one: squarefree decomposition, factor mod a good prime (Berlekamp),
Hensel lift past the Landau-Mignotte bound, then subset recombination.  The
same mod-p and lifting machinery backs the p-adic branch computations in
``places``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt

from .errors import ZeroPolynomial
from .exact import Poly, inv_mod, squarefree_decomposition


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def next_prime(n: int) -> int:
    n += 1
    while not is_prime(n):
        n += 1
    return n


# ----------------------------------------------------------------------
# arithmetic in (Z/m)[x]; m is prime for the Berlekamp layer, a prime power
# for the Hensel layer.


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def gf_add(a, b, m):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % m for i in range(n)])


def gf_sub(a, b, m):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % m for i in range(n)])


def gf_mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % m
    return _trim(out)


def gf_scale(a, c, m):
    return _trim([(ai * c) % m for ai in a])


def gf_divmod(a, b, m):
    """Division in (Z/m)[x]; the leading coefficient of b must be a unit."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    inv = inv_mod(b[-1], m)
    rem = list(a)
    if len(rem) < len(b):
        return [], _trim(rem)
    quo = [0] * (len(rem) - len(b) + 1)
    for k in range(len(quo) - 1, -1, -1):
        c = (rem[k + len(b) - 1] * inv) % m
        quo[k] = c
        if c:
            for i, bc in enumerate(b):
                rem[k + i] = (rem[k + i] - c * bc) % m
    return _trim(quo), _trim(rem[: len(b) - 1])


def gf_mod(a, b, m):
    return gf_divmod(a, b, m)[1]


def gf_gcd(a, b, p):
    while b:
        a, b = b, gf_mod(a, b, p)
    if a:
        a = gf_scale(a, inv_mod(a[-1], p), p)
    return a


def gf_monic(a, m):
    if not a:
        return a
    return gf_scale(a, inv_mod(a[-1], m), m)


def gf_pow_mod(a, n, f, m):
    out, base = [1], gf_mod(a, f, m)
    while n:
        if n & 1:
            out = gf_mod(gf_mul(out, base, m), f, m)
        base = gf_mod(gf_mul(base, base, m), f, m)
        n >>= 1
    return out


def gf_deriv(a, m):
    return _trim([(i * a[i]) % m for i in range(1, len(a))])


def gf_eval(a, x, m):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % m
    return acc


def gf_xgcd(a, b, p):
    """Returns (g, s, t) monic with g = gcd = s*a + t*b in GF(p)[x]."""
    old_r, r = list(a), list(b)
    old_s, s = [1], []
    old_t, t = [], [1]
    while r:
        q, rem = gf_divmod(old_r, r, p)
        old_r, r = r, rem
        old_s, s = s, gf_sub(old_s, gf_mul(q, s, p), p)
        old_t, t = t, gf_sub(old_t, gf_mul(q, t, p), p)
    if old_r:
        c = inv_mod(old_r[-1], p)
        old_r = gf_scale(old_r, c, p)
        old_s = gf_scale(old_s, c, p)
        old_t = gf_scale(old_t, c, p)
    return old_r, old_s, old_t


# ----------------------------------------------------------------------
# Berlekamp factorization of a squarefree polynomial over GF(p).


def _nullspace_mod_p(rows: list[list[int]], p: int) -> list[list[int]]:
    """Basis of the right nullspace of the matrix over GF(p)."""
    n = len(rows)
    mat = [list(r) for r in rows]
    pivots: dict[int, int] = {}
    row = 0
    for col in range(n):
        sel = None
        for r in range(row, n):
            if mat[r][col] % p:
                sel = r
                break
        if sel is None:
            continue
        mat[row], mat[sel] = mat[sel], mat[row]
        inv = inv_mod(mat[row][col], p)
        mat[row] = [(v * inv) % p for v in mat[row]]
        for r in range(n):
            if r != row and mat[r][col] % p:
                c = mat[r][col]
                mat[r] = [(mat[r][j] - c * mat[row][j]) % p for j in range(n)]
        pivots[col] = row
        row += 1
    basis = []
    for col in range(n):
        if col in pivots:
            continue
        vec = [0] * n
        vec[col] = 1
        for pc, pr in pivots.items():
            vec[pc] = (-mat[pr][col]) % p
        basis.append(vec)
    return basis


def berlekamp(f: list[int], p: int) -> list[list[int]]:
    """Distinct monic irreducible factors of a squarefree monic f over GF(p)."""
    n = len(f) - 1
    if n <= 1:
        return [f] if n == 1 else []
    # rows of Q: x^(p*i) mod f expressed in the monomial basis
    rows = []
    xp = gf_pow_mod([0, 1], p, f, p)
    cur = [1]
    for i in range(n):
        rows.append([cur[j] if j < len(cur) else 0 for j in range(n)])
        cur = gf_mod(gf_mul(cur, xp, p), f, p)
    # Q - I, transposed so nullspace vectors are Berlekamp subalgebra elements
    mat = [[(rows[i][j] - (1 if i == j else 0)) % p for i in range(n)] for j in range(n)]
    basis = _nullspace_mod_p(mat, p)
    r = len(basis)
    if r == 1:
        return [gf_monic(f, p)]
    factors = [gf_monic(f, p)]
    for vec in basis:
        v = _trim(list(vec))
        if len(v) <= 1:
            continue  # constants split nothing
        nxt = []
        for g in factors:
            if len(g) - 1 <= 1:
                nxt.append(g)
                continue
            pieces = []
            rem = g
            for s in range(p):
                if len(rem) - 1 <= 0:
                    break
                h = gf_gcd(rem, gf_sub(v, [s], p), p)
                if 0 < len(h) - 1 < len(rem) - 1:
                    pieces.append(h)
                    rem = gf_divmod(rem, h, p)[0]
                elif len(h) - 1 == len(rem) - 1:
                    rem = h  # the whole remainder lies in this fiber
                    break
            pieces.append(rem)
            nxt.extend(pieces)
        factors = [gf_monic(g, p) for g in nxt if len(g) > 1]
        if len(factors) == r:
            break
    return sorted(factors)


def gf_squarefree_factor(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Full factorization over GF(p) as (irreducible, multiplicity) pairs."""
    f = gf_monic(f, p)
    out: dict[tuple[int, ...], int] = {}

    def add(g, mult):
        key = tuple(g)
        out[key] = out.get(key, 0) + mult

    def rec(g: list[int], mult: int):
        if len(g) - 1 < 1:
            return
        d = gf_deriv(g, p)
        if not d:
            # g = h(x^p) = h(x)^p in GF(p)[x]
            h = [g[i] for i in range(0, len(g), p)]
            rec(h, mult * p)
            return
        w = gf_gcd(g, d, p)
        sqfree = gf_divmod(g, w, p)[0]
        for irr in berlekamp(sqfree, p):
            m = 0
            while True:
                q, r = gf_divmod(g, irr, p)
                if r:
                    break
                g = q
                m += 1
            add(irr, m * mult)
        if len(g) - 1 >= 1:
            rec(g, mult)

    rec(f, 1)
    return sorted(([list(k), m] for k, m in out.items()), key=lambda t: (len(t[0]), t[0]))  # type: ignore[return-value]


# ----------------------------------------------------------------------
# Hensel lifting.


def hensel_lift_pair(f, g, h, p, k_from, k_to):
    """Lift f = g*h (mod p^k_from) to (mod p^k_to); g, h coprime mod p.

    f and g must be monic; returns (G, H) monic with f = G*H mod p^k_to and
    G = g, H = h mod p^k_from.  Linear steps, one power of p at a time.
    """
    _, s, t = gf_xgcd([c % p for c in g], [c % p for c in h], p)  # s*g + t*h = 1
    G, H = list(g), list(h)
    k = k_from
    while k < k_to:
        mod_next = p ** (k + 1)
        prod = gf_mul(G, H, mod_next)
        e = gf_sub([c % mod_next for c in f], prod, mod_next)
        e_div = [(c // (p**k)) % p for c in e]  # e is divisible by p^k
        g_bar = [c % p for c in G]
        h_bar = [c % p for c in H]
        q, dg = gf_divmod(gf_mul(t, e_div, p), g_bar, p)
        dh = gf_add(gf_mul(s, e_div, p), gf_mul(q, h_bar, p), p)
        G = gf_add(G, gf_scale(dg, p**k, mod_next), mod_next)
        H = gf_add(H, gf_scale(dh, p**k, mod_next), mod_next)
        k += 1
    return G, H


def hensel_lift_list(f: list[int], factors_mod_p: list[list[int]], p: int, k: int) -> list[list[int]]:
    """Lift a pairwise-coprime monic factorization of f mod p to mod p^k.

    f must be integral with leading coefficient a unit mod p; the product of
    the lifted monic factors times lc(f) equals f mod p^k.
    """
    mod = p**k
    lc = f[-1] % mod
    f_monic = gf_scale(f, inv_mod(lc, mod), mod)

    def lift(target: list[int], parts: list[list[int]]) -> list[list[int]]:
        if len(parts) == 1:
            return [[c % mod for c in target]]
        half = len(parts) // 2
        g0 = [1]
        for q in parts[:half]:
            g0 = gf_mul(g0, q, p)
        h0 = [1]
        for q in parts[half:]:
            h0 = gf_mul(h0, q, p)
        G, H = hensel_lift_pair(target, g0, h0, p, 1, k)
        return lift(G, parts[:half]) + lift(H, parts[half:])

    return lift(f_monic, factors_mod_p)


# ----------------------------------------------------------------------
# Zassenhaus over Q.


@dataclass(frozen=True)
class FactorList:
    """unit * prod(poly^multiplicity) equals the factored input exactly."""

    unit: Fraction
    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        out = Poly([self.unit])
        for g, m in self.factors:
            out = out * g**m
        return out


def _sym(a: int, m: int) -> int:
    a %= m
    return a - m if a > m // 2 else a


def _mignotte_bound(f: list[int]) -> int:
    n = len(f) - 1
    norm = isqrt(sum(c * c for c in f)) + 1
    return 2**n * norm * abs(f[-1])


def _factor_squarefree_z(f: list[int]) -> list[list[int]]:
    """Irreducible integer factors of a primitive squarefree f in Z[x]."""
    n = len(f) - 1
    if n == 1:
        return [f]
    p = 2
    while True:
        p = next_prime(p)
        if f[-1] % p == 0:
            continue
        fp = [c % p for c in f]
        if gf_gcd(fp, gf_deriv(fp, p), p) == [1]:
            break
    modular = berlekamp(gf_monic(fp, p), p)
    if len(modular) == 1:
        return [f]
    bound = 2 * _mignotte_bound(f) + 1
    k = 1
    while p**k < bound:
        k += 1
    mod = p**k
    lifted = hensel_lift_list(f, modular, p, k)

    result: list[list[int]] = []
    remaining = list(range(len(lifted)))
    current = list(f)
    s = 1
    while 2 * s <= len(remaining):
        found = True
        while found and 2 * s <= len(remaining):
            found = False
            for combo in combinations(remaining, s):
                cand = [current[-1] % mod]
                for i in combo:
                    cand = gf_mul(cand, lifted[i], mod)
                cand_sym = [_sym(c, mod) for c in cand]
                g = 0
                for c in cand_sym:
                    g = gcd(g, abs(c))
                if g == 0:
                    continue
                cand_prim = [c // g for c in cand_sym]
                quo, rem = _zx_divmod(current, cand_prim)
                if quo is not None and not rem:
                    result.append(cand_prim)
                    current = quo
                    remaining = [i for i in remaining if i not in combo]
                    found = True
                    break
        s += 1
    if len(current) - 1 >= 1:
        result.append(current)
    return result


def _zx_divmod(a: list[int], b: list[int]):
    """Exact division in Z[x] if it succeeds, else (None, [1])."""
    if not b:
        return None, [1]
    rem = list(a)
    if len(rem) < len(b):
        return None, [1]
    quo = [0] * (len(rem) - len(b) + 1)
    for kk in range(len(quo) - 1, -1, -1):
        c = rem[kk + len(b) - 1]
        if c % b[-1]:
            return None, [1]
        c //= b[-1]
        quo[kk] = c
        if c:
            for i, bc in enumerate(b):
                rem[kk + i] -= c * bc
    if any(rem[: len(b) - 1]):
        return None, [1]
    return quo, []


def factor_over_Q(f: Poly) -> FactorList:
    """Complete factorization into monic irreducibles over Q.

    Since every factor is normalized monic, the unit is the leading
    coefficient of the input.  The result re-multiplies exactly to the input
    (checked here before returning).
    """
    if f.is_zero:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if f.degree == 0:
        return FactorList(f.lc, ())
    factors: list[tuple[Poly, int]] = []
    for sq, mult in squarefree_decomposition(f):
        prim = sq.primitive()
        for zf in _factor_squarefree_z(prim.int_coeffs()):
            factors.append((Poly(zf).monic(), mult))
    out = FactorList(f.lc, tuple(sorted(factors, key=lambda t: (t[0].degree, t[0].coeffs, t[1]))))
    if out.expand() != f:
        raise AssertionError("factorization failed re-multiplication check")
    return out


def is_irreducible_over_Q(f: Poly) -> bool:
    if f.degree < 1:
        return False
    fl = factor_over_Q(f)
    return len(fl.factors) == 1 and fl.factors[0][1] == 1
