import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multiplace.errors import ZeroPolynomial
from multiplace.exact import Poly, poly_gcd
from multiplace.factor import (
    berlekamp,
    factor_over_Q,
    gf_mul,
    gf_squarefree_factor,
    hensel_lift_list,
    is_irreducible_over_Q,
    is_prime,
    next_prime,
)

x = Poly.x()


def P(*coeffs):
    return Poly(coeffs)


def test_primes():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert next_prime(13) == 17


class TestBerlekamp:
    def test_splits_product(self):
        # (x-1)(x-2)(x^2+1) mod 7; x^2+1 factors mod 7? -1 is not a QR mod 7
        f = gf_mul(gf_mul([6, 1], [5, 1], 7), [1, 0, 1], 7)
        factors = berlekamp(f, 7)
        assert sorted(factors) == sorted([[6, 1], [5, 1], [1, 0, 1]])

    def test_irreducible(self):
        assert berlekamp([1, 0, 1], 3) == [[1, 0, 1]]  # x^2+1 irred mod 3

    def test_full_factor_with_multiplicity(self):
        # x^2 * (x+1)^3 mod 5
        f = gf_mul(gf_mul([0, 0, 1], gf_mul([1, 1], [1, 1], 5), 5), [1, 1], 5)
        fac = gf_squarefree_factor(f, 5)
        assert ([0, 1], 2) in [(g, m) for g, m in fac]
        assert ([1, 1], 3) in [(g, m) for g, m in fac]


def test_hensel_lift_exact_product():
    # x^2 - 6 = (x-1)(x+1) mod 5, lifted mod 5^6
    lifted = hensel_lift_list([-6, 0, 1], [[4, 1], [1, 1]], 5, 6)
    mod = 5**6
    prod = gf_mul(lifted[0], lifted[1], mod)
    assert prod == [(-6) % mod, 0, 1]
    for g in lifted:
        r = (-g[0]) % mod
        assert (r * r - 6) % mod == 0


class TestFactorOverQ:
    def test_difference_of_squares(self):
        fl = factor_over_Q(x**2 - P(1))
        assert {g for g, _ in fl.factors} == {x - P(1), x + P(1)}

    def test_x4_plus_1_irreducible(self):
        # oracle: exhaustive search for quadratic factors with small integer
        # coefficients (any factorization of x^4+1 over Z must be into two
        # monic quadratics with coefficients bounded by 2 + 1)
        f = x**4 + P(1)
        found = False
        for b in range(-3, 4):
            for c in range(-3, 4):
                g = P(c, b, 1)
                if (f % g).is_zero:
                    found = True
        assert not found
        assert is_irreducible_over_Q(f)

    def test_content_and_unit(self):
        fl = factor_over_Q(P(-4, 0, 2))
        assert fl.unit == 2
        assert fl.factors == ((x**2 - P(2), 1),)
        assert not is_irreducible_over_Q(P(-4, 0, 2) * P(0, 1))

    def test_high_multiplicity(self):
        f = (x - P(Fraction(1, 2))) ** 2 * (x**2 + P(1)) * Fraction(3, 7)
        fl = factor_over_Q(f)
        assert fl.expand() == f
        assert dict((g, m) for g, m in fl.factors)[x - P(Fraction(1, 2))] == 2

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            factor_over_Q(Poly())

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(-5, 5), min_size=2, max_size=7))
    def test_remultiplication_random(self, coeffs):
        f = Poly(coeffs)
        if f.is_zero:
            return
        fl = factor_over_Q(f)
        assert fl.expand() == f
        for g, _ in fl.factors:
            assert g.lc == 1
            assert (f % g).is_zero

    def test_classic_cyclotomic_like(self):
        # x^6 - 1 = (x-1)(x+1)(x^2+x+1)(x^2-x+1)
        fl = factor_over_Q(x**6 - P(1))
        degs = sorted(g.degree for g, _ in fl.factors)
        assert degs == [1, 1, 2, 2]


def test_gcd_degree_matches_common_roots():
    # brute-force oracle for gcd degree on products of known linear factors
    rng = random.Random(7)
    for _ in range(25):
        roots_a = [rng.randint(-4, 4) for _ in range(rng.randint(1, 3))]
        roots_b = [rng.randint(-4, 4) for _ in range(rng.randint(1, 3))]
        a = Poly.from_roots(roots_a)
        b = Poly.from_roots(roots_b)
        g = poly_gcd(a, b)
        assert g.degree == len(set(roots_a) & set(roots_b))
