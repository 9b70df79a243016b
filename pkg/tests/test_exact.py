from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multiplace.errors import NonCoprimeModuli, ZeroPolynomial
from multiplace.exact import (
    Poly,
    crt,
    discriminant,
    lagrange_interpolate,
    poly_gcd,
    resultant,
    squarefree_decomposition,
    squarefree_part,
    xgcd,
)

x = Poly.x()


def P(*coeffs):
    return Poly(coeffs)


class TestCrt:
    def test_worked_example(self):
        # independent oracle: exhaustive search over the full residue ring
        expected = next(r for r in range(432) if r % 16 == 0 and r % 27 == 1)
        assert expected == 352
        assert crt([(16, 0), (27, 1)]) == 352

    def test_single(self):
        assert crt([(2, 1)]) == 1

    def test_pair(self):
        expected = next(r for r in range(15) if r % 3 == 2 and r % 5 == 3)
        assert expected == 8
        assert crt([(3, 2), (5, 3)]) == 8

    def test_non_coprime(self):
        with pytest.raises(NonCoprimeModuli):
            crt([(4, 1), (6, 3)])

    @given(st.lists(st.sampled_from([(3, 0), (5, 1), (7, 2), (11, 3), (13, 5)]), unique_by=lambda t: t[0], min_size=1))
    def test_every_congruence_satisfied(self, pairs):
        pairs = [(m, r) for m, r in pairs]
        sol = crt(pairs)
        for m, r in pairs:
            assert sol % m == r % m


@given(st.integers(-500, 500), st.integers(-500, 500))
def test_xgcd(a, b):
    g, s, t = xgcd(a, b)
    assert g == s * a + t * b
    assert g >= 0
    if a or b:
        assert a % g == 0 and b % g == 0


small_rats = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))
small_polys = st.lists(small_rats, max_size=6).map(Poly)


class TestPolyRing:
    @given(small_polys, small_polys, small_polys)
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)

    @given(small_polys, small_polys)
    def test_divmod(self, a, b):
        if b.is_zero:
            with pytest.raises(ZeroPolynomial):
                a.divmod(b)
            return
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.degree < b.degree

    def test_compose_shift(self):
        f = P(1, 2, 3)
        assert f.shift_arg(5).evaluate(0) == f.evaluate(5)
        assert f.scale_arg(3).evaluate(2) == f.evaluate(6)
        assert f.compose(P(0, 0, 1)) == P(1, 0, 2, 0, 3)

    def test_primitive(self):
        f = P(Fraction(2, 3), Fraction(4, 3))
        c, prim = f.content_and_primitive()
        assert c * prim == f
        assert prim.int_coeffs() == [1, 2]


class TestGcd:
    def test_shared_root(self):
        assert poly_gcd(x**2 - P(1), x - P(1)) == x - P(1)

    def test_coprime(self):
        assert poly_gcd(x**2 + P(1), x**2 - P(2)) == P(1)

    def test_gcd_with_zero(self):
        assert poly_gcd(Poly(), P(0, 0, 0, 2)) == x**3

    @given(small_polys, small_polys)
    def test_divides_both(self, a, b):
        g = poly_gcd(a, b)
        if g.is_zero:
            assert a.is_zero and b.is_zero
            return
        assert (a % g).is_zero and (b % g).is_zero


def test_squarefree():
    f = (x - P(1)) ** 3 * (x + P(2))
    assert squarefree_part(f) == ((x - P(1)) * (x + P(2))).monic()
    dec = squarefree_decomposition(f)
    assert dec == [((x + P(2)).monic(), 1), ((x - P(1)).monic(), 3)]


def test_resultant_common_root():
    assert resultant(x**2 - P(1), x - P(1)) == 0
    # res(f, g) = lc(g)^deg f * prod f(roots of g)
    f = x**2 + P(1)
    g = x - P(3)
    assert resultant(f, g) == f.evaluate(3)


def test_discriminant_quadratic():
    # ax^2 + bx + c has discriminant b^2 - 4ac
    f = P(5, -3, 2)
    assert discriminant(f) == 9 - 4 * 2 * 5


def test_interpolation_roundtrip():
    f = P(1, Fraction(1, 2), 0, -4)
    pts = [(Fraction(k), f.evaluate(k)) for k in range(5)]
    assert lagrange_interpolate(pts) == f
