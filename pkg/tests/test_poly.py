from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import rational_roots_bruteforce, sympy_discriminant, sympy_resultant
from ratdist.arith import GQF, QF, QQ, GaussQuadField, QuadField
from ratdist.errors import InvalidInput, RemainderNonzero
from ratdist.poly import (
    BPoly,
    PolyRing,
    UPoly,
    discriminant,
    exact_divide,
    field_roots,
    poly_gcd,
    rational_roots,
    resultant,
    squarefree_part,
    substitute,
)

small = st.integers(min_value=-6, max_value=6)
rat = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def P(*coeffs, var="x"):
    return UPoly(list(coeffs), QQ, var)


@st.composite
def polys(draw, min_deg=0, max_deg=4):
    n = draw(st.integers(min_deg, max_deg))
    cs = [draw(rat) for _ in range(n)] + [draw(rat.filter(bool))]
    return P(*cs)


def test_gcd_examples():
    assert poly_gcd(P(-1, 0, 1), P(-1, 1)) == P(-1, 1)
    assert poly_gcd(P(1, 0, 1), P(0, 1, 1)) == P(1)
    f = P(2, 0, 4)
    assert poly_gcd(f, f) == f.monic()
    assert poly_gcd(f, P()) == f.monic()


def test_gcd_mixed_fields_refused():
    with pytest.raises(InvalidInput):
        poly_gcd(P(1, 1), UPoly([1, 1], QuadField(2)))


def test_squarefree_part_examples():
    assert squarefree_part(P(-1, 1) ** 2 * P(2, 1)) == P(-1, 1) * P(2, 1)
    assert squarefree_part(P(1, 0, 1)) == P(1, 0, 1)
    assert squarefree_part(P(1, 0, 1) ** 2) == P(1, 0, 1)
    with pytest.raises(InvalidInput):
        squarefree_part(P())


def test_resultant_examples():
    assert resultant(P(-1, 1), P(-2, 1)) == -1
    assert resultant(P(-1, 0, 1), P(-1, 1)) == 0
    assert resultant(P(1, 0, 1), P(0, 1)) == 1
    with pytest.raises(InvalidInput):
        resultant(P(), P(1))


def test_discriminant_examples():
    assert discriminant(P(-1, 0, 1)) == 4
    assert discriminant(P(-1, 1) ** 2) == 0
    assert discriminant(P(0, -1, 0, 1)) == 4
    with pytest.raises(InvalidInput):
        discriminant(P(3))


def test_discriminant_symbolic_quadratic():
    # x^2 + b x + c with b, c generic: disc = b^2 - 4c, instantiated on a grid
    for b in range(-3, 4):
        for c in range(-3, 4):
            assert discriminant(P(c, b, 1)) == b * b - 4 * c


def test_discriminant_over_polynomial_ring():
    ring = PolyRing(QQ, "a")
    a = UPoly([0, 1], QQ, "a")
    f = UPoly([-1, 0, a * a + 1], ring, "x")  # (1 + a^2) x^2 - 1
    assert discriminant(f) == UPoly([4, 0, 4], QQ, "a")


def test_exact_divide_examples():
    assert exact_divide(P(-1, 0, 1), P(-1, 1)) == P(1, 1)
    f = P(3, 1, 4)
    assert exact_divide(f, P(1)) == f
    t = UPoly([0, 1], QQ, "t")
    quad = 26 * t * t + 2 * t + 17
    g = (t - 2) ** 2 * (t * t + 1)
    assert exact_divide(quad * g, g) == quad
    with pytest.raises(RemainderNonzero) as exc:
        exact_divide(P(1, 0, 1), P(0, 1))
    assert exc.value.remainder == P(1)


def test_rational_roots_examples():
    assert rational_roots(P(Fraction(-1, 4), 0, 1)) == [Fraction(-1, 2), Fraction(1, 2)]
    assert rational_roots(P(1, 0, 1)) == []
    assert rational_roots(P(1, -5, 6)) == [Fraction(1, 3), Fraction(1, 2)]
    with pytest.raises(InvalidInput):
        rational_roots(P())


@settings(max_examples=200, deadline=None)
@given(st.lists(small, min_size=2, max_size=6).filter(lambda c: c[-1] != 0))
def test_rational_roots_match_enumeration(cs):
    assert rational_roots(P(*cs)) == rational_roots_bruteforce(cs)


def test_substitute_examples():
    dom = QQ
    x, y = BPoly.x(dom), BPoly.y(dom)
    t = UPoly.gen(dom, "t")
    assert substitute(x * x + y * y, x, BPoly({}, dom)) == x * x
    assert substitute(y - x * x, t, t * t) == UPoly([], dom, "t")
    assert substitute(x + y, x + 1, y - 1) == x + y
    with pytest.raises(InvalidInput):
        substitute(x + y, BPoly.x(QuadField(2)), BPoly.y(QuadField(2)))


@settings(max_examples=500, deadline=None)
@given(polys(max_deg=4), polys(max_deg=4))
def test_gcd_divides_both(f, g):
    h = poly_gcd(f, g)
    exact_divide(f, h)
    exact_divide(g, h)


@settings(max_examples=500, deadline=None)
@given(polys(min_deg=2, max_deg=5))
def test_squarefree_part_has_nonzero_discriminant(f):
    s = squarefree_part(f)
    if s.degree >= 2:
        assert discriminant(s) != 0


@settings(max_examples=300, deadline=None)
@given(polys(max_deg=3), polys(max_deg=3), polys(min_deg=0, max_deg=2))
def test_resultant_zero_iff_common_factor(f, g, common):
    f2, g2 = f * common, g * common
    if f2.degree < 1 or g2.degree < 1:
        return
    r = resultant(f2, g2)
    assert (r == 0) == (poly_gcd(f2, g2).degree >= 1)


@settings(max_examples=200, deadline=None)
@given(polys(min_deg=0, max_deg=3), rat)
def test_planted_double_root_kills_discriminant(f, c):
    g = P(-c, 1) ** 2 * f
    assert discriminant(g) == 0


@settings(max_examples=150, deadline=None)
@given(polys(min_deg=1, max_deg=4), polys(min_deg=1, max_deg=4))
def test_resultant_and_discriminant_match_sympy(f, g):
    assert sympy_resultant(f, g) == sympy.Rational(*_nd(resultant(f, g)))
    if f.degree >= 2:
        assert sympy_discriminant(f) == sympy.Rational(*_nd(discriminant(f)))


def _nd(q):
    q = Fraction(q)
    return q.numerator, q.denominator


def test_resultant_over_quadratic_field_matches_sympy():
    dom = QuadField(2)
    f = UPoly([QF(2, 1, 1), QF(2, 0, -1), 1], dom)
    g = UPoly([QF(2, -3, 0), QF(2, 2, 1)], dom)
    r = resultant(f, g)
    expect = sympy_resultant(f, g)
    assert sympy.simplify(expect - (sympy.Rational(*_nd(r.a)) + sympy.Rational(*_nd(r.b)) * sympy.sqrt(2))) == 0


@st.composite
def bpolys(draw):
    terms = {}
    for _ in range(draw(st.integers(0, 4))):
        terms[(draw(st.integers(0, 2)), draw(st.integers(0, 2)))] = draw(rat)
    return BPoly(terms, QQ)


@settings(max_examples=200, deadline=None)
@given(bpolys(), bpolys(), bpolys(), bpolys())
def test_substitute_is_a_ring_homomorphism(f, g, xe, ye):
    lhs_add = substitute(f + g, xe, ye)
    assert lhs_add == substitute(f, xe, ye) + substitute(g, xe, ye)
    assert substitute(f * g, xe, ye) == substitute(f, xe, ye) * substitute(g, xe, ye)


def test_field_roots_over_extensions():
    d2 = QuadField(2)
    f = UPoly([-2, 0, 1], d2)
    assert sorted(field_roots(f), key=lambda r: r.sign()) == [QF(2, 0, -1), QF(2, 0, 1)]
    g = UPoly([QF(2, 0, -2), 1], d2) * UPoly([QF(2, 0, 2), 1], d2) * UPoly([QF(2, -1, -1), 1], d2)
    assert set(field_roots(g)) == {QF(2, 0, 2), QF(2, 0, -2), QF(2, 1, 1)}
    g3 = GaussQuadField(3)
    h = UPoly([3, 0, 1], g3)
    assert set(field_roots(h)) == {GQF(QF(3, 0), QF(3, 0, 1)), GQF(QF(3, 0), QF(3, 0, -1))}
    assert field_roots(UPoly([1, 0, 1], QuadField(5))) == []


def test_bivariate_basics():
    x, y = BPoly.x(QQ), BPoly.y(QQ)
    f = (x * x + y * y - 1) * (y - x)
    assert f.total_degree == 3
    assert f.eval(Fraction(3, 5), Fraction(4, 5)) == 0
    assert f.diff("y") == (y - x) * 2 * y + (x * x + y * y - 1)
    q = f.exact_div_monic(y - x, "y")
    assert q == x * x + y * y - 1
    assert (2 * y - 4 * x).canonical() == y - 2 * x
