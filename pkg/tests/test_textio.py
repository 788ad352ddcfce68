from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratdist.arith import GQF, QF, QuadField
from ratdist.errors import InvalidInput, PolySyntaxError
from ratdist.geom import NormalizedSet, Pt
from ratdist.poly import BPoly, UPoly
from ratdist.textio import (
    format_bpoly,
    format_pointset,
    format_scalar,
    format_upoly,
    parse_pointset,
    parse_poly,
    parse_scalar,
    parse_upoly,
)


def test_parse_examples():
    f = parse_poly("x^2+y^2-1")
    assert f == BPoly({(2, 0): 1, (0, 2): 1, (0, 0): -1}, QuadField(1))
    g = parse_poly("1/2*x - 3*y^2")
    assert g.coeff(1, 0) == F(1, 2) and g.coeff(0, 2) == -3
    with pytest.raises(PolySyntaxError) as exc:
        parse_poly("x^^2")
    assert exc.value.offset == 2


def test_parse_errors():
    with pytest.raises(PolySyntaxError):
        parse_poly("x + z")
    with pytest.raises(PolySyntaxError):
        parse_poly("2*")
    with pytest.raises(PolySyntaxError):
        parse_upoly("x", "t")


def test_radical_token_uses_header_field():
    f = parse_poly("x - 2*r*y", k=3)
    assert f.coeff(0, 1) == QF(3, 0, -2)
    assert parse_poly("r*x*y", k=2).coeff(1, 1) == QF(2, 0, 1)
    assert parse_poly("r*r", k=5) == BPoly.const(5, QuadField(5))


def test_whitespace_and_factor_order():
    assert parse_poly(" y ^ 2 * x - 1 ") == parse_poly("x*y^2-1")
    assert parse_poly("x*3") == parse_poly("3*x")


def test_imaginary_token_for_slices():
    s = parse_upoly("x^3 + 12*i*x", "x")
    assert s[1] == GQF(QF(1, 0), QF(1, 12))


def test_print_examples():
    assert format_bpoly(parse_poly("x^2+y^2-1")) == "x^2 + y^2 - 1"
    assert format_bpoly(parse_poly("-y + 1/2*x*y", k=2)) == "1/2*x*y - y"
    assert format_upoly(parse_upoly("26*t^2+2*t+17")) == "26*t^2 + 2*t + 17"
    assert format_scalar(QF(2, F(1, 3), -1)) == "1/3 - r"
    assert parse_scalar("1/3 - r", 2) == QF(2, F(1, 3), -1)


rat = st.fractions(min_value=-20, max_value=20, max_denominator=30)


@st.composite
def bpolys(draw):
    k = draw(st.sampled_from([1, 2, 3, 7]))
    terms = {}
    for _ in range(draw(st.integers(0, 6))):
        m = (draw(st.integers(0, 4)), draw(st.integers(0, 4)))
        terms[m] = QF(k, draw(rat), draw(rat))
    return k, BPoly(terms, QuadField(k))


@settings(max_examples=300, deadline=None)
@given(bpolys())
def test_print_parse_round_trip(kf):
    k, f = kf
    text = format_bpoly(f)
    back = parse_poly(text, k, QuadField(k))
    assert back == f
    assert format_bpoly(back) == text


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([1, 2, 5]), st.lists(st.tuples(rat, rat), max_size=6))
def test_upoly_round_trip(k, cs):
    f = UPoly([QF(k, a, b) for a, b in cs], QuadField(k), "t")
    assert parse_upoly(format_upoly(f), "t", k, QuadField(k)) == f


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([1, 3, 6]), st.lists(st.tuples(rat, rat), max_size=8))
def test_pointset_round_trip(k, pts):
    S = NormalizedSet(k, tuple(pts))
    text = format_pointset(S)
    back = parse_pointset(text)
    assert back == S and format_pointset(back) == text


def test_raw_pointset_round_trip():
    raw = [Pt(QF(3, 0), QF(3, 0)), Pt(QF(3, 2), QF(3, 0)), Pt(QF(3, 1), QF(3, 0, 1))]
    text = format_pointset(raw)
    assert text.splitlines()[0] == "raw 3"
    assert parse_pointset(text) == raw


def test_pointset_comments_and_errors():
    S = parse_pointset("# header comment\nk 3\npoint 0 0  # origin\n\npoint 1/2 1/2\n")
    assert S == NormalizedSet(3, ((0, 0), (F(1, 2), F(1, 2))))
    for bad in ("", "k 4\n", "k 1\npoint 1\n", "q 1\n", "raw 2\npoint 1 2\n", "k 1\npt 0 0\n"):
        with pytest.raises(InvalidInput):
            parse_pointset(bad)
