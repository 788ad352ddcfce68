import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratdist.arith import (
    GQF,
    QF,
    QQ,
    QuadField,
    embed,
    format_rational,
    parse_rational,
    qf_invert,
    rational_sqrt,
    squarefree_decompose,
)
from ratdist.errors import FieldMismatch, InvalidInput

RADICANDS = [1, 2, 3, 5, 6, 7, 10]
rats = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@st.composite
def qf_triples(draw):
    k = draw(st.sampled_from(RADICANDS))
    return tuple(QF(k, draw(rats), draw(rats)) for _ in range(3))


@st.composite
def gqf_triples(draw):
    k = draw(st.sampled_from(RADICANDS))
    return tuple(GQF(QF(k, draw(rats), draw(rats)), QF(k, draw(rats), draw(rats))) for _ in range(3))


def test_squarefree_decompose_examples():
    assert squarefree_decompose(12) == (3, 2)
    assert squarefree_decompose(1) == (1, 1)
    assert squarefree_decompose(360) == (10, 6)


@pytest.mark.parametrize("n", [0, -4])
def test_squarefree_decompose_rejects_nonpositive(n):
    with pytest.raises(InvalidInput):
        squarefree_decompose(n)


def test_squarefree_recomposition_up_to_1e5():
    for n in range(1, 100_001):
        s, m = squarefree_decompose(n)
        assert s * m * m == n
    # squarefreeness of s, spot-checked by trial division on a sample
    for n in range(1, 3000):
        s, _ = squarefree_decompose(n)
        assert all(s % (p * p) for p in range(2, math.isqrt(s) + 1))


def test_rational_sqrt_examples():
    assert rational_sqrt(Fraction(4, 9)) == Fraction(2, 3)
    assert rational_sqrt(2) is None
    assert rational_sqrt(Fraction(1600, 625)) == Fraction(8, 5)
    with pytest.raises(InvalidInput):
        rational_sqrt(-1)


@given(st.fractions(min_value=0, max_value=10**6, max_denominator=10**4))
def test_rational_sqrt_agrees_with_perfect_square_check(q):
    r = rational_sqrt(q)
    n, d = q.numerator, q.denominator
    square = math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d
    assert (r is not None) == square
    if r is not None:
        assert r * r == q and r >= 0


def test_qf_invert_examples():
    assert qf_invert(QF(2, 1, 1)) == QF(2, -1, 1)
    assert qf_invert(QF(3, 3)) == Fraction(1, 3)
    with pytest.raises(ZeroDivisionError):
        qf_invert(QF(5, 0))


@settings(max_examples=1000, deadline=None)
@given(qf_triples())
def test_qf_field_axioms(t):
    a, b, c = t
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if a:
        assert a * qf_invert(a) == 1
        assert qf_invert(qf_invert(a)) == a
        assert (a.norm() == 0) is False


@settings(max_examples=1000, deadline=None)
@given(gqf_triples())
def test_gqf_ring_axioms(t):
    a, b, c = t
    assert a + b == b + a and a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inverse() == 1
        assert a.norm() != 0
    i = GQF.i(a.k)
    assert i * i == -1


def test_k1_normalizes_to_rational():
    x = QF(1, 2, 3)
    assert x.b == 0 and x == 5


def test_mixed_radicands_refused():
    with pytest.raises(FieldMismatch):
        QF(2, 1, 1) + QF(3, 1, 1)
    with pytest.raises(FieldMismatch):
        QuadField(2).coerce(QF(3, 0, 1))
    assert embed(QF(1, 4), 7) == QF(7, 4)
    with pytest.raises(FieldMismatch):
        embed(QF(2, 0, 1), 3)


def test_non_squarefree_radicand_rejected():
    with pytest.raises(InvalidInput):
        QF(4, 1, 1)


def test_sign_under_real_embedding():
    assert QF(2, -1, 1).sign() == 1  # sqrt2 - 1 > 0
    assert QF(2, 3, -2).sign() == 1  # 3 - 2 sqrt2 > 0
    assert QF(2, 1, -1).sign() == -1
    assert QF(3, 0, 0).sign() == 0


def test_rational_literals():
    assert parse_rational(" -3/6 ") == Fraction(-1, 2)
    assert parse_rational("7") == 7
    for bad in ("3/-4", "1/0", "x", "1.5"):
        with pytest.raises(InvalidInput):
            parse_rational(bad)
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert QQ.coerce(3) == 3
