from fractions import Fraction as F
from itertools import combinations
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import integral_triangles, is_integral_general
from ratdist.certify import reduce_circle_to_line
from ratdist.construct import (
    SearchConfig,
    congruence_key,
    default_circle_params,
    integral_search,
    line_rational_set,
    search_estimate,
    transfer_line_to_circle,
    unit_circle_rational_set,
)
from ratdist.curveops import Curve
from ratdist.errors import InvalidInput, SearchTooLarge
from ratdist.geom import collinear, concyclic, dist2, fit_curve, invert_set, verify_rational_set
from ratdist.arith import rational_sqrt

# axis points at rational distance from (0, 1)
AXIS = [F(0), F(3, 4), F(-3, 4), F(4, 3), F(5, 12)]


def test_unit_circle_examples():
    S = unit_circle_rational_set([0, F(1, 2)])
    assert S.points == ((1, 0), (F(-7, 25), F(24, 25)))
    assert rational_sqrt(dist2(*S.points, 1)) == F(8, 5)
    S = unit_circle_rational_set([F(1, 2), F(1, 3)])
    assert S.points == ((F(-7, 25), F(24, 25)), (F(7, 25), F(24, 25)))
    assert rational_sqrt(dist2(*S.points, 1)) == F(14, 25)
    assert len(unit_circle_rational_set([F(5, 7)])) == 1
    with pytest.raises(InvalidInput):
        unit_circle_rational_set([F(1, 2), F(1, 2)])
    with pytest.raises(InvalidInput):
        unit_circle_rational_set([F(1, 2), F(-2)])  # same square


def test_line_set_examples():
    S = line_rational_set([0, 1, 3])
    assert collinear(*S.points) and verify_rational_set(S)[0]
    assert line_rational_set([]).points == ()
    S = line_rational_set([F(1, 3), F(1, 2)])
    assert rational_sqrt(dist2(*S.points, 1)) == F(1, 6)
    with pytest.raises(InvalidInput):
        line_rational_set([1, 1])


def test_default_params_give_distinct_points():
    ts = default_circle_params(12)
    assert ts[:4] == [F(1, 2), F(1, 3), F(2, 3), F(1, 4)]
    assert len(unit_circle_rational_set(ts)) == 12


def test_transfer_examples():
    S = line_rational_set(AXIS)
    S = S.with_points(S.points + ((0, 1),))
    assert verify_rational_set(S)[0]
    img = transfer_line_to_circle(S, 5, 1)
    assert len(img) == 5 and verify_rational_set(img)[0]
    for quad in combinations(img.points, 4):
        assert concyclic(*quad)
    with pytest.raises(InvalidInput):
        transfer_line_to_circle(S, 0, 1)
    # axis points only, inverted about one of them: still on the axis
    axis_only = line_rational_set(AXIS)
    assert all(p[1] == 0 for p in invert_set(axis_only, 0, 1).points)


def test_transfer_keeps_off_axis_points_off_the_circle():
    # (0, 1) and (0, -1) are both at rational distance from every axis point above
    S = line_rational_set(AXIS)
    S = S.with_points(S.points + ((0, 1), (0, -1)))
    assert verify_rational_set(S)[0]
    img = transfer_line_to_circle(S, 5, 2)
    (circle,) = fit_curve(list(img.points[:5]), 2)
    assert not circle.contains(*img.coords(5))


def test_transfer_then_reduce_is_collinear():
    S = line_rational_set(AXIS)
    S = S.with_points(S.points + ((0, 1),))
    circ = transfer_line_to_circle(S, 5, 1)
    (conic,) = fit_curve(list(circ.points), 2)
    red = reduce_circle_to_line(circ, conic, 0)
    images = red.points.points[:4]
    assert all(collinear(images[0], images[1], p) for p in images[2:])


@settings(max_examples=100, deadline=None)
@given(st.lists(st.fractions(min_value=F(1, 9), max_value=9, max_denominator=9), min_size=1, max_size=8, unique=True))
def test_circle_generator_is_rational_and_on_circle(ts):
    try:
        S = unit_circle_rational_set(ts)
    except InvalidInput:
        return
    assert verify_rational_set(S)[0]
    assert all(x * x + y * y == 1 for x, y in S.points)


def test_integral_search_examples():
    out = integral_search(SearchConfig(3, 4))
    target = congruence_key([(0, 0), (3, 0), (0, 4)])
    assert target in [s.key for s in out]
    assert integral_search(SearchConfig(3, 1)) == []
    for s in integral_search(SearchConfig(4, 8)):
        assert is_integral_general(s.points)


def test_integral_triangles_match_enumeration():
    oracle = integral_triangles(5)
    out = integral_search(SearchConfig(3, 5))
    assert {s.distances: s.points for s in out} == oracle


def test_search_guard():
    cfg = SearchConfig(7, 200)
    with pytest.raises(SearchTooLarge) as exc:
        integral_search(cfg)
    assert exc.value.estimate == search_estimate(cfg)
    with pytest.raises(InvalidInput):
        SearchConfig(2, 5)
    with pytest.raises(InvalidInput):
        SearchConfig(3, 0)


def _congruent_copy(points, rng):
    ops = [lambda p: (p[1], -p[0]), lambda p: (-p[0], p[1]), lambda p: (p[0], p[1])]
    op = rng.choice(ops)
    dx, dy = rng.randint(-9, 9), rng.randint(-9, 9)
    moved = [(a + dx, b + dy) for a, b in map(op, points)]
    rng.shuffle(moved)
    return moved


def test_congruence_key_ignores_order_and_motion():
    rng = random.Random(3)
    for s in integral_search(SearchConfig(3, 6)) + integral_search(SearchConfig(4, 8)):
        for _ in range(5):
            assert congruence_key(_congruent_copy(s.points, rng)) == s.key


def test_search_output_is_deterministic_and_sorted():
    a = integral_search(SearchConfig(3, 6))
    b = integral_search(SearchConfig(3, 6))
    assert a == b
    assert [s.key for s in a] == sorted(s.key for s in a)
    assert len({s.key for s in a}) == len(a)
