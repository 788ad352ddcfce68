from dataclasses import replace
from fractions import Fraction as F
from itertools import product
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratdist.arith import QF
from ratdist.certify import (
    EXEMPT,
    FALTINGS,
    Certificate,
    CertifyOptions,
    build_line_obstruction,
    certify_curve,
    hyperelliptic_genus,
    reduce_circle_to_line,
    rh_lower_bound,
    verify_certificate,
)
from ratdist.construct import unit_circle_rational_set
from ratdist.curveops import Curve
from ratdist.errors import (
    InternalInconsistency,
    InvalidConfiguration,
    InvalidInput,
    MultipleRoot,
    NeedsMorePoints,
    NotCertifiable,
)
from ratdist.geom import NormalizedSet, collinear, dist2, points_on_curve, verify_rational_set
from ratdist.poly import squarefree_part
from ratdist.textio import parse_upoly

ELLIPTIC = Curve.parse("y^2 - x^3 + x")
ELLIPTIC_PTS = NormalizedSet(1, ((0, 0), (1, 0), (-1, 0)))
INV_PARABOLA = Curve.parse("x^2*y + y^3 - x^2")


def _inv_parabola_points(ts):
    # inversion of (t, t^2) about the origin
    return [(F(1) / (t * (1 + t * t)), F(1) / (1 + t * t)) for t in map(F, ts)]


def test_rh_lower_bound_examples():
    assert rh_lower_bound(1, 2, 1).g2_lower == 2
    assert rh_lower_bound(0, 2, 6).g2_lower == 2
    assert rh_lower_bound(1, 2, 0).g2_lower == 1
    with pytest.raises(InvalidInput):
        rh_lower_bound(0, 1, 3)


@given(st.integers(0, 3), st.integers(2, 4), st.integers(0, 30))
def test_rh_lower_bound_is_least_solution_and_monotone(g1, deg, ram):
    r = rh_lower_bound(g1, deg, ram)
    rhs = deg * (2 * g1 - 2) + ram
    assert 2 * r.g2_lower - 2 >= rhs or r.g2_lower == 0
    if r.g2_lower > 0:
        assert 2 * (r.g2_lower - 1) - 2 < rhs
    assert rh_lower_bound(g1, deg, ram + 1).g2_lower >= r.g2_lower
    assert rh_lower_bound(g1 + 1, deg, ram).g2_lower >= r.g2_lower


def test_hyperelliptic_genus_examples():
    assert hyperelliptic_genus(parse_upoly("x^6 - 1", "x")) == 2
    assert hyperelliptic_genus(parse_upoly("x^8 - 2", "x")) == 3
    with pytest.raises(MultipleRoot):
        hyperelliptic_genus(parse_upoly("x^3 - x^2 - x + 1", "x"))  # (x-1)^2 (x+1)


def test_line_obstruction_examples():
    m = build_line_obstruction([(0, 1), (1, 1), (2, 1)])
    assert m.rhs.degree == 6 and m.squarefree and m.genus == 2
    assert m.rhs == parse_upoly("x^2 + 1", "x") * parse_upoly("x^2 - 2*x + 2", "x") * parse_upoly("x^2 - 4*x + 5", "x")
    with pytest.raises(InvalidConfiguration):
        build_line_obstruction([(0, 1), (0, 1), (1, 1)])
    m = build_line_obstruction([(0, 1), (1, 2), (1, 3)])
    assert m.genus == 2
    with pytest.raises(InvalidConfiguration):
        build_line_obstruction([(0, 1), (1, 0), (2, 1)])
    with pytest.raises(InvalidConfiguration):
        build_line_obstruction([(0, 1), (0, -1), (2, 1)])


def test_line_obstruction_1000_random_triples():
    rng = random.Random(11)
    done = 0
    while done < 1000:
        pts = {(F(rng.randint(-20, 20), rng.randint(1, 6)), F(rng.randint(1, 20), rng.randint(1, 6)))
               for _ in range(3)}
        if len(pts) < 3:
            continue
        m = build_line_obstruction(sorted(pts), k=rng.choice([1, 2, 3]))
        assert m.squarefree and m.genus == 2
        assert squarefree_part(m.rhs).degree == 6
        done += 1


def _circle_plus_origin(ts):
    circ = unit_circle_rational_set(ts)
    return circ.with_points(circ.points + ((0, 0),))


def test_reduce_circle_examples():
    S = _circle_plus_origin([F(1, 2), F(1, 3), F(2, 3), F(1, 4), F(3, 4), F(2, 5)])
    circle = Curve.parse("x^2 + y^2 - 1")
    red = reduce_circle_to_line(S, circle, 0)
    assert verify_rational_set(red.points)[0]
    on = points_on_curve(red.points, red.line)
    assert len(on) == 5 and len(red.points) - len(on) == 2
    a, b = on[0], on[1]
    assert all(collinear(a, b, p) for p in on[2:])
    with pytest.raises(InvalidInput):
        reduce_circle_to_line(S, circle, 6)  # the origin is off the circle

    only = unit_circle_rational_set([F(1, 2), F(1, 3), F(2, 3), F(1, 5)])
    red = reduce_circle_to_line(only, circle, 1, radius=F(3, 2))
    assert len(points_on_curve(red.points, red.line)) == 3
    assert red.points.points[-1] == only.points[1]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=F(1, 7), max_value=7, max_denominator=7), min_size=3, max_size=6, unique=True),
       st.fractions(min_value=F(1, 3), max_value=3, max_denominator=3))
def test_reduce_circle_properties(ts, radius):
    S = _circle_plus_origin(ts)
    n = len(S) - 1
    red = reduce_circle_to_line(S, Curve.parse("x^2 + y^2 - 1"), 0, radius)
    images = red.points.points[: n - 1]
    for p in images[2:]:
        assert collinear(images[0], images[1], p)
    center = red.points.points[-1]
    assert verify_rational_set(red.points)[0]
    assert all(dist2(center, p, 1) for p in images)


def test_certify_circle_is_exempt():
    S = unit_circle_rational_set([F(1, 2), F(1, 3), F(2, 3)])
    cert = certify_curve(Curve.parse("x^2 + y^2 - 1"), S)
    assert cert.case == "circle-component" and cert.conclusion == EXEMPT
    assert verify_certificate(cert)


def test_certify_line_is_exempt():
    cert = certify_curve(Curve.parse("y"), NormalizedSet(1, ((0, 0), (1, 0))))
    assert cert.case == "line-component" and cert.conclusion == EXEMPT


def test_certify_elliptic_curve():
    cert = certify_curve(ELLIPTIC, ELLIPTIC_PTS)
    assert cert.case == "genus1-ramified" and cert.conclusion == FALTINGS
    assert int(cert.witness("ram_count")) >= 1
    assert int(cert.witness("g2_lower")) >= 2
    assert verify_certificate(cert)


def test_certify_inverted_parabola():
    S = NormalizedSet(1, tuple([(0, 0)] + _inv_parabola_points([1, 2, 3, -1, F(1, 2), -2])))
    cert = certify_curve(INV_PARABOLA, S)
    assert cert.case == "cubic-k2-product"
    assert cert.witness("genus") == "3"
    assert parse_upoly(cert.witness("rhs"), "t").degree == 8
    assert verify_certificate(cert)


def test_certify_parabola_goes_through_inversion():
    S = NormalizedSet(1, tuple((F(t), F(t * t)) for t in (0, 1, 2, 3, -1, F(1, 2), -2, 5)))
    cert = certify_curve(Curve.parse("y - x^2"), S)
    assert cert.case == "conic-inverted" and cert.inner is not None
    assert cert.conclusion == FALTINGS
    assert verify_certificate(cert)


def test_certify_nodal_cubic_inverts_to_quintic():
    pts = [(t * t - 1, t * (t * t - 1)) for t in map(F, (0, 2, 3, F(1, 2), -2, F(5, 3), 4))]
    cert = certify_curve(Curve.parse("y^2 - x^3 - x^2"), NormalizedSet(1, tuple(pts)))
    assert cert.case == "cubic-inverted-deg5"
    assert Curve.parse(cert.witness("inverted_curve")).degree == 5
    assert int(cert.witness("ram_count")) >= 5
    assert int(cert.witness("g2_lower")) >= 2
    assert verify_certificate(Certificate.from_text(cert.to_text()))
    tampered = replace(cert, witnesses=tuple((k, "1" if k == "overlaps" else v) for k, v in cert.witnesses))
    with pytest.raises(InternalInconsistency):
        verify_certificate(tampered)


def test_quintic_affine_slices_miss_circular_points():
    # the inverted nodal cubic passes doubly through both circular points, so
    # its affine isotropic slices stop at 4 simple roots from any vertex on it
    from ratdist.curveops import cone_ramification_count, invert_curve, translate_curve

    quintic, _ = invert_curve(translate_curve(Curve.parse("y^2 - x^3 - x^2"), -1, 0))
    assert quintic.degree == 5
    for t in map(F, (2, 3, -2)):
        x, y = t * t, t * (t * t - 1)  # cubic point after the shift, then inverted
        r = x * x + y * y
        img = translate_curve(quintic, x / r, y / r)
        assert cone_ramification_count(img) <= 4


def test_certify_errors():
    with pytest.raises(InvalidInput):
        certify_curve(ELLIPTIC, NormalizedSet(1, ((0, 0), (2, 0))))
    with pytest.raises(NeedsMorePoints) as exc:
        certify_curve(Curve.parse("y^2 - x^4 - x^3"), NormalizedSet(1, ((0, 0),)))
    assert exc.value.diagnostic["bad_slope_discriminant"]
    with pytest.raises(NotCertifiable):
        certify_curve(Curve.parse("x^5 + y"), NormalizedSet(1, ((0, 0),)))
    cert = certify_curve(Curve.parse("x^5 + y"), NormalizedSet(1, ((0, 0), (1, -1))),
                         CertifyOptions(assert_irreducible=True))
    assert cert.case == "genus0-highdeg"
    cert = certify_curve(Curve.parse("x^5 + y"), NormalizedSet(1, ((0, 0),)), CertifyOptions(assert_genus=2))
    assert cert.case == "genus2-direct"


def test_certificate_round_trip_and_tamper():
    S = NormalizedSet(1, tuple((F(t), F(t * t)) for t in (0, 1, 2, 3, -1, F(1, 2), -2, 5)))
    for C, pts in ((ELLIPTIC, ELLIPTIC_PTS), (Curve.parse("y - x^2"), S)):
        cert = certify_curve(C, pts)
        text = cert.to_text()
        back = Certificate.from_text(text)
        assert back == cert and back.to_text() == text
    cert = certify_curve(ELLIPTIC, ELLIPTIC_PTS)
    wit = tuple((k, "7" if k == "ram_count" else v) for k, v in cert.witnesses)
    with pytest.raises(InternalInconsistency):
        verify_certificate(replace(cert, witnesses=wit))
    wit = tuple((k, "x^3" if k == "slice_plus" else v) for k, v in cert.witnesses)
    with pytest.raises(InternalInconsistency):
        verify_certificate(replace(cert, witnesses=wit))


def test_elliptic_sample_points_sweep():
    # desk-scale sanity sweep: rational points of small height on the certified curve
    found = []
    for num, den in product(range(-30, 31), range(1, 13)):
        x = F(num, den)
        rhs = x ** 3 - x
        if rhs == 0:
            found.append((x, F(0)))
            continue
        if rhs > 0:
            n, d = rhs.numerator, rhs.denominator
            rn, rd = int(n ** 0.5 + 0.5), int(d ** 0.5 + 0.5)
            if rn * rn == n and rd * rd == d:
                found.append((x, F(rn, rd)))
    assert sorted(set(found)) == [(-1, 0), (0, 0), (1, 0)]


def test_certify_over_sqrt3():
    C = Curve.parse("y^2 - x^3 + x", 3)
    cert = certify_curve(C, NormalizedSet(3, ((0, 0), (1, 0))))
    assert cert.case == "genus1-ramified" and cert.k == 3
    assert verify_certificate(Certificate.from_text(cert.to_text()))
    assert QF(3, 0, 1) * QF(3, 0, 1) == 3
