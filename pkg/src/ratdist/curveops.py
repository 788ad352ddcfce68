"""Plane curve analysis over Q(sqrt k).

Slices along lines through the origin, the bad-slope discriminant, counting
ramification of the cone cover over the isotropic lines, inversion of curves,
singular points of cubics, the cubic normal form with its parametrization,
the quadratics ``Q_j`` and detection of line and circle components.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .arith import GQF, QF, QQ, GaussQuadField, QuadField, RationalField
from .errors import (
    CommonRoot,
    DegenerateCurve,
    DegenerateParameter,
    InternalInconsistency,
    InvalidInput,
    IsotropicComponent,
    MultipleRoot,
    NotApplicable,
    PoolExhausted,
    ReducibleCurve,
    RemainderNonzero,
    UnsupportedDegree,
    WrongCase,
)
from .geom import Similarity
from .poly import (
    BPoly,
    PolyRing,
    UPoly,
    discriminant,
    exact_divide,
    field_roots,
    poly_gcd,
    resultant,
    solve_bivariate,
    squarefree_part,
    substitute,
)

# ---------------------------------------------------------------------------
# curves


def _as_quad(f: BPoly) -> BPoly:
    if isinstance(f.domain, RationalField):
        return f.map_coeffs(lambda c: QF(1, c), QuadField(1))
    if not isinstance(f.domain, QuadField):
        raise InvalidInput(f"curves must be defined over Q(sqrt k), not {f.domain}")
    return f


@dataclass(frozen=True)
class Curve:
    """Plane curve ``f(x, y) = 0`` with ``f`` over Q(sqrt k)."""

    f: BPoly

    def __post_init__(self) -> None:
        if not isinstance(self.f, BPoly):
            raise InvalidInput("a curve needs a bivariate polynomial")
        if not self.f:
            raise InvalidInput("zero polynomial is not a curve")
        object.__setattr__(self, "f", _as_quad(self.f))
        if self.f.total_degree < 1:
            raise InvalidInput("nonzero constant polynomial defines no curve")

    @classmethod
    def parse(cls, text: str, k: int = 1) -> "Curve":
        from .textio import parse_poly

        return cls(parse_poly(text, k, QuadField(k)))

    @property
    def k(self) -> int:
        return self.f.domain.k

    @property
    def degree(self) -> int:
        return self.f.total_degree

    @property
    def domain(self) -> QuadField:
        return self.f.domain

    def contains(self, x, y) -> bool:
        return not self.f.eval(x, y)

    def canonical(self) -> "Curve":
        return Curve(self.f.canonical())

    def __str__(self) -> str:
        return str(self.f)


def _lin(dom, cx, cy, c0) -> BPoly:
    """The linear polynomial ``cx*x + cy*y + c0``."""
    return BPoly({(1, 0): cx, (0, 1): cy, (0, 0): c0}, dom)


def affine_substitute(C: Curve, ax, bx, cx, ay, by, cy) -> Curve:
    """``f(ax*x + bx*y + cx, ay*x + by*y + cy)``."""
    dom = C.domain
    return Curve(substitute(C.f, _lin(dom, ax, bx, cx), _lin(dom, ay, by, cy)))


def translate_curve(C: Curve, px, py) -> Curve:
    """Move the point ``(px, py)`` to the origin."""
    return affine_substitute(C, 1, 0, px, 0, 1, py)


def similarity_pullback(C: Curve, sim: Similarity) -> Curve:
    """Image of ``C`` under ``z -> m (z - t)``: the curve ``f(t + Z/m)``."""
    inv = sim.multiplier.inverse()
    u, v = inv.re, inv.im
    t = sim.translation
    return affine_substitute(C, u, -v, t.re, v, u, t.im)


def point_coords(p, k: int) -> Tuple[QF, QF]:
    """Field coordinates of a normalized pair ``(r1, r2)``."""
    return QF(k, p[0]), QF(k, 0, p[1])


def origin_nonsingular(C: Curve) -> bool:
    if C.f.coeff(0, 0):
        raise InvalidInput("the origin is not on the curve")
    return bool(C.f.coeff(1, 0)) or bool(C.f.coeff(0, 1))


def rotate_to_axis(C: Curve, p) -> Tuple[Curve, Tuple[QF, QF]]:
    """Rotate about the origin so that the point ``p`` lands on ``(|p|, 0)``.

    ``p`` is a normalized pair ``(r1, r2)``; the witness returned is
    ``(cos, sin)`` of the rotation angle, both in Q(sqrt k).
    """
    from .arith import rational_sqrt
    from .geom import dist2

    k = C.k
    r1, r2 = Fraction(p[0]), Fraction(p[1])
    if not r1 and not r2:
        raise InvalidInput("cannot rotate the origin onto the axis")
    rho = rational_sqrt(dist2((r1, r2), (0, 0), k))
    if rho is None:
        raise InvalidInput("distance from the origin is irrational")
    x0, y0 = point_coords((r1, r2), k)
    if C.f.eval(x0, y0):
        raise InvalidInput("point is not on the curve")
    cos, sin = QF(k, r1 / rho), QF(k, 0, r2 / rho)
    # (X, Y) -> rotate by +theta gives back the old coordinates
    return affine_substitute(C, cos, -sin, 0, sin, cos, 0), (cos, sin)


def _slice_domain(C: Curve, a):
    if isinstance(a, GQF):
        return GaussQuadField(C.k)
    return C.domain


def _lift(f: BPoly, dom) -> BPoly:
    if f.domain == dom:
        return f
    if isinstance(dom, GaussQuadField):
        return f.map_coeffs(lambda c: GQF(c), dom)
    raise InvalidInput(f"cannot lift {f.domain} to {dom}")


def line_slice(C: Curve, a) -> UPoly:
    """``p_a(x) = f(x, a*x)``."""
    dom = _slice_domain(C, a)
    a = dom.coerce(a)
    f = _lift(C.f, dom)
    deg = f.total_degree
    coeffs = [dom.zero] * (deg + 1)
    powers = {}
    for (i, j), c in f.terms.items():
        if j not in powers:
            powers[j] = a ** j
        coeffs[i + j] = coeffs[i + j] + c * powers[j]
    return UPoly(coeffs, dom, "x")


def _vertical_content(C: Curve) -> UPoly:
    """gcd in x of the coefficients of the powers of y."""
    g = None
    for coeff in C.f.as_upoly_over("y").coeffs:
        if coeff:
            g = coeff if g is None else poly_gcd(g, coeff)
    return g


def bad_slope_discriminant(C: Curve) -> UPoly:
    """``D(a) = disc_x f(x, a x)`` as a polynomial in the slope ``a``.

    Every slope along which the slice has a multiple root is a root of ``D``;
    slopes where the slice drops degree are included through the leading
    coefficient.
    """
    if C.degree < 2:
        raise InvalidInput("bad slopes need a curve of degree at least 2")
    content = _vertical_content(C)
    if content is not None and content.degree >= 1:
        raise DegenerateCurve(f"curve has a vertical line component; x-content {content}")
    base = C.domain
    ring = PolyRing(base, "a")
    deg = C.degree
    buckets = [dict() for _ in range(deg + 1)]
    for (i, j), c in C.f.terms.items():
        buckets[i + j][j] = c
    coeffs = []
    for b in buckets:
        n = max(b) + 1 if b else 0
        coeffs.append(UPoly([b.get(t, 0) for t in range(n)], base, "a"))
    pa = UPoly(coeffs, ring, "x")
    if pa.degree < 1:
        raise DegenerateCurve("slices are constant")
    D = discriminant(pa)
    if not D:
        raise DegenerateCurve("bad-slope discriminant vanishes identically")
    return D


# ---------------------------------------------------------------------------
# ramification over the isotropic lines


def isotropic_slices(C: Curve) -> Tuple[UPoly, UPoly]:
    """``f(x, i x)`` and ``f(x, -i x)`` over Q(sqrt k)(i)."""
    i = GQF.i(C.k)
    return line_slice(C, i), line_slice(C, -i)


def simple_nonzero_roots(g: UPoly) -> int:
    """Number of nonzero roots of multiplicity one in an algebraic closure."""
    if not g:
        raise InvalidInput("zero polynomial has no finite root count")
    cs = list(g.coeffs)
    while cs and not cs[0]:
        cs.pop(0)
    h = UPoly(cs, g.domain, g.var)
    if h.degree < 1:
        return 0
    distinct = squarefree_part(h).degree
    repeated = poly_gcd(h, h.derivative())
    multiple = squarefree_part(repeated).degree if repeated.degree >= 1 else 0
    return distinct - multiple


def cone_ramification_count(C: Curve) -> int:
    """Points ``(x0, +-i x0)``, ``x0 != 0``, where the slice has a simple root."""
    if C.f.coeff(0, 0):
        raise InvalidInput("the origin is not on the curve")
    total = 0
    for s in isotropic_slices(C):
        if not s:
            raise IsotropicComponent("curve contains an isotropic line through the origin")
        total += simple_nonzero_roots(s)
    return total


# ---------------------------------------------------------------------------
# inversion


def _circle_form(dom) -> BPoly:
    return BPoly({(2, 0): 1, (0, 2): 1}, dom)


def invert_curve(C: Curve) -> Tuple[Curve, int]:
    """Image under ``(x, y) -> (x, y)/(x^2 + y^2)`` with the clearing exponent.

    Returns the canonical polynomial ``(x^2+y^2)^kappa f(x/r, y/r)`` for the
    least ``kappa`` that makes it a polynomial.
    """
    f = C.f
    d = f.total_degree
    dom = f.domain
    r = _circle_form(dom)
    rp = [BPoly.const(1, dom)]
    for _ in range(d):
        rp.append(rp[-1] * r)
    g = BPoly({}, dom)
    for m in range(d + 1):
        part = f.homogeneous_part(m)
        if part:
            g = g + part * rp[d - m]
    kappa = d
    while kappa > 0:
        q, rem = g.divide_monic(r, "y")
        if rem:
            break
        g = q
        kappa -= 1
    return Curve(g.canonical()), kappa


# ---------------------------------------------------------------------------
# singular points


def find_singular_points(C: Curve, max_deg: int = 3) -> List[Tuple[QF, QF]]:
    """Singular points of ``C`` with coordinates in Q(sqrt k).

    For an irreducible cubic the singular point is unique, hence fixed by
    conjugation, hence defined over the base field, so nothing is lost by
    searching only there.
    """
    if C.degree > max_deg:
        raise UnsupportedDegree(f"singular points only for degree <= {max_deg}, got {C.degree}")
    f = C.f
    eqs = [f, f.diff("x"), f.diff("y")]
    pts = solve_bivariate(eqs, C.domain)
    out = []
    for p in pts:
        if p not in out:
            out.append(p)
    return out


# ---------------------------------------------------------------------------
# the cubic normal form


@dataclass(frozen=True)
class CubicNormalForm:
    """``(-x + b y)(x^2 + y^2) + x^2 + d y^2 + e x y``."""

    b: QF
    d: QF
    e: QF

    def __post_init__(self) -> None:
        ks = {v.k for v in (self.b, self.d, self.e) if isinstance(v, QF)}
        if len(ks) > 1:
            raise InvalidInput("normal form coefficients over different fields")
        k = ks.pop() if ks else 1
        for name in ("b", "d", "e"):
            object.__setattr__(self, name, QuadField(k).coerce(getattr(self, name)))
        if not self.b and not self.d:
            raise ReducibleCurve("b = d = 0: the cubic contains the line x = 0")
        p, q = cubic_parametrize(self)
        if not resultant(p, q):
            raise ReducibleCurve("p and q share a root: the normal form cubic is reducible")

    @property
    def k(self) -> int:
        return self.b.k

    def polynomial(self) -> BPoly:
        dom = QuadField(self.k)
        lin = BPoly({(1, 0): -1, (0, 1): self.b}, dom)
        quad = BPoly({(2, 0): 1, (0, 2): self.d, (1, 1): self.e}, dom)
        return lin * _circle_form(dom) + quad

    def curve(self) -> Curve:
        return Curve(self.polynomial())


def cubic_normal_form_from(b, d, e, k: int = 1) -> CubicNormalForm:
    dom = QuadField(k)
    return CubicNormalForm(dom.coerce(b), dom.coerce(d), dom.coerce(e))


def cubic_k2_normalize(C: Curve, witness) -> Tuple[CubicNormalForm, Similarity]:
    """Bring a singular cubic whose cubic part contains ``x^2 + y^2`` to normal form.

    The singular point goes to the origin and ``witness`` (a normalized pair
    on ``C``) goes to ``(1, 0)``.  The similarity has coefficients in
    Q(sqrt k)(i); the distance from the witness to the singular point need not
    be rational, which only rescales the distance polynomials by a constant.
    """
    if C.degree != 3:
        raise InvalidInput("cubic_k2_normalize needs a cubic")
    k = C.k
    top = C.f.homogeneous_part(3)
    _, rem = top.divide_monic(_circle_form(C.domain), "y")
    if rem:
        raise WrongCase("cubic part is not divisible by x^2 + y^2")
    wx, wy = point_coords(witness, k)
    if C.f.eval(wx, wy):
        raise InvalidInput("witness point is not on the curve")
    try:
        sing = find_singular_points(C)
    except DegenerateCurve as exc:
        raise ReducibleCurve(f"singular locus is not finite: {exc}") from None
    if not sing:
        raise NotApplicable("no singular point over the base field")
    if len(sing) > 1:
        raise ReducibleCurve("a cubic with several singular points is reducible")
    sx, sy = sing[0]
    if (sx, sy) == (wx, wy):
        raise InvalidInput("witness coincides with the singular point")
    t = GQF(sx, sy)
    sim = Similarity(t, (GQF(wx, wy) - t).inverse())
    g = similarity_pullback(C, sim).f
    c = g.coeff(2, 0)
    if not c:
        raise ReducibleCurve("normalized cubic contains the line y = 0")
    g = g * (1 / c)
    a = g.coeff(3, 0)
    if a != -1:
        raise InternalInconsistency(f"normalization left x^3 coefficient {a}")
    nf = CubicNormalForm(g.coeff(0, 3), g.coeff(0, 2), g.coeff(1, 1))
    if nf.polynomial() != g:
        raise InternalInconsistency("normalized cubic is not of the expected shape")
    return nf, sim


def cubic_parametrize(nf: CubicNormalForm) -> Tuple[UPoly, UPoly]:
    """``y = p(t)/q(t)``, ``x = t y`` along the lines ``x = t y``."""
    dom = QuadField(nf.b.k)
    p = UPoly([nf.d, nf.e, 1], dom, "t")
    q = UPoly([-nf.b, 1], dom, "t") * UPoly([1, 0, 1], dom, "t")
    return p, q


def parametrization_identity(nf: CubicNormalForm) -> UPoly:
    """Numerator of ``f(t p/q, p/q)`` after clearing ``q^3``; zero when the parametrization is right."""
    p, q = cubic_parametrize(nf)
    t = UPoly.gen(p.domain, "t")
    total = UPoly([], p.domain, "t")
    for (i, j), c in nf.polynomial().terms.items():
        total = total + (t ** i) * (p ** (i + j)) * (q ** (3 - i - j)) * c
    return total


# ---------------------------------------------------------------------------
# the quadratics Q_j


def qj_formulas(nf: CubicNormalForm, tj) -> Tuple[QF, QF, QF]:
    """Closed forms for the coefficients ``c2, c1, c0`` of ``Q_j`` at ``t_j``.

    The middle coefficient carries ``-b^2 d`` in its linear term; see
    :func:`printed_c1` for the variant with ``-b d``.
    """
    b, d, e = nf.b, nf.d, nf.e
    c2 = (1 + (e + b) ** 2) * tj ** 2 + 2 * (b * d + d * e - b) * tj + d ** 2 + b ** 2
    c1 = (2 * (b * d + d * e - b) * tj ** 2
          + 2 * (b ** 2 + d ** 2 - b * e * d - b ** 2 * d - b * e - d) * tj
          + 2 * (b * d + b ** 2 * e - b * d ** 2))
    c0 = ((d ** 2 + b ** 2) * tj ** 2 + 2 * (b ** 2 * e + d * b - d ** 2 * b) * tj
          + b ** 2 * e ** 2 + b ** 2 * d ** 2 + d ** 2 + 2 * e * b * d)
    return c2, c1, c0


def printed_c1(nf: CubicNormalForm, tj) -> QF:
    """Middle coefficient with ``-b d`` in place of ``-b^2 d``.

    It differs from the true coefficient by ``2 b d (b - 1) t_j``; kept so the
    discrepancy can be tested.
    """
    b, d, e = nf.b, nf.d, nf.e
    return (2 * (b * d + d * e - b) * tj ** 2
            + 2 * (b ** 2 + d ** 2 - b * e * d - b * d - b * e - d) * tj
            + 2 * (b * d + b ** 2 * e - b * d ** 2))


def printed_leading_display(nf: CubicNormalForm, tj) -> QF:
    """``(t_j^2+1)`` times the quadratic in ``t_j`` displayed as the leading coefficient."""
    c2, _, c0 = qj_formulas(nf, tj)
    return (tj ** 2 + 1) * c0


def printed_constant_display(nf: CubicNormalForm, tj) -> QF:
    c2, _, c0 = qj_formulas(nf, tj)
    return (tj ** 2 + 1) * c2


@dataclass(frozen=True)
class QjData:
    t_j: QF
    Q: UPoly
    c2: QF
    c1: QF
    c0: QF
    disc: QF = field(compare=False, default=None)


def distance_polynomial(nf: CubicNormalForm, tj) -> UPoly:
    """The degree-6 polynomial ``(p q_j - p_j q)^2 + (t p q_j - t_j p_j q)^2``."""
    p, q = cubic_parametrize(nf)
    pj, qj = p(tj), q(tj)
    t = UPoly.gen(p.domain, "t")
    u = p * qj - q * pj
    v = t * p * qj - q * (tj * pj)
    return u * u + v * v


def qj_build(nf: CubicNormalForm, tj) -> QjData:
    """Strip ``(t - t_j)^2 (t^2 + 1) (t_j^2 + 1)`` from the distance polynomial."""
    dom = QuadField(nf.k)
    tj = dom.coerce(tj)
    p, q = cubic_parametrize(nf)
    if not q(tj):
        raise DegenerateParameter(f"q(t_j) = 0 at t_j = {tj}")
    if not p(tj):
        raise DegenerateParameter(f"t_j = {tj} parametrizes the singular point")
    c2, c1, c0 = qj_formulas(nf, tj)
    if not c2 or not c0:
        raise DegenerateParameter(f"c2 or c0 vanishes at t_j = {tj}")
    D = distance_polynomial(nf, tj)
    if D.degree != 6:
        raise InternalInconsistency(f"distance polynomial has degree {D.degree}, expected 6")
    lin = UPoly([-tj, 1], dom, "t")
    strip = lin * lin * UPoly([1, 0, 1], dom, "t") * (tj * tj + 1)
    try:
        Q = exact_divide(D, strip)
    except RemainderNonzero as exc:
        raise InternalInconsistency(f"factor does not divide: {exc}") from None
    if (Q[2], Q[1], Q[0]) != (c2, c1, c0):
        raise InternalInconsistency("Q_j disagrees with the closed-form coefficients")
    disc = c1 * c1 - 4 * c2 * c0
    if disc.sign() >= 0:
        raise DegenerateParameter(f"Q_j at t_j = {tj} has a real root (discriminant {disc})")
    return QjData(tj, Q, c2, c1, c0, disc)


def forced_common_roots(nf: CubicNormalForm) -> Optional[Tuple[QF, QF]]:
    """The only roots a family of ``Q_j`` could share: ``b`` and ``(be+d-d^2)/(bd+de-b)``."""
    b, d, e = nf.b, nf.d, nf.e
    den = b * d + d * e - b
    if not den:
        return None
    return b, (b * e + d - d * d) / den


def select_coprime_qj(nf: CubicNormalForm, candidates: Sequence) -> List[QjData]:
    """First three candidates (in order) giving pairwise coprime ``Q_j``."""
    dom = QuadField(nf.k)
    chosen: List[QjData] = []
    seen = set()
    diagnostics = []
    circle = UPoly([1, 0, 1], dom, "t")
    for raw in candidates:
        tj = dom.coerce(raw)
        if tj in seen:
            diagnostics.append((tj, "duplicate candidate"))
            continue
        seen.add(tj)
        try:
            data = qj_build(nf, tj)
        except DegenerateParameter as exc:
            diagnostics.append((tj, str(exc)))
            continue
        if poly_gcd(data.Q, circle).degree >= 1:
            diagnostics.append((tj, "Q_j shares a root with t^2 + 1"))
            continue
        clash = next((o for o in chosen if poly_gcd(o.Q, data.Q).degree >= 1), None)
        if clash is not None:
            diagnostics.append((tj, f"shares a root with Q at t_j = {clash.t_j}"))
            continue
        chosen.append(data)
        if len(chosen) == 3:
            return chosen
    raise PoolExhausted(f"found {len(chosen)} pairwise coprime Q_j, need 3", diagnostics)


@dataclass(frozen=True)
class HyperModel:
    """``z^2 = rhs``; the genus is recorded only for a squarefree right-hand side."""

    rhs: UPoly
    squarefree: bool
    genus: Optional[int]


def product_hyperelliptic(q1: QjData, q2: QjData, q3: QjData) -> HyperModel:
    """``z^2 = (t^2 + 1) Q_1 Q_2 Q_3`` with the squarefree check."""
    dom = q1.Q.domain
    circle = UPoly([1, 0, 1], dom, "t")
    named = [("t^2+1", circle), ("Q1", q1.Q), ("Q2", q2.Q), ("Q3", q3.Q)]
    for i in range(len(named)):
        for j in range(i + 1, len(named)):
            g = poly_gcd(named[i][1], named[j][1])
            if g.degree >= 1:
                raise CommonRoot(f"{named[i][0]} and {named[j][0]} share the factor {g}",
                                 (named[i][0], named[j][0]))
    rhs = circle * q1.Q * q2.Q * q3.Q
    if squarefree_part(rhs).degree != rhs.degree:
        raise MultipleRoot("right-hand side has a repeated root", poly_gcd(rhs, rhs.derivative()))
    return HyperModel(rhs, True, (rhs.degree - 1) // 2)


# ---------------------------------------------------------------------------
# line and circle components


@dataclass(frozen=True)
class FactorReport:
    lines: Tuple[BPoly, ...]
    circles: Tuple[BPoly, ...]
    degenerate_circles: Tuple[BPoly, ...]
    cofactor: BPoly

    @property
    def found(self) -> bool:
        return bool(self.lines or self.circles or self.degenerate_circles)


def _common_roots_in(coeffs: Sequence[UPoly]) -> list:
    g = None
    for c in coeffs:
        if c:
            g = c if g is None else poly_gcd(g, c)
    if g is None:
        raise DegenerateCurve("polynomial vanishes identically")
    return field_roots(g) if g.degree >= 1 else []


def _find_line(f: BPoly) -> Optional[BPoly]:
    dom = f.domain
    # vertical lines x = c
    for c in _common_roots_in(f.as_upoly_over("y").coeffs):
        return BPoly({(1, 0): 1, (0, 0): -c}, dom)
    top = f.top_form()
    slope_poly = UPoly([top.coeff(top.total_degree - j, j) for j in range(top.total_degree + 1)], dom, "m")
    if slope_poly.degree < 1:
        return None
    ring = PolyRing(dom, "c")
    for m in field_roots(slope_poly):
        xe = UPoly([0, 1], ring, "x")
        ye = UPoly([UPoly([0, 1], dom, "c"), m], ring, "x")
        s = UPoly([], ring, "x")
        for (i, j), coef in f.terms.items():
            s = s + (xe ** i) * (ye ** j) * coef
        for c in _common_roots_in(s.coeffs):
            return BPoly({(0, 1): 1, (1, 0): -m, (0, 0): -c}, dom)
    return None


def _find_circle(f: BPoly) -> Optional[BPoly]:
    dom = f.domain
    k = dom.k
    if f.total_degree < 2:
        return None
    gdom = GaussQuadField(k)
    ring = PolyRing(gdom, "c")
    fg = _lift(f, gdom)
    i = GQF.i(k)
    xe = UPoly([0, 1], ring, "x")
    ye = UPoly([UPoly([0, 1], gdom, "c"), i], ring, "x")
    s = UPoly([], ring, "x")
    for (a, b), coef in fg.terms.items():
        s = s + (xe ** a) * (ye ** b) * coef
    if not s:
        return None
    for cstar in field_roots(s.lc) if s.lc.degree >= 1 else []:
        alpha = 2 * cstar.im
        beta = -2 * cstar.re
        cx, cy = -alpha / 2, -beta / 2
        F = translate_curve(Curve(f), cx, cy).f
        for rad2 in _radius_candidates(F):
            gamma = alpha * alpha / 4 + beta * beta / 4 - rad2
            return BPoly({(2, 0): 1, (0, 2): 1, (1, 0): alpha, (0, 1): beta, (0, 0): gamma}, dom)
    return None


def _radius_candidates(F: BPoly) -> list:
    """Values ``s`` with ``x^2 + y^2 - s`` dividing ``F``."""
    dom = F.domain
    ring = PolyRing(dom, "s")
    sv = UPoly([0, 1], dom, "s")
    base = UPoly([sv, 0, -1], ring, "x")  # s - x^2
    A = UPoly([], ring, "x")
    B = UPoly([], ring, "x")
    powers = {0: UPoly([1], ring, "x")}
    for (i, j), c in F.terms.items():
        h = j // 2
        if h not in powers:
            powers[h] = base ** h
        term = powers[h] * UPoly([0] * i + [1], ring, "x") * c
        if j % 2:
            B = B + term
        else:
            A = A + term
    coeffs = list(A.coeffs) + list(B.coeffs)
    if not any(coeffs):
        raise DegenerateCurve("every concentric circle divides the curve")
    return _common_roots_in(coeffs)


def _is_degenerate_circle(c: BPoly) -> bool:
    alpha, beta, gamma = c.coeff(1, 0), c.coeff(0, 1), c.coeff(0, 0)
    return (alpha * alpha / 4 + beta * beta / 4 - gamma).sign() <= 0


def line_circle_factor(C: Curve) -> FactorReport:
    """Peel off every line and circle component defined over Q(sqrt k)."""
    if C.degree > 4:
        raise UnsupportedDegree(f"line/circle detection handles degree <= 4, got {C.degree}")
    f = C.f
    lines, circles, degenerate = [], [], []
    while f.total_degree >= 1:
        line = _find_line(f)
        if line is not None:
            var = "y" if line.coeff(0, 1) else "x"
            f = f.exact_div_monic(line, var)
            lines.append(line)
            continue
        circle = _find_circle(f)
        if circle is not None:
            f = f.exact_div_monic(circle, "y")
            (degenerate if _is_degenerate_circle(circle) else circles).append(circle)
            continue
        break
    return FactorReport(tuple(lines), tuple(circles), tuple(degenerate), f)
