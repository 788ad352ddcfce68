"""Rational point sets: verification, inversion, normalization, general position,
curve fitting and the greedy extraction of a curve-general subset.

Normalized points are pairs ``(r1, r2)`` of rationals standing for the plane
point ``(r1, r2*sqrt(k))``; the radicand ``k`` is carried by the enclosing
:class:`NormalizedSet`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .arith import GQF, QF, QuadField, rational_sqrt, squarefree_radicand
from .errors import GeneralPositionViolated, InvalidInput, NotARationalSet
from .poly import BPoly

Point = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Pt:
    """A raw plane point with coordinates in a common Q(sqrt k)."""

    x: QF
    y: QF

    def __post_init__(self) -> None:
        if not isinstance(self.x, QF) or not isinstance(self.y, QF):
            raise InvalidInput("Pt coordinates must be QF values")
        if self.x.k != self.y.k:
            raise InvalidInput("Pt coordinates over different radicands")

    @property
    def k(self) -> int:
        return self.x.k

    def as_complex(self) -> GQF:
        return GQF(self.x, self.y)


@dataclass(frozen=True)
class NormalizedSet:
    k: int
    points: Tuple[Point, ...]
    verified: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        QuadField(self.k)  # validates the radicand
        pts = tuple((Fraction(a), Fraction(b)) for a, b in self.points)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def coords(self, i: int) -> Tuple[QF, QF]:
        r1, r2 = self.points[i]
        return QF(self.k, r1), QF(self.k, 0, r2)

    def with_points(self, points, verified: Optional[bool] = None) -> "NormalizedSet":
        return NormalizedSet(self.k, tuple(points), self.verified if verified is None else verified)


@dataclass(frozen=True)
class Similarity:
    """``z -> multiplier * (z - translation)`` in the complex model."""

    translation: GQF
    multiplier: GQF

    def __post_init__(self) -> None:
        if not self.multiplier:
            raise InvalidInput("similarity multiplier must be nonzero")

    def apply(self, z: GQF) -> GQF:
        return self.multiplier * (z - self.translation)


# ---------------------------------------------------------------------------
# distances


def dist2(p: Point, q: Point, k: int) -> Fraction:
    d1 = Fraction(p[0]) - Fraction(q[0])
    d2 = Fraction(p[1]) - Fraction(q[1])
    return d1 * d1 + k * d2 * d2


def verify_rational_set(S: NormalizedSet) -> Tuple[bool, Optional[Tuple[Point, Point]]]:
    """``(True, None)`` if every pairwise distance is rational, else ``(False, pair)``."""
    pts = S.points
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if rational_sqrt(dist2(pts[i], pts[j], S.k)) is None:
                return False, (pts[i], pts[j])
    return True, None


def invert_set(S: NormalizedSet, center: int, radius) -> NormalizedSet:
    """Image of ``S`` minus the center under inversion in the circle ``(center, radius)``.

    The map is ``p -> c + radius**2 (p - c) / |p - c|**2``.  Distances between
    images are ``radius**2 |p - q| / (|p - c| |q - c|)``, so a rational set
    stays rational.
    """
    radius = Fraction(radius)
    if radius <= 0:
        raise InvalidInput("inversion radius must be positive")
    if not 0 <= center < len(S.points):
        raise InvalidInput(f"center index {center} out of range")
    c = S.points[center]
    r2 = radius * radius
    out = []
    for i, p in enumerate(S.points):
        if i == center:
            continue
        d = dist2(p, c, S.k)
        if not d:
            raise InvalidInput("point coincides with the inversion center")
        s = r2 / d
        out.append((c[0] + s * (p[0] - c[0]), c[1] + s * (p[1] - c[1])))
    return S.with_points(out)


# ---------------------------------------------------------------------------
# normalization


def _raw_rational_check(raw: Sequence[Pt]) -> None:
    for i in range(len(raw)):
        for j in range(i + 1, len(raw)):
            dx = raw[i].x - raw[j].x
            dy = raw[i].y - raw[j].y
            d2 = dx * dx + dy * dy
            if d2.b or rational_sqrt(d2.a) is None:
                raise NotARationalSet(f"points {i} and {j} are at irrational distance", (i, j))


def normalize_set(raw: Sequence[Pt], anchor0: int = 0, anchor1: int = 1) -> Tuple[NormalizedSet, Similarity]:
    """Move two anchors to ``(0, 0)`` and ``(1, 0)`` and read off the common radicand.

    The anchors come first in the output, the remaining points follow in input
    order.  Every image must have the shape ``(r1, r2*sqrt k)`` for a single
    squarefree ``k``; any failure means the input was not a rational set.
    """
    raw = list(raw)
    n = len(raw)
    if not (0 <= anchor0 < n and 0 <= anchor1 < n):
        raise InvalidInput("anchor index out of range")
    if anchor0 == anchor1:
        raise InvalidInput("anchors must be distinct")
    m = raw[0].k
    if any(p.k != m for p in raw):
        raise InvalidInput("raw points over different radicands")
    p0, p1 = raw[anchor0].as_complex(), raw[anchor1].as_complex()
    if p0 == p1:
        raise InvalidInput("anchors are the same point")
    _raw_rational_check(raw)
    sim = Similarity(p0, (p1 - p0).inverse())
    order = [anchor0, anchor1] + [i for i in range(n) if i not in (anchor0, anchor1)]
    images = [sim.apply(raw[i].as_complex()) for i in order]
    k = None
    for w in images:
        if w.im:
            sq = w.im * w.im
            if sq.b:
                raise NotARationalSet("second coordinate has no common radicand form")
            k = squarefree_radicand(sq.a)
            break
    if k is None:
        k = 1
    if k not in (1, m):
        raise NotARationalSet(f"radicand {k} not representable over Q(sqrt {m})")
    pts = []
    for idx, w in zip(order, images):
        if w.re.b:
            raise NotARationalSet(f"image of point {idx} has an irrational first coordinate")
        if k == 1:
            if w.im.b:
                raise NotARationalSet(f"image of point {idx} breaks the common radicand")
            r2 = w.im.a
        else:
            if w.im.a:
                raise NotARationalSet(f"image of point {idx} breaks the common radicand")
            r2 = w.im.b
        pts.append((w.re.a, r2))
    return NormalizedSet(k, tuple(pts), True), sim


# ---------------------------------------------------------------------------
# incidence predicates


def _orient(p: Point, q: Point, r: Point) -> Fraction:
    return (q[0] - p[0]) * (r[1] - p[1]) - (r[0] - p[0]) * (q[1] - p[1])


def collinear(p: Point, q: Point, r: Point) -> bool:
    """Exact orientation test; rescaling the y-axis by sqrt k does not change it."""
    return _orient(p, q, r) == 0


def _det4(rows) -> Fraction:
    a, b, c, d = rows

    def det3(r0, r1, r2):
        return (r0[0] * (r1[1] * r2[2] - r1[2] * r2[1])
                - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
                + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]))

    # translate so the last row is the origin; the constant column drops out
    rel = [[r[0] - d[0], r[1] - d[1], r[2] - d[2]] for r in (a, b, c)]
    return -det3(*rel)


def circle_status(p: Point, q: Point, r: Point, s: Point, k: int = 1) -> str:
    """``"concyclic"``, ``"degenerate"`` (all on one line) or ``"generic"``."""
    rows = [(x * x + k * y * y, x, y) for x, y in (p, q, r, s)]
    if _det4(rows) != 0:
        return "generic"
    if collinear(p, q, r) and collinear(p, q, s):
        return "degenerate"
    return "concyclic"


def concyclic(p: Point, q: Point, r: Point, s: Point, k: int = 1) -> bool:
    return circle_status(p, q, r, s, k) == "concyclic"


def _integer_frame(S: NormalizedSet) -> List[Tuple[int, int]]:
    """Scale all points by a common denominator (a similarity, so incidences survive)."""
    den = 1
    for a, b in S.points:
        den = den * a.denominator // math.gcd(den, a.denominator)
        den = den * b.denominator // math.gcd(den, b.denominator)
    return [(int(a * den), int(b * den)) for a, b in S.points]


def verify_general_position(S: NormalizedSet):
    """``(True, None)`` or ``(False, ("collinear"|"concyclic", points))``."""
    P = _integer_frame(S)
    n = len(P)
    k = S.k
    for i, j, l in combinations(range(n), 3):
        (x1, y1), (x2, y2), (x3, y3) = P[i], P[j], P[l]
        if (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1) == 0:
            return False, ("collinear", (S.points[i], S.points[j], S.points[l]))
    lifted = [(x * x + k * y * y, x, y) for x, y in P]
    for quad in combinations(range(n), 4):
        if _det4([lifted[t] for t in quad]) == 0:
            # no three collinear here, so a vanishing determinant is a genuine circle
            return False, ("concyclic", tuple(S.points[t] for t in quad))
    return True, None


# ---------------------------------------------------------------------------
# curve fitting


def curve_point_count(d: int) -> int:
    """Number of points that generically determine a curve of degree ``d``."""
    return d * (d + 3) // 2


def monomials(d: int) -> List[Tuple[int, int]]:
    return [(i, t - i) for t in range(d, -1, -1) for i in range(t, -1, -1)]


def _rational_kernel(rows: List[List[Fraction]], ncols: int) -> List[List[Fraction]]:
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(m, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def _sqrt_k_power(k: int, j: int) -> QF:
    """``sqrt(k) ** -j`` as a field element."""
    if j % 2 == 0:
        return QF(k, Fraction(1, k ** (j // 2)))
    return QF(k, 0, Fraction(1, k ** ((j + 1) // 2)))


def _kernel_to_curves(basis, mons, k: int):
    from .curveops import Curve

    dom = QuadField(k)
    out = []
    for v in basis:
        terms = {m: _sqrt_k_power(k, m[1]) * c for m, c in zip(mons, v) if c}
        f = BPoly(terms, dom).canonical()
        out.append(Curve(f))
    return out


def fit_curve(points: Sequence[Point], d: int, k: int = 1):
    """Kernel basis of degree-``d`` curves through exactly ``d(d+3)/2`` points.

    Substituting ``y = sqrt(k) * Y`` turns the incidence matrix rational, so the
    kernel is computed over Q and scaled back.  One curve means the points
    determine a unique curve; more than one flags a degenerate configuration.
    """
    if d < 1:
        raise InvalidInput("curve degree must be positive")
    if len(points) != curve_point_count(d):
        raise InvalidInput(f"degree {d} needs exactly {curve_point_count(d)} points, got {len(points)}")
    mons = monomials(d)
    rows = [[Fraction(x) ** i * Fraction(y) ** j for i, j in mons] for x, y in points]
    return _kernel_to_curves(_rational_kernel(rows, len(mons)), mons, k)


def points_on_curve(S: NormalizedSet, C) -> List[Point]:
    if not C.f:
        raise InvalidInput("zero polynomial is not a curve")
    if C.k != S.k:
        raise InvalidInput(f"curve over Q(sqrt {C.k}) and set over Q(sqrt {S.k})")
    out = []
    for i, p in enumerate(S.points):
        x, y = S.coords(i)
        if not C.f.eval(x, y):
            out.append(p)
    return out


# ---------------------------------------------------------------------------
# greedy extraction


def _int_det(m: List[List[int]]) -> int:
    n = len(m)
    a = [row[:] for row in m]
    sign, prev = 1, 1
    for c in range(n - 1):
        if a[c][c] == 0:
            for r in range(c + 1, n):
                if a[r][c]:
                    a[c], a[r] = a[r], a[c]
                    sign = -sign
                    break
            else:
                return 0
        p = a[c][c]
        for i in range(c + 1, n):
            aic = a[i][c]
            ri, rc = a[i], a[c]
            for j in range(c + 1, n):
                ri[j] = (ri[j] * p - aic * rc[j]) // prev
        prev = p
    return sign * a[n - 1][n - 1]


class _CurveIncidence:
    """Integer-frame helper: vanishing of every degree-``d`` curve through a subset."""

    def __init__(self, S: NormalizedSet, max_d: int) -> None:
        self.S = S
        P = _integer_frame(S)
        self.k = S.k
        self.mons = {d: monomials(d) for d in range(1, max_d + 1)}
        # y -> sqrt(k) Y makes everything rational; scaling makes it integral
        self.vec = {d: [[x ** i * y ** j for i, j in self.mons[d]] for x, y in P]
                    for d in self.mons}

    def curves_through(self, idx: Sequence[int], d: int):
        """Integer coefficient vectors spanning the curves through ``idx`` (integer frame)."""
        rows = [self.vec[d][i] for i in idx]
        ncol = len(self.mons[d])
        cof = []
        for c in range(ncol):
            minor = [r[:c] + r[c + 1:] for r in rows]
            val = _int_det(minor)
            cof.append(-val if c % 2 else val)
        if any(cof):
            return [cof]
        basis = _rational_kernel([[Fraction(v) for v in r] for r in rows], ncol)
        out = []
        for v in basis:
            den = 1
            for c in v:
                den = den * c.denominator // math.gcd(den, c.denominator)
            out.append([int(c * den) for c in v])
        return out

    def on_all(self, basis, d: int, i: int) -> bool:
        vec = self.vec[d][i]
        return all(sum(a * b for a, b in zip(coeffs, vec)) == 0 for coeffs in basis)


def extract_curve_general(S: NormalizedSet, max_d: int) -> NormalizedSet:
    """Greedy subset in which no degree-``d`` curve (``d <= max_d``) through
    ``d(d+3)/2`` chosen points passes through a further chosen point.

    Points are considered in input order.  After each addition, every curve
    through a new ``d(d+3)/2``-subset containing the added point excludes all
    points of ``S`` on it.  When the subset does not determine a unique curve,
    only points on every curve of the pencil are excluded.
    """
    if max_d < 1:
        raise InvalidInput("max_d must be positive")
    ok, witness = verify_general_position(S)
    if not ok:
        raise GeneralPositionViolated(f"input is not in general position: {witness[0]}", witness)
    n = len(S.points)
    if n == 0:
        return S.with_points([])
    inc = _CurveIncidence(S, max_d)
    chosen: List[int] = []
    excluded = set()
    for cand in range(n):
        if cand in excluded:
            continue
        chosen.append(cand)
        excluded.add(cand)
        size = len(chosen)
        for d in range(1, max_d + 1):
            need = curve_point_count(d)
            if need > size:
                break
            for rest in combinations(chosen[:-1], need - 1):
                idx = list(rest) + [cand]
                basis = inc.curves_through(idx, d)
                for i in range(n):
                    if i not in excluded and inc.on_all(basis, d, i):
                        excluded.add(i)
    return S.with_points([S.points[i] for i in chosen])
