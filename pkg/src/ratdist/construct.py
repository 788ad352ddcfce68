"""Generators of rational and integral point sets."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Dict, List, Sequence, Tuple

from .errors import InvalidInput, NotARationalSet, SearchTooLarge
from .geom import NormalizedSet, invert_set, verify_rational_set

SEARCH_LIMIT = 10 ** 9


def _distinct(values: Sequence, what: str) -> List[Fraction]:
    vals = [Fraction(v) for v in values]
    if len(set(vals)) != len(vals):
        raise InvalidInput(f"duplicate {what}")
    return vals


def unit_circle_rational_set(params: Sequence) -> NormalizedSet:
    """Points ``z_t**2`` for ``z_t = ((1-t^2) + 2ti)/(1+t^2)`` on the unit circle.

    Squaring doubles the angle, so the chord between two images is
    ``2|sin(theta_s - theta_t)|`` with rational sine; the result is still
    checked rather than trusted.
    """
    ts = _distinct(params, "parameter")
    pts = []
    for t in ts:
        n = 1 + t * t
        c, s = (1 - t * t) / n, 2 * t / n
        pts.append((c * c - s * s, 2 * c * s))
    if len(set(pts)) != len(pts):
        # t and -1/t give the same square
        raise InvalidInput("parameters produce a duplicate point")
    S = NormalizedSet(1, tuple(pts))
    ok, w = verify_rational_set(S)
    if not ok:
        raise NotARationalSet("circle construction produced an irrational distance", w)
    return S.with_points(pts, verified=True)


def line_rational_set(values: Sequence) -> NormalizedSet:
    vals = _distinct(values, "value")
    return NormalizedSet(1, tuple((v, Fraction(0)) for v in vals), True)


def transfer_line_to_circle(S: NormalizedSet, center: int, radius) -> NormalizedSet:
    """Invert about an off-axis point so the axis points land on one circle."""
    if not 0 <= center < len(S.points):
        raise InvalidInput(f"center index {center} out of range")
    if not S.points[center][1]:
        raise InvalidInput("center lies on the axis; the axis would map to a line")
    return invert_set(S, center, radius)


def default_circle_params(n: int) -> List[Fraction]:
    """``n`` distinct parameters in (0, 1) whose images are distinct: 1/2, 1/3, 2/3, 1/4, ..."""
    out: List[Fraction] = []
    q = 2
    while len(out) < n:
        for p in range(1, q):
            t = Fraction(p, q)
            if t.denominator == q:
                out.append(t)
                if len(out) == n:
                    break
        q += 1
    return out


# ---------------------------------------------------------------------------
# integral sets


@dataclass(frozen=True)
class SearchConfig:
    n_points: int
    bound: int
    general_position: bool = True

    def __post_init__(self) -> None:
        if self.n_points < 3:
            raise InvalidInput("integral search needs n_points >= 3")
        if self.bound < 1:
            raise InvalidInput("coordinate bound must be positive")


@dataclass(frozen=True)
class IntegralSet:
    key: Tuple[int, ...]
    points: Tuple[Tuple[int, int], ...]

    @property
    def distances(self) -> Tuple[int, ...]:
        return tuple(sorted(self.key))


def search_estimate(cfg: SearchConfig) -> int:
    """Rough count of primitive steps: all pairs, then one scan per extension level."""
    n_lattice = (cfg.bound + 1) ** 2
    return n_lattice * (n_lattice - 1) // 2 * (1 + n_lattice * (cfg.n_points - 2))


def congruence_key(points: Sequence[Tuple[int, int]]) -> Tuple[int, ...]:
    """Lexicographically least distance list over all labelings.

    Two finite planar sets are congruent exactly when some labeling gives the
    same distance matrix, so this key is a complete congruence invariant.
    """
    n = len(points)
    d = [[math.isqrt((a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2) for b in points] for a in points]
    best = None
    for perm in permutations(range(n)):
        row = tuple(d[perm[i]][perm[j]] for i in range(n) for j in range(i + 1, n))
        if best is None or row < best:
            best = row
    return best


def _collinear(a, b, c) -> bool:
    return (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]) == 0


def _concyclic(a, b, c, d) -> bool:
    rows = []
    for p in (a, b, c):
        x, y = p[0] - d[0], p[1] - d[1]
        rows.append((x * x + y * y, x, y))
    (a1, a2, a3), (b1, b2, b3), (c1, c2, c3) = rows
    return a1 * (b2 * c3 - b3 * c2) - a2 * (b1 * c3 - b3 * c1) + a3 * (b1 * c2 - b2 * c1) == 0


def integral_search(cfg: SearchConfig, limit: int = SEARCH_LIMIT) -> List[IntegralSet]:
    """All integral sets of ``n`` lattice points in ``[0, B]^2`` up to congruence.

    A set is recorded when its smallest x and smallest y are both 0 (every
    set has exactly one such translate).  Classes are keyed by
    :func:`congruence_key`; each keeps its lexicographically least sorted point
    tuple.  Output is sorted by key.
    """
    est = search_estimate(cfg)
    if est > limit:
        raise SearchTooLarge(est, limit)
    B, n = cfg.bound, cfg.n_points
    pts = [(x, y) for x in range(B + 1) for y in range(B + 1)]
    N = len(pts)
    adj = [set() for _ in range(N)]
    for i in range(N):
        xi, yi = pts[i]
        for j in range(i + 1, N):
            dx, dy = pts[j][0] - xi, pts[j][1] - yi
            s = dx * dx + dy * dy
            r = math.isqrt(s)
            if r * r == s:
                adj[i].add(j)
                adj[j].add(i)
    found: Dict[Tuple[int, ...], Tuple[Tuple[int, int], ...]] = {}
    chosen: List[int] = []

    def compatible(c: int) -> bool:
        if not cfg.general_position:
            return True
        p = pts[c]
        cur = [pts[i] for i in chosen]
        m = len(cur)
        for a in range(m):
            for b in range(a + 1, m):
                if _collinear(cur[a], cur[b], p):
                    return False
        for a in range(m):
            for b in range(a + 1, m):
                for e in range(b + 1, m):
                    if _concyclic(cur[a], cur[b], cur[e], p):
                        return False
        return True

    def extend(cands: List[int]) -> None:
        if len(chosen) == n:
            sel = [pts[i] for i in chosen]
            if min(p[1] for p in sel) != 0:
                return
            key = congruence_key(sel)
            rep = tuple(sorted(sel))
            if key not in found or rep < found[key]:
                found[key] = rep
            return
        for c in cands:
            if compatible(c):
                chosen.append(c)
                extend([d for d in cands if d > c and d in adj[c]])
                chosen.pop()

    # the lexicographically first point has the least x, which must be 0
    for first in range(B + 1):
        chosen.append(first)
        extend(sorted(j for j in adj[first] if j > first))
        chosen.pop()
    return [IntegralSet(k, found[k]) for k in sorted(found)]
