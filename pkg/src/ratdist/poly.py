"""Exact univariate and bivariate polynomials over Q, Q(sqrt k), Q(sqrt k)(i).

:class:`UPoly` may also take coefficients in a univariate polynomial ring
(:class:`PolyRing`), which is how discriminants "as a polynomial in the slope"
and bivariate resultants are computed without a general multivariate stack.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import Poly, Symbol

from .arith import GQF, QF, QQ, Domain, GaussQuadField, QuadField, RationalField
from .errors import DegenerateCurve, FieldMismatch, InvalidInput, RemainderNonzero

NEG_INF = float("-inf")
_SYM_X = Symbol("x")


class PolyRing(Domain):
    """Univariate polynomials over ``base`` used as a coefficient ring."""

    is_field = False

    def __init__(self, base: Domain, var: str = "a") -> None:
        self.base = base
        self.var = var

    def _key(self):
        return (self.base, self.var)

    def coerce(self, x) -> "UPoly":
        if isinstance(x, UPoly):
            if x.domain != self.base:
                raise FieldMismatch(f"polynomial over {x.domain} used in {self}")
            return x
        return UPoly([self.base.coerce(x)], self.base, self.var)

    def exact_div(self, a, b):
        return exact_divide(a, b)

    def __repr__(self) -> str:
        return f"{self.base!r}[{self.var}]"


def domain_of(x) -> Domain:
    if isinstance(x, GQF):
        return GaussQuadField(x.k)
    if isinstance(x, QF):
        return QuadField(x.k)
    if isinstance(x, (int, Fraction)):
        return QQ
    if isinstance(x, UPoly):
        return PolyRing(x.domain, x.var)
    raise InvalidInput(f"no coefficient domain for {x!r}")


# ---------------------------------------------------------------------------
# univariate


class UPoly:
    """Dense univariate polynomial; ``coeffs[i]`` multiplies ``var**i``."""

    __slots__ = ("coeffs", "domain", "var")

    def __init__(self, coeffs: Iterable, domain: Domain = QQ, var: str = "x") -> None:
        cs = [domain.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.domain = domain
        self.var = var

    @classmethod
    def _raw(cls, coeffs: list, domain: Domain, var: str) -> "UPoly":
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        obj = object.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.domain = domain
        obj.var = var
        return obj

    @classmethod
    def gen(cls, domain: Domain = QQ, var: str = "x") -> "UPoly":
        return cls([0, 1], domain, var)

    @classmethod
    def const(cls, c, domain: Domain = QQ, var: str = "x") -> "UPoly":
        return cls([c], domain, var)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.domain.zero

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.domain.zero

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def _lift(self, other) -> "UPoly":
        if isinstance(other, UPoly) and (other.domain == self.domain):
            return other
        if isinstance(other, UPoly) and isinstance(self.domain, PolyRing) and other.domain == self.domain.base:
            return UPoly._raw([other], self.domain, self.var)
        if isinstance(other, UPoly):
            raise FieldMismatch(f"polynomials over {self.domain} and {other.domain}")
        return UPoly._raw([self.domain.coerce(other)], self.domain, self.var)

    def __add__(self, other):
        o = self._lift(other)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UPoly._raw(out, self.domain, self.var)

    __radd__ = __add__

    def __neg__(self) -> "UPoly":
        return UPoly._raw([-c for c in self.coeffs], self.domain, self.var)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, UPoly) or (isinstance(self.domain, PolyRing) and other.domain == self.domain.base):
            c = self.domain.coerce(other)
            return UPoly._raw([x * c for x in self.coeffs], self.domain, self.var)
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return UPoly._raw([], self.domain, self.var)
        out = [self.domain.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return UPoly._raw(out, self.domain, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UPoly":
        if not isinstance(n, int) or n < 0:
            raise InvalidInput("polynomial powers must be nonnegative integers")
        result = UPoly._raw([self.domain.one], self.domain, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs and (self.domain == other.domain or not self.coeffs)
        if isinstance(other, (int, Fraction, QF, GQF)):
            if not self.coeffs:
                return other == 0
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return self.domain.zero
        return acc

    def derivative(self) -> "UPoly":
        return UPoly._raw([c * i for i, c in enumerate(self.coeffs)][1:], self.domain, self.var)

    def scale(self, c) -> "UPoly":
        c = self.domain.coerce(c)
        return UPoly._raw([x * c for x in self.coeffs], self.domain, self.var)

    def monic(self) -> "UPoly":
        if not self.coeffs:
            return self
        if not self.domain.is_field:
            raise InvalidInput("monic needs field coefficients")
        inv = self.domain.one / self.lc
        return UPoly._raw([c * inv for c in self.coeffs], self.domain, self.var)

    def divmod(self, g: "UPoly") -> Tuple["UPoly", "UPoly"]:
        """Division with remainder; needs ``lc(g)`` to divide every step exactly."""
        g = self._lift(g)
        if not g:
            raise ZeroDivisionError("polynomial division by zero")
        dom = self.domain
        rem = list(self.coeffs)
        dg = len(g.coeffs) - 1
        lcg = g.coeffs[-1]
        if len(rem) <= dg:
            return UPoly._raw([], dom, self.var), self
        quo = [dom.zero] * (len(rem) - dg)
        for i in range(len(rem) - 1, dg - 1, -1):
            c = rem[i]
            if not c:
                continue
            q = dom.exact_div(c, lcg)
            quo[i - dg] = q
            for j, gc in enumerate(g.coeffs):
                rem[i - dg + j] = rem[i - dg + j] - q * gc
        return UPoly._raw(quo, dom, self.var), UPoly._raw(rem[:dg], dom, self.var)

    def pseudo_rem(self, g: "UPoly") -> "UPoly":
        """``lc(g)**(deg f - deg g + 1) * f mod g`` computed without division."""
        g = self._lift(g)
        if not g:
            raise ZeroDivisionError("pseudo-remainder by zero")
        dg = g.degree
        rem = list(self.coeffs)
        if len(rem) - 1 < dg:
            return self
        lcg = g.coeffs[-1]
        steps = len(rem) - 1 - dg + 1
        for i in range(len(rem) - 1, dg - 1, -1):
            c = rem[i]
            rem = [x * lcg for x in rem]
            steps -= 1
            for j, gc in enumerate(g.coeffs):
                rem[i - dg + j] = rem[i - dg + j] - c * gc
            rem[i] = self.domain.zero
        # steps is now zero: every iteration multiplied by lc(g) once
        return UPoly._raw(rem[:dg] if dg > 0 else [], self.domain, self.var)

    def map_coeffs(self, fn, domain: Domain) -> "UPoly":
        return UPoly([fn(c) for c in self.coeffs], domain, self.var)

    def with_var(self, var: str) -> "UPoly":
        return UPoly._raw(list(self.coeffs), self.domain, var)

    def compose(self, g: "UPoly") -> "UPoly":
        """``self(g)`` for a polynomial ``g`` over the same domain."""
        g = self._lift(g) if isinstance(g, UPoly) else g
        acc = UPoly._raw([], self.domain, g.var)
        for c in reversed(self.coeffs):
            acc = acc * g + c
        return acc

    def __repr__(self) -> str:
        return f"UPoly({list(self.coeffs)!r}, {self.domain!r}, {self.var!r})"

    def __str__(self) -> str:
        from .textio import format_upoly

        return format_upoly(self)


def _same_domain(f: UPoly, g: UPoly) -> None:
    if not isinstance(f, UPoly) or not isinstance(g, UPoly):
        raise InvalidInput("expected polynomials")
    if f.domain != g.domain:
        raise InvalidInput(f"mixed coefficient domains {f.domain} and {g.domain}")


def exact_divide(f: UPoly, g: UPoly) -> UPoly:
    """Quotient ``f / g``; raises :class:`RemainderNonzero` unless exact."""
    _same_domain(f, g)
    if not g:
        raise ZeroDivisionError("exact_divide by the zero polynomial")
    if not f.domain.is_field:
        q = _ring_exact_divide(f, g)
        return q
    q, r = f.divmod(g)
    if r:
        raise RemainderNonzero(r)
    return q


def _ring_exact_divide(f: UPoly, g: UPoly) -> UPoly:
    dom = f.domain
    rem = list(f.coeffs)
    dg = len(g.coeffs) - 1
    lcg = g.coeffs[-1]
    if len(rem) - 1 < dg:
        if rem:
            raise RemainderNonzero(f)
        return UPoly._raw([], dom, f.var)
    quo = [dom.zero] * (len(rem) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        if not c:
            continue
        try:
            q = dom.exact_div(c, lcg)
        except RemainderNonzero:
            raise RemainderNonzero(UPoly._raw(rem, dom, f.var)) from None
        quo[i - dg] = q
        for j, gc in enumerate(g.coeffs):
            rem[i - dg + j] = rem[i - dg + j] - q * gc
    if any(rem[:dg]):
        raise RemainderNonzero(UPoly._raw(rem[:dg], dom, f.var))
    return UPoly._raw(quo, dom, f.var)


def poly_gcd(f: UPoly, g: UPoly) -> UPoly:
    """Monic gcd via the subresultant remainder sequence."""
    _same_domain(f, g)
    if not f.domain.is_field:
        raise InvalidInput("poly_gcd needs field coefficients")
    if not f and not g:
        return f
    if not g:
        return f.monic()
    if not f:
        return g.monic()
    if f.degree < g.degree:
        f, g = g, f
    dom = f.domain
    one = dom.one
    d = f.degree - g.degree
    b = -one if (d + 1) % 2 else one
    h = f.pseudo_rem(g).scale(b)
    lc = g.lc
    c = lc ** d
    c = -c
    while h:
        k = h.degree
        f, g, d = g, h, g.degree - k
        b = -lc * c ** d
        h = f.pseudo_rem(g).scale(one / b)
        lc = g.lc
        if d > 1:
            c = (-lc) ** d / c ** (d - 1)
        else:
            c = -lc
    return g.monic()


def squarefree_part(f: UPoly) -> UPoly:
    """Monic product of the distinct irreducible factors of ``f``."""
    if not f:
        raise InvalidInput("squarefree_part of the zero polynomial")
    if f.degree == 0:
        return UPoly([1], f.domain, f.var)
    return exact_divide(f, poly_gcd(f, f.derivative())).monic()


def bareiss_det(rows: List[list], dom: Domain):
    """Fraction-free determinant; only exact divisions in ``dom`` are used."""
    n = len(rows)
    if n == 0:
        return dom.one
    m = [list(r) for r in rows]
    sign = 1
    prev = dom.one
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return dom.zero
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                val = row_i[j] * pivot - mik * row_k[j]
                row_i[j] = dom.exact_div(val, prev) if val else val
            row_i[k] = dom.zero
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def sylvester_matrix(f: UPoly, g: UPoly) -> List[list]:
    n, m = f.degree, g.degree
    size = n + m
    zero = f.domain.zero
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(m):
        rows.append([zero] * i + fc + [zero] * (size - i - len(fc)))
    for i in range(n):
        rows.append([zero] * i + gc + [zero] * (size - i - len(gc)))
    return rows


def resultant(f: UPoly, g: UPoly):
    """Sylvester determinant, ``lc(f)**deg(g) * prod g(alpha)`` over roots of ``f``."""
    _same_domain(f, g)
    if not f or not g:
        raise InvalidInput("resultant of the zero polynomial")
    return bareiss_det(sylvester_matrix(f, g), f.domain)


def discriminant(f: UPoly):
    """``(-1)**(d(d-1)/2) * Res(f, f') / lc(f)``; zero iff ``f`` has a multiple root."""
    if not isinstance(f, UPoly) or not f or f.degree < 1:
        raise InvalidInput("discriminant needs a polynomial of degree >= 1")
    d = f.degree
    if d == 1:
        return f.domain.one
    r = resultant(f, f.derivative())
    q = f.domain.exact_div(r, f.lc)
    return -q if (d * (d - 1) // 2) % 2 else q


# ---------------------------------------------------------------------------
# roots


def _integer_coeffs(f: UPoly) -> List[int]:
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return [c // g for c in ints]


def rational_roots(f: UPoly) -> List[Fraction]:
    """Distinct rational roots of a rational polynomial, in increasing order.

    Roots are read off the linear factors of sympy's factorization over Q.
    """
    if not isinstance(f.domain, RationalField):
        raise InvalidInput("rational_roots is defined for rational coefficients only")
    if not f:
        raise InvalidInput("rational_roots of the zero polynomial")
    if f.degree < 1:
        return []
    ints = _integer_coeffs(f)
    _, factors = Poly(list(reversed(ints)), _SYM_X, domain="ZZ").factor_list()
    roots = set()
    for fac, _mult in factors:
        if fac.degree() == 1:
            a, b = (int(c) for c in fac.all_coeffs())
            roots.add(Fraction(-b, a))
    return sorted(roots)


def _split_parts(h: "BPoly", which: str) -> Tuple["BPoly", "BPoly"]:
    if which == "sqrt":
        base = QQ
        p0 = h.map_coeffs(lambda c: c.a, base)
        p1 = h.map_coeffs(lambda c: c.b, base)
    else:
        base = QuadField(h.domain.k)
        p0 = h.map_coeffs(lambda c: c.re, base)
        p1 = h.map_coeffs(lambda c: c.im, base)
    return p0, p1


def field_roots(f: UPoly) -> list:
    """Distinct roots of ``f`` lying in its own coefficient field.

    Over Q this is the rational root theorem.  Over Q(sqrt k) a root
    ``a + b*sqrt k`` is found by solving the rational system obtained from the
    two components of ``f(a + b*sqrt k)``; over Q(sqrt k)(i) the same is done
    one level down with ``a + b*i``.
    """
    if not f:
        raise InvalidInput("field_roots of the zero polynomial")
    dom = f.domain
    if isinstance(dom, RationalField):
        return rational_roots(f)
    if f.degree < 1:
        return []
    f = squarefree_part(f)
    if f.degree == 1:
        return [-f[0] / f[1]]
    if isinstance(dom, QuadField):
        k = dom.k
        if k == 1:
            rat = UPoly([c.a for c in f.coeffs], QQ, f.var)
            return [QF(1, r) for r in rational_roots(rat)]
        gen = BPoly.x(dom) + BPoly.y(dom) * QF(k, 0, 1)
        h = substitute_upoly(f, gen)
        p0, p1 = _split_parts(h, "sqrt")
        sols = solve_bivariate([p0, p1], QQ)
        roots = [QF(k, a, b) for a, b in sols]
    elif isinstance(dom, GaussQuadField):
        k = dom.k
        gen = BPoly.x(dom) + BPoly.y(dom) * GQF.i(k)
        h = substitute_upoly(f, gen)
        p0, p1 = _split_parts(h, "i")
        sols = solve_bivariate([p0, p1], QuadField(k))
        roots = [GQF(a, b) for a, b in sols]
    else:
        raise InvalidInput(f"field_roots not available over {dom}")
    return [r for r in roots if not f(r)]


def substitute_upoly(f: UPoly, g):
    """Evaluate ``f`` at a polynomial ``g`` (Horner)."""
    acc = None
    for c in reversed(f.coeffs):
        acc = g * 0 + c if acc is None else acc * g + c
    return acc


def solve_bivariate(polys: Sequence["BPoly"], dom: Domain) -> List[tuple]:
    """Common zeros in ``dom x dom`` of bivariate polynomials (finite case only)."""
    polys = [p for p in polys if p]
    if not polys:
        raise DegenerateCurve("every equation vanishes identically")
    if any(p.total_degree == 0 for p in polys):
        return []
    xs = _eliminate_to(polys, "x")
    out = []
    for x0 in xs:
        uni = [p.eval_x(x0) for p in polys]
        uni = [u for u in uni if u]
        if not uni:
            raise DegenerateCurve(f"vertical line x = {x0} is a common component")
        g = uni[0]
        for u in uni[1:]:
            g = poly_gcd(g, u)
        if g.degree < 1:
            continue
        for y0 in field_roots(g):
            if all(not p.eval(x0, y0) for p in polys):
                out.append((x0, y0))
    return out


def _eliminate_to(polys: Sequence["BPoly"], keep: str) -> list:
    other = "y" if keep == "x" else "x"
    pure = [p for p in polys if p.degree_in(other) == 0]
    if pure:
        g = None
        for p in pure:
            u = p.as_upoly(keep)
            g = u if g is None else poly_gcd(g, u)
        return field_roots(g) if g.degree >= 1 else []
    for p, q in combinations(polys, 2):
        r = resultant(p.as_upoly_over(other), q.as_upoly_over(other))
        if r:
            return field_roots(r) if r.degree >= 1 else []
    raise DegenerateCurve("equations share a common component")


# ---------------------------------------------------------------------------
# bivariate


def _mono_key(m: Tuple[int, int]):
    # graded order, higher y-power first within a degree
    return (-(m[0] + m[1]), -m[1])


class BPoly:
    """Sparse bivariate polynomial ``{(i, j): c}`` for ``c * x**i * y**j``."""

    __slots__ = ("terms", "domain")

    def __init__(self, terms: Dict[Tuple[int, int], object] = None, domain: Domain = QQ) -> None:
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise InvalidInput("negative exponent")
            c = domain.coerce(c)
            if c:
                clean[(int(i), int(j))] = c
        self.terms = clean
        self.domain = domain

    @classmethod
    def _raw(cls, terms: dict, domain: Domain) -> "BPoly":
        obj = object.__new__(cls)
        obj.terms = terms
        obj.domain = domain
        return obj

    @classmethod
    def x(cls, domain: Domain = QQ) -> "BPoly":
        return cls({(1, 0): 1}, domain)

    @classmethod
    def y(cls, domain: Domain = QQ) -> "BPoly":
        return cls({(0, 1): 1}, domain)

    @classmethod
    def const(cls, c, domain: Domain = QQ) -> "BPoly":
        return cls({(0, 0): c}, domain)

    @classmethod
    def from_upoly(cls, f: UPoly, var: str = "x") -> "BPoly":
        if var == "x":
            return cls({(i, 0): c for i, c in enumerate(f.coeffs)}, f.domain)
        return cls({(0, j): c for j, c in enumerate(f.coeffs)}, f.domain)

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def total_degree(self):
        if not self.terms:
            return NEG_INF
        return max(i + j for i, j in self.terms)

    def degree_in(self, var: str):
        if not self.terms:
            return NEG_INF
        idx = 0 if var == "x" else 1
        return max(m[idx] for m in self.terms)

    def coeff(self, i: int, j: int):
        return self.terms.get((i, j), self.domain.zero)

    def monomials(self) -> List[Tuple[int, int]]:
        return sorted(self.terms, key=_mono_key)

    def leading_coeff(self):
        """Coefficient of the first monomial in graded order (higher y-power first)."""
        if not self.terms:
            return self.domain.zero
        return self.terms[self.monomials()[0]]

    def _lift(self, other) -> "BPoly":
        if isinstance(other, BPoly):
            if other.domain != self.domain:
                raise FieldMismatch(f"bivariate polynomials over {self.domain} and {other.domain}")
            return other
        if isinstance(other, UPoly):
            raise FieldMismatch("cannot mix UPoly and BPoly implicitly")
        c = self.domain.coerce(other)
        return BPoly._raw({(0, 0): c} if c else {}, self.domain)

    def __add__(self, other):
        o = self._lift(other)
        out = dict(self.terms)
        for m, c in o.terms.items():
            v = out.get(m)
            v = c if v is None else v + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return BPoly._raw(out, self.domain)

    __radd__ = __add__

    def __neg__(self) -> "BPoly":
        return BPoly._raw({m: -c for m, c in self.terms.items()}, self.domain)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, (BPoly, UPoly)):
            c = self.domain.coerce(other)
            if not c:
                return BPoly._raw({}, self.domain)
            return BPoly._raw({m: v * c for m, v in self.terms.items()}, self.domain)
        o = self._lift(other)
        out: Dict[Tuple[int, int], object] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in o.terms.items():
                m = (i1 + i2, j1 + j2)
                v = out.get(m)
                out[m] = a * b if v is None else v + a * b
        return BPoly._raw({m: c for m, c in out.items() if c}, self.domain)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BPoly":
        if not isinstance(n, int) or n < 0:
            raise InvalidInput("polynomial powers must be nonnegative integers")
        result = BPoly.const(1, self.domain)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, BPoly):
            return self.terms == other.terms and (self.domain == other.domain or not self.terms)
        if isinstance(other, (int, Fraction, QF, GQF)):
            if not self.terms:
                return other == 0
            return list(self.terms) == [(0, 0)] and self.terms[(0, 0)] == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def eval(self, x0, y0):
        xp: Dict[int, object] = {}
        yp: Dict[int, object] = {}
        acc = self.domain.zero
        for (i, j), c in self.terms.items():
            if i not in xp:
                xp[i] = x0 ** i
            if j not in yp:
                yp[j] = y0 ** j
            acc = acc + c * xp[i] * yp[j]
        return acc

    __call__ = eval

    def eval_x(self, x0) -> UPoly:
        """Univariate polynomial in y after fixing ``x = x0``."""
        out: Dict[int, object] = {}
        for (i, j), c in self.terms.items():
            out[j] = out.get(j, self.domain.zero) + c * x0 ** i
        n = max(out) + 1 if out else 0
        return UPoly([out.get(j, 0) for j in range(n)], self.domain, "y")

    def eval_y(self, y0) -> UPoly:
        out: Dict[int, object] = {}
        for (i, j), c in self.terms.items():
            out[i] = out.get(i, self.domain.zero) + c * y0 ** j
        n = max(out) + 1 if out else 0
        return UPoly([out.get(i, 0) for i in range(n)], self.domain, "x")

    def substitute(self, xe, ye):
        """Compose with polynomial expressions ``x -> xe``, ``y -> ye``."""
        return substitute(self, xe, ye)

    def diff(self, var: str) -> "BPoly":
        out = {}
        for (i, j), c in self.terms.items():
            if var == "x" and i:
                out[(i - 1, j)] = c * i
            elif var == "y" and j:
                out[(i, j - 1)] = c * j
        return BPoly._raw(out, self.domain)

    def homogeneous_part(self, m: int) -> "BPoly":
        return BPoly._raw({k: c for k, c in self.terms.items() if k[0] + k[1] == m}, self.domain)

    def top_form(self) -> "BPoly":
        d = self.total_degree
        return self.homogeneous_part(d) if self.terms else self

    def map_coeffs(self, fn, domain: Domain) -> "BPoly":
        return BPoly({m: fn(c) for m, c in self.terms.items()}, domain)

    def as_upoly(self, var: str) -> UPoly:
        """Univariate view when only ``var`` occurs."""
        idx = 0 if var == "x" else 1
        if any(m[1 - idx] for m in self.terms):
            raise InvalidInput(f"polynomial is not univariate in {var}")
        n = self.degree_in(var)
        n = n + 1 if self.terms else 0
        return UPoly([self.terms.get((e, 0) if idx == 0 else (0, e), 0) for e in range(n)], self.domain, var)

    def as_upoly_over(self, main: str) -> UPoly:
        """View as a polynomial in ``main`` with coefficients polynomials in the other variable."""
        other = "y" if main == "x" else "x"
        ring = PolyRing(self.domain, other)
        buckets: Dict[int, Dict[int, object]] = {}
        for (i, j), c in self.terms.items():
            e_main, e_other = (i, j) if main == "x" else (j, i)
            buckets.setdefault(e_main, {})[e_other] = c
        n = max(buckets) + 1 if buckets else 0
        coeffs = []
        for e in range(n):
            b = buckets.get(e, {})
            m = max(b) + 1 if b else 0
            coeffs.append(UPoly([b.get(t, 0) for t in range(m)], self.domain, other))
        return UPoly(coeffs, ring, main)

    def divide_monic(self, g: "BPoly", var: str = "y") -> Tuple["BPoly", "BPoly"]:
        """Divide by ``g`` whose leading coefficient in ``var`` is 1."""
        g = self._lift(g)
        qf, rf = self.as_upoly_over(var).divmod(g.as_upoly_over(var))
        return _from_nested(qf, var, self.domain), _from_nested(rf, var, self.domain)

    def exact_div_monic(self, g: "BPoly", var: str = "y") -> "BPoly":
        q, r = self.divide_monic(g, var)
        if r:
            raise RemainderNonzero(r)
        return q

    def canonical(self) -> "BPoly":
        """Scale so the first coefficient in graded order (y-heavy first) is 1."""
        if not self.terms:
            return self
        lc = self.leading_coeff()
        inv = self.domain.one / lc
        return BPoly._raw({m: c * inv for m, c in self.terms.items()}, self.domain)

    def __repr__(self) -> str:
        return f"BPoly({self.terms!r}, {self.domain!r})"

    def __str__(self) -> str:
        from .textio import format_bpoly

        return format_bpoly(self)


def _from_nested(f: UPoly, main: str, domain: Domain) -> BPoly:
    terms = {}
    for e_main, inner in enumerate(f.coeffs):
        for e_other, c in enumerate(inner.coeffs):
            if c:
                terms[(e_main, e_other) if main == "x" else (e_other, e_main)] = c
    return BPoly._raw(terms, domain)


def substitute(f: BPoly, xe, ye):
    """``f(xe, ye)`` where ``xe, ye`` are both UPoly or both BPoly over ``f``'s field."""
    for e in (xe, ye):
        if not isinstance(e, (UPoly, BPoly)):
            raise InvalidInput("substitution expressions must be polynomials")
        if e.domain != f.domain:
            raise InvalidInput(f"expression over {e.domain} substituted into polynomial over {f.domain}")
    if type(xe) is not type(ye):
        raise InvalidInput("both expressions must be UPoly or both BPoly")
    if isinstance(xe, UPoly) and xe.var != ye.var and xe.degree > 0 and ye.degree > 0:
        raise InvalidInput("univariate expressions in different variables")
    if isinstance(xe, UPoly):
        var = xe.var if xe.degree > 0 else ye.var
        xe, ye = xe.with_var(var), ye.with_var(var)
        zero = UPoly([], f.domain, var)
    else:
        zero = BPoly({}, f.domain)
    xp = {0: zero + 1}
    yp = {0: zero + 1}
    acc = zero
    for (i, j), c in f.terms.items():
        if i not in xp:
            xp[i] = xe ** i
        if j not in yp:
            yp[j] = ye ** j
        acc = acc + xp[i] * yp[j] * c
    return acc
