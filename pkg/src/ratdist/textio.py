"""Text formats: the polynomial expression grammar and the point-set file.

Polynomial grammar (whitespace is insignificant)::

    poly  := ['-'] term (('+'|'-') term)*
    term  := coeff ['*' monom] | monom
    monom := var ['^' nat] ['*' var ['^' nat]]
    coeff := rational ['*' 'r'] ['*' 'i']

``r`` stands for sqrt(k) of the ambient field and ``i`` for the imaginary
unit; the latter only appears in slices along the isotropic lines.  Factors
may come in any order, so ``x*2`` or ``r*y`` also parse.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .arith import GQF, QF, QQ, GaussQuadField, QuadField, RationalField, format_rational, parse_rational
from .errors import InvalidInput, PolySyntaxError

# ---------------------------------------------------------------------------
# polynomial parsing


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]) -> None:
        self.text = text
        self.pos = 0
        self.variables = tuple(variables)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, msg: str) -> PolySyntaxError:
        return PolySyntaxError(msg, self.pos)

    def nat(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a natural number")
        return int(self.text[start:self.pos])

    def factor(self):
        """Returns ``("num", Fraction)``, ``("r",)``, ``("i",)`` or ``("var", name, exp)``."""
        ch = self.peek()
        if ch.isdigit():
            num = self.nat()
            if self.peek() == "/":
                self.pos += 1
                den = self.nat()
                if den == 0:
                    raise self.error("zero denominator")
                return ("num", Fraction(num, den))
            return ("num", Fraction(num))
        if ch.isalpha():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isalnum():
                self.pos += 1
            name = self.text[start:self.pos]
            if name == "r":
                return ("r",)
            if name == "i":
                return ("i",)
            if name not in self.variables:
                self.pos = start
                raise self.error(f"unknown variable {name!r}")
            exp = 1
            if self.peek() == "^":
                self.pos += 1
                exp = self.nat()
            return ("var", name, exp)
        if not ch:
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected character {ch!r}")

    def term(self):
        coeff = Fraction(1)
        r_pow = i_pow = 0
        exps = {v: 0 for v in self.variables}
        while True:
            fac = self.factor()
            if fac[0] == "num":
                coeff *= fac[1]
            elif fac[0] == "r":
                r_pow += 1
            elif fac[0] == "i":
                i_pow += 1
            else:
                exps[fac[1]] += fac[2]
            if self.peek() == "*":
                self.pos += 1
                continue
            return coeff, r_pow, i_pow, exps

    def parse(self):
        terms = []
        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
        elif self.peek() == "+":
            self.pos += 1
        while True:
            coeff, rp, ip, exps = self.term()
            terms.append((sign * coeff, rp, ip, exps))
            ch = self.peek()
            if ch == "+":
                sign = 1
            elif ch == "-":
                sign = -1
            elif ch == "":
                return terms
            else:
                raise self.error(f"unexpected character {ch!r}")
            self.pos += 1


def _term_scalar(coeff: Fraction, rp: int, ip: int, k: int) -> GQF:
    real = QF(k, coeff) * QF.sqrt(k) ** rp
    unit = GQF.i(k) ** ip
    return unit * real


def parse_poly(text: str, k: int = 1, domain=None):
    """Parse a bivariate polynomial in ``x, y`` over Q(sqrt k).

    Without an explicit ``domain`` the result lives over ``QuadField(k)``,
    or over ``GaussQuadField(k)`` when the text uses ``i`` with a nonzero net
    effect.
    """
    from .poly import BPoly

    terms = _Parser(text, ("x", "y")).parse()
    acc = {}
    for coeff, rp, ip, exps in terms:
        m = (exps["x"], exps["y"])
        acc[m] = acc.get(m, GQF(QF(k, 0))) + _term_scalar(coeff, rp, ip, k)
    return _settle(acc, k, domain, BPoly)


def parse_upoly(text: str, var: str = "t", k: int = 1, domain=None):
    from .poly import UPoly

    terms = _Parser(text, (var,)).parse()
    acc = {}
    for coeff, rp, ip, exps in terms:
        e = exps[var]
        acc[e] = acc.get(e, GQF(QF(k, 0))) + _term_scalar(coeff, rp, ip, k)
    n = max(acc) + 1 if acc else 0
    coeffs = [acc.get(e, GQF(QF(k, 0))) for e in range(n)]
    dom = _pick_domain(coeffs, k, domain)
    return UPoly([_down(c, dom) for c in coeffs], dom, var)


def _pick_domain(values, k: int, domain):
    if domain is not None:
        return domain
    if any(v.im for v in values):
        return GaussQuadField(k)
    return QuadField(k)


def _down(c: GQF, dom):
    if isinstance(dom, GaussQuadField):
        return c
    if c.im:
        raise InvalidInput("imaginary coefficient in a real polynomial")
    if isinstance(dom, RationalField):
        if c.re.b:
            raise InvalidInput("irrational coefficient in a rational polynomial")
        return c.re.a
    return c.re


def _settle(acc, k, domain, BPoly):
    dom = _pick_domain(list(acc.values()), k, domain)
    return BPoly({m: _down(c, dom) for m, c in acc.items()}, dom)


# ---------------------------------------------------------------------------
# polynomial printing


def _scalar_pieces(c) -> List[Tuple[Fraction, str]]:
    """Split a coefficient into ``(rational, unit)`` pieces with unit in '', r, i, r*i."""
    if isinstance(c, (int, Fraction)):
        return [(Fraction(c), "")] if c else []
    if isinstance(c, QF):
        out = []
        if c.a:
            out.append((c.a, ""))
        if c.b:
            out.append((c.b, "r"))
        return out
    if isinstance(c, GQF):
        out = _scalar_pieces(c.re)
        out += [(q, (u + "*i") if u else "i") for q, u in _scalar_pieces(c.im)]
        return out
    raise InvalidInput(f"cannot format coefficient {c!r}")


def _monomial(parts: Sequence[Tuple[str, int]]) -> str:
    out = []
    for v, e in parts:
        if e == 1:
            out.append(v)
        elif e > 1:
            out.append(f"{v}^{e}")
    return "*".join(out)


def _join(pieces: List[Tuple[Fraction, str, str]]) -> str:
    if not pieces:
        return "0"
    chunks = []
    for n, (q, unit, mono) in enumerate(pieces):
        neg = q < 0
        mag = abs(q)
        body = [f for f in (format_rational(mag) if (mag != 1 or not (unit or mono)) else "", unit, mono) if f]
        text = "*".join(body)
        if n == 0:
            chunks.append(("-" if neg else "") + text)
        else:
            chunks.append((" - " if neg else " + ") + text)
    return "".join(chunks)


def format_bpoly(f) -> str:
    """Terms by total degree, then by descending power of x."""
    pieces = []
    for m in sorted(f.terms, key=lambda m: (-(m[0] + m[1]), -m[0])):
        mono = _monomial((("x", m[0]), ("y", m[1])))
        for q, unit in _scalar_pieces(f.terms[m]):
            pieces.append((q, unit, mono))
    return _join(pieces)


def format_upoly(f) -> str:
    from .poly import PolyRing

    if isinstance(f.domain, PolyRing):
        parts = []
        for e in range(len(f.coeffs) - 1, -1, -1):
            c = f.coeffs[e]
            if c:
                parts.append(f"({format_upoly(c)})" + (f"*{_monomial(((f.var, e),))}" if e else ""))
        return " + ".join(parts) if parts else "0"
    pieces = []
    for e in range(len(f.coeffs) - 1, -1, -1):
        mono = _monomial(((f.var, e),))
        for q, unit in _scalar_pieces(f.coeffs[e]):
            pieces.append((q, unit, mono))
    return _join(pieces)


def format_scalar(c) -> str:
    return _join([(q, u, "") for q, u in _scalar_pieces(c)])


def parse_scalar(text: str, k: int = 1):
    """Inverse of :func:`format_scalar`; returns a GQF reduced as far as possible."""
    f = parse_upoly(text, "t", k)
    if f.degree > 0:
        raise InvalidInput(f"expected a constant, got {text!r}")
    c = f[0]
    return c


# ---------------------------------------------------------------------------
# point-set files


def _data_lines(text: str):
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_pointset(text: str):
    """Parse a point-set file.

    Returns a :class:`NormalizedSet` for ``k``-headed files and a list of
    :class:`Pt` for ``raw m`` files.
    """
    from .geom import NormalizedSet, Pt

    lines = list(_data_lines(text))
    if not lines:
        raise InvalidInput("empty point-set file")
    lineno, head = lines[0]
    if len(head) != 2 or head[0] not in ("k", "raw"):
        raise InvalidInput(f"line {lineno}: expected 'k <int>' or 'raw <int>' header")
    try:
        k = int(head[1])
    except ValueError:
        raise InvalidInput(f"line {lineno}: bad radicand {head[1]!r}") from None
    QuadField(k)
    raw = head[0] == "raw"
    pts = []
    for lineno, toks in lines[1:]:
        if toks[0] != "point":
            raise InvalidInput(f"line {lineno}: expected 'point'")
        vals = [parse_rational(t) for t in toks[1:]]
        if raw:
            if len(vals) != 4:
                raise InvalidInput(f"line {lineno}: raw points need 4 components")
            pts.append(Pt(QF(k, vals[0], vals[1]), QF(k, vals[2], vals[3])))
        else:
            if len(vals) != 2:
                raise InvalidInput(f"line {lineno}: points need 2 components")
            pts.append((vals[0], vals[1]))
    if raw:
        return pts
    return NormalizedSet(k, tuple(pts))


def format_pointset(S) -> str:
    """Canonical text for a :class:`NormalizedSet` or a list of raw :class:`Pt`."""
    if isinstance(S, (list, tuple)):
        k = S[0].k if S else 1
        lines = [f"raw {k}"]
        for p in S:
            comps = (p.x.a, p.x.b, p.y.a, p.y.b)
            lines.append("point " + " ".join(format_rational(c) for c in comps))
        return "\n".join(lines) + "\n"
    lines = [f"k {S.k}"]
    for a, b in S.points:
        lines.append(f"point {format_rational(a)} {format_rational(b)}")
    return "\n".join(lines) + "\n"
