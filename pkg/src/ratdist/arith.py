"""Exact arithmetic: rationals, squarefree integers, Q(sqrt k) and Q(sqrt k)(i).

Rationals are :class:`fractions.Fraction`.  Elements of the real quadratic
field are :class:`QF` values ``a + b*sqrt(k)`` and elements of its extension
by ``i`` are :class:`GQF` values ``re + im*i``.  Nothing here touches floating
point.

Plain ``int``/``Fraction`` operands are accepted everywhere since Q sits inside
every Q(sqrt k).  Mixing two different radicands raises :class:`FieldMismatch`;
use :func:`embed` to lift values explicitly.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple, Union

from sympy import factorint

from .errors import FieldMismatch, InvalidInput

Rat = Fraction
Scalar = Union[int, Fraction]

_RAT_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; the sign may only sit on the numerator."""
    m = _RAT_RE.match(text)
    if not m:
        raise InvalidInput(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise InvalidInput(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# -- integers ---------------------------------------------------------------

def squarefree_decompose(n: int) -> Tuple[int, int]:
    """Return ``(s, m)`` with ``n == s * m**2`` and ``s`` squarefree."""
    if not isinstance(n, int) or isinstance(n, bool) or n <= 0:
        raise InvalidInput(f"squarefree_decompose needs a positive integer, got {n!r}")
    s, m = 1, 1
    for p, e in factorint(n).items():
        m *= p ** (e // 2)
        if e % 2:
            s *= p
    return s, m


def is_squarefree(n: int) -> bool:
    return n >= 1 and squarefree_decompose(n)[0] == n


def squarefree_radicand(q) -> int:
    """Squarefree ``s`` such that the positive rational ``q`` is ``s`` times a rational square."""
    q = Fraction(q)
    if q <= 0:
        raise InvalidInput(f"squarefree part needs a positive rational, got {q}")
    return squarefree_decompose(q.numerator * q.denominator)[0]


def rational_sqrt(q) -> Optional[Fraction]:
    """Nonnegative rational square root of ``q``, or ``None`` if irrational."""
    q = Fraction(q)
    if q < 0:
        raise InvalidInput(f"rational_sqrt of negative value {q}")
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _check_k(k: int) -> int:
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise InvalidInput(f"radicand must be a positive integer, got {k!r}")
    if not _sqf_cached(k):
        raise InvalidInput(f"radicand {k} is not squarefree")
    return k


@lru_cache(maxsize=256)
def _sqf_cached(k: int) -> bool:
    return is_squarefree(k)


# -- Q(sqrt k) ----------------------------------------------------------------

class QF:
    """Element ``a + b*sqrt(k)`` of a real quadratic field (``k == 1`` means Q)."""

    __slots__ = ("k", "a", "b")

    def __init__(self, k: int, a=0, b=0) -> None:
        k = _check_k(k)
        a = Fraction(a)
        b = Fraction(b)
        if k == 1 and b:
            a, b = a + b, Fraction(0)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("QF values are immutable")

    @classmethod
    def _raw(cls, k: int, a: Fraction, b: Fraction) -> "QF":
        obj = object.__new__(cls)
        object.__setattr__(obj, "k", k)
        object.__setattr__(obj, "a", a)
        object.__setattr__(obj, "b", b)
        return obj

    @classmethod
    def sqrt(cls, k: int) -> "QF":
        return cls(k, 0, 1)

    def _coerce(self, other) -> "QF":
        if isinstance(other, QF):
            if other.k != self.k:
                raise FieldMismatch(f"mixed radicands {self.k} and {other.k}")
            return other
        if isinstance(other, (int, Fraction)):
            return QF._raw(self.k, Fraction(other), Fraction(0))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QF._raw(self.k, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> "QF":
        return QF._raw(self.k, -self.a, -self.b)

    def __pos__(self) -> "QF":
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QF._raw(self.k, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QF._raw(self.k, self.a * other, self.b * other)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.a, self.b
        c, d = o.a, o.b
        return QF._raw(self.k, a * c + self.k * b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self) -> "QF":
        return QF._raw(self.k, self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - self.k * self.b * self.b

    def inverse(self) -> "QF":
        return qf_invert(self)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero in Q(sqrt k)")
            return QF._raw(self.k, self.a / other, self.b / other)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * qf_invert(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * qf_invert(self)

    def __pow__(self, n: int) -> "QF":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return qf_invert(self) ** (-n)
        result = QF._raw(self.k, Fraction(1), Fraction(0))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other) -> bool:
        if isinstance(other, QF):
            return self.k == other.k and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.b:
            return hash(self.a)
        return hash((self.k, self.a, self.b))

    def is_rational(self) -> bool:
        return not self.b

    def to_rational(self) -> Fraction:
        if self.b:
            raise InvalidInput(f"{self} is not rational")
        return self.a

    def sign(self) -> int:
        """Sign under the real embedding with ``sqrt(k) > 0``."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0 or sa == sb:
            return sa if sa else sb
        if sa == 0:
            return sb
        lhs = self.a * self.a
        rhs = self.k * self.b * self.b
        if lhs > rhs:
            return sa
        if lhs < rhs:
            return sb
        return 0

    def __lt__(self, other) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - other).sign() >= 0

    def __repr__(self) -> str:
        return f"QF({self.k}, {format_rational(self.a)}, {format_rational(self.b)})"

    def __str__(self) -> str:
        if not self.b:
            return format_rational(self.a)
        tail = f"{format_rational(abs(self.b))}*sqrt({self.k})"
        if not self.a:
            return ("-" if self.b < 0 else "") + tail
        return f"{format_rational(self.a)} {'-' if self.b < 0 else '+'} {tail}"


def qf_invert(x: QF) -> QF:
    """Multiplicative inverse by conjugate over norm."""
    n = x.norm()
    if not n:
        raise ZeroDivisionError("inverse of zero in Q(sqrt k)")
    return QF._raw(x.k, x.a / n, -x.b / n)


# -- Q(sqrt k)(i) ------------------------------------------------------------

class GQF:
    """Element ``re + im*i`` with ``re, im`` in Q(sqrt k) and ``i*i == -1``."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0, k: Optional[int] = None) -> None:
        if k is None:
            k = re.k if isinstance(re, QF) else im.k if isinstance(im, QF) else 1
        re = _as_qf(re, k)
        im = _as_qf(im, k)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("GQF values are immutable")

    @classmethod
    def _raw(cls, re: QF, im: QF) -> "GQF":
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    @classmethod
    def i(cls, k: int = 1) -> "GQF":
        return cls(QF(k, 0), QF(k, 1))

    @property
    def k(self) -> int:
        return self.re.k

    def _coerce(self, other) -> "GQF":
        if isinstance(other, GQF):
            if other.k != self.k:
                raise FieldMismatch(f"mixed radicands {self.k} and {other.k}")
            return other
        if isinstance(other, QF):
            if other.k != self.k:
                raise FieldMismatch(f"mixed radicands {self.k} and {other.k}")
            return GQF._raw(other, QF._raw(self.k, Fraction(0), Fraction(0)))
        if isinstance(other, (int, Fraction)):
            return GQF._raw(QF._raw(self.k, Fraction(other), Fraction(0)),
                            QF._raw(self.k, Fraction(0), Fraction(0)))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GQF._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "GQF":
        return GQF._raw(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GQF._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QF)):
            if isinstance(other, QF) and other.k != self.k:
                raise FieldMismatch(f"mixed radicands {self.k} and {other.k}")
            return GQF._raw(self.re * other, self.im * other)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GQF._raw(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "GQF":
        """Complex conjugation (``i -> -i``); ``sqrt k`` is left alone."""
        return GQF._raw(self.re, -self.im)

    def norm(self) -> QF:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GQF":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(sqrt k)(i)")
        inv = qf_invert(n)
        return GQF._raw(self.re * inv, -self.im * inv)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, QF)):
            if not other:
                raise ZeroDivisionError("division by zero in Q(sqrt k)(i)")
            return GQF._raw(self.re / other, self.im / other)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "GQF":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = GQF(QF(self.k, 1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, GQF):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (QF, int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"GQF({self.re!r}, {self.im!r})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        return f"({self.re}) + ({self.im})*i"


def _as_qf(x, k: int) -> QF:
    if isinstance(x, QF):
        if x.k != k:
            raise FieldMismatch(f"mixed radicands {x.k} and {k}")
        return x
    if isinstance(x, (int, Fraction)):
        return QF(k, x)
    raise InvalidInput(f"cannot use {x!r} as an element of Q(sqrt {k})")


def embed(x, k: int):
    """Lift a rational (or a ``k == 1`` field value) into Q(sqrt k)."""
    if isinstance(x, GQF):
        if x.k == k:
            return x
        if x.k == 1:
            return GQF(QF(k, x.re.a), QF(k, x.im.a))
        raise FieldMismatch(f"cannot embed Q(sqrt {x.k})(i) into Q(sqrt {k})(i)")
    if isinstance(x, QF):
        if x.k == k:
            return x
        if x.k == 1:
            return QF(k, x.a)
        raise FieldMismatch(f"cannot embed Q(sqrt {x.k}) into Q(sqrt {k})")
    return QF(k, x)


# -- coefficient domains -----------------------------------------------------

class Domain:
    """Coefficient domain descriptor used by the polynomial classes."""

    is_field = True

    def coerce(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def exact_div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._key()))

    def _key(self):
        return ()


class RationalField(Domain):
    def coerce(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, QF) and not x.b:
            return x.a
        raise FieldMismatch(f"{x!r} is not rational")

    def __repr__(self) -> str:
        return "QQ"


QQ = RationalField()


class QuadField(Domain):
    def __init__(self, k: int) -> None:
        self.k = _check_k(k)

    def _key(self):
        return (self.k,)

    def coerce(self, x) -> QF:
        if isinstance(x, QF):
            if x.k != self.k:
                raise FieldMismatch(f"mixed radicands {x.k} and {self.k}")
            return x
        if isinstance(x, (int, Fraction)):
            return QF._raw(self.k, Fraction(x), Fraction(0))
        raise FieldMismatch(f"{x!r} is not an element of Q(sqrt {self.k})")

    def __repr__(self) -> str:
        return f"QF({self.k})"


class GaussQuadField(Domain):
    def __init__(self, k: int) -> None:
        self.k = _check_k(k)

    def _key(self):
        return (self.k,)

    def coerce(self, x) -> GQF:
        if isinstance(x, GQF):
            if x.k != self.k:
                raise FieldMismatch(f"mixed radicands {x.k} and {self.k}")
            return x
        if isinstance(x, (QF, int, Fraction)):
            return GQF._raw(_as_qf(x, self.k), QF._raw(self.k, Fraction(0), Fraction(0)))
        raise FieldMismatch(f"{x!r} is not an element of Q(sqrt {self.k})(i)")

    def __repr__(self) -> str:
        return f"GQF({self.k})"
