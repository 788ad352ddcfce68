"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class RatDistError(Exception):
    """Base class for all library errors."""


class InvalidInput(RatDistError, ValueError):
    pass


class FieldMismatch(InvalidInput):
    """Operands live over different quadratic fields."""


class RemainderNonzero(RatDistError, ArithmeticError):
    """Raised by exact division when the divisor does not divide."""

    def __init__(self, remainder, message: str = "division is not exact") -> None:
        super().__init__(f"{message}; remainder = {remainder}")
        self.remainder = remainder


class NotARationalSet(RatDistError):
    def __init__(self, message: str, witness=None) -> None:
        super().__init__(message)
        self.witness = witness


class GeneralPositionViolated(RatDistError):
    def __init__(self, message: str, witness=None) -> None:
        super().__init__(message)
        self.witness = witness


class DegenerateCurve(RatDistError):
    pass


class IsotropicComponent(RatDistError):
    """The curve contains one of the lines x + iy = 0, x - iy = 0."""


class UnsupportedDegree(RatDistError):
    pass


class NotApplicable(RatDistError):
    pass


class ReducibleCurve(RatDistError):
    pass


class WrongCase(RatDistError):
    pass


class DegenerateParameter(RatDistError):
    pass


class InternalInconsistency(RatDistError):
    pass


class PoolExhausted(RatDistError):
    def __init__(self, message: str, diagnostics=None) -> None:
        super().__init__(message)
        self.diagnostics = diagnostics or []


class CommonRoot(RatDistError):
    def __init__(self, message: str, pair=None) -> None:
        super().__init__(message)
        self.pair = pair


class MultipleRoot(RatDistError):
    def __init__(self, message: str, gcd=None) -> None:
        super().__init__(message)
        self.gcd = gcd


class InvalidConfiguration(RatDistError):
    pass


class NeedsMorePoints(RatDistError):
    def __init__(self, message: str, diagnostic=None) -> None:
        super().__init__(message)
        self.diagnostic = diagnostic


class NotCertifiable(RatDistError):
    """Certification needs a user assertion (genus or irreducibility)."""


class SearchTooLarge(RatDistError):
    def __init__(self, estimate: int, limit: int) -> None:
        super().__init__(f"estimated {estimate} enumeration steps exceeds limit {limit}")
        self.estimate = estimate
        self.limit = limit


class PolySyntaxError(InvalidInput):
    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
