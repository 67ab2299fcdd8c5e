"""Exception hierarchy shared across the package."""


class CkError(Exception):
    """Base class for every error raised by ckpos."""


class OrdinalError(CkError, ArithmeticError):
    pass


class DepthCapExceeded(OrdinalError):
    pass


class SubtractUnderflow(OrdinalError):
    pass


class ZeroInput(OrdinalError, ValueError):
    pass


class OutOfRange(OrdinalError, ValueError):
    pass


class NotLimit(OrdinalError, ValueError):
    pass


class OrdinalSyntaxError(CkError, ValueError):
    """Raised by the ordinal parser; ``pos`` is the offending character offset."""

    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        pointer = " " * pos + "^"
        super().__init__(f"{message} at position {pos}\n  {text}\n  {pointer}")


class UnsupportedBase(CkError, ValueError):
    pass


class FiniteSpace(CkError, ValueError):
    pass


class NotInUnion(CkError, ValueError):
    pass


class NotInDomain(CkError, ValueError):
    pass


class UnknownPiece(CkError, KeyError):
    pass


class OutOfDomain(CkError, ValueError):
    pass


class DomainMismatch(CkError, ValueError):
    pass


class PoolTooSmall(CkError, ValueError):
    pass


class BadWeights(CkError, ValueError):
    pass


class RegionInvariantViolated(CkError):
    pass


class NonConstantUnitImage(CkError, ValueError):
    pass


class NonPositiveUnitImage(CkError, ValueError):
    pass


class ToleranceNotMet(CkError):
    pass


class BadWitness(CkError, ValueError):
    pass
