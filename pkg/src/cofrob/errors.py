"""Exception hierarchy shared by every kernel module."""


class CofrobError(Exception):
    """Base class for all kernel errors."""


class DivisionByZero(CofrobError, ZeroDivisionError):
    pass


class IncompatibleConductor(CofrobError):
    pass


class AmbientMismatch(CofrobError):
    pass


class DimensionMismatch(CofrobError):
    pass


class NotASubspace(CofrobError):
    pass


class FiltrationDidNotStabilize(CofrobError):
    """Raised when an iteration exceeds its dimension cap (invalid input)."""


class NotIdempotentModRadical(CofrobError):
    pass


class NotOrthogonalModRadical(CofrobError):
    pass


class NotADecomposition(CofrobError):
    pass


class CoradicalNotSplit(CofrobError):
    pass


class NoIntegral(CofrobError):
    pass


class BaseMismatch(CofrobError):
    pass


class IncompleteFamily(CofrobError):
    pass


class CoradicalNotHopfSubalgebra(CofrobError):
    pass


class FiltrationNotMultiplicative(CofrobError):
    pass


class NotQLS(CofrobError):
    pass


class GroupTooLarge(CofrobError):
    pass


class OrderMismatch(CofrobError):
    pass


class BadParams(CofrobError):
    pass


class UnknownCommand(CofrobError):
    pass


class ModelError(CofrobError):
    """Malformed model file or unresolved reference."""
