"""Exception hierarchy for sqdist."""


class SqdistError(ValueError):
    """Base class for every error raised by this package."""


class InvalidShape(SqdistError):
    pass


class DisconnectedGraph(SqdistError):
    pass


class NotSquare(SqdistError):
    pass


class NotSymmetric(SqdistError):
    pass


class OrderTooSmall(SqdistError):
    pass


class Singular(SqdistError):
    pass


class NotDivisible(SqdistError):
    pass


class DivisionByZeroPoly(SqdistError, ZeroDivisionError):
    pass


class CofactorZero(SqdistError):
    """Raised for S(1,1), the only shape whose cofactor sum vanishes."""


class BlockCountTooSmall(SqdistError):
    pass


class WidthNotPositive(SqdistError):
    pass


class MovePreconditionViolated(SqdistError):
    pass


class NonPositiveSample(SqdistError):
    pass


class InvalidParameters(SqdistError):
    pass
