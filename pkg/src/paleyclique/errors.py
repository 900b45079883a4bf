"""Exception types shared across the package."""


class PaleyCliqueError(Exception):
    """Base class for all errors raised by this package."""


class NotPrime(PaleyCliqueError):
    pass


class NotPrimitive(PaleyCliqueError):
    pass


class UnsupportedSize(PaleyCliqueError):
    pass


class DivisionByZero(PaleyCliqueError):
    pass


class ZeroHasNoClass(PaleyCliqueError):
    pass


class S0Mismatch(PaleyCliqueError):
    pass


class NotADivisor(PaleyCliqueError):
    pass


class DegeneratePair(PaleyCliqueError):
    pass


class OutOfRangeVertex(PaleyCliqueError):
    pass


class NotStronglyRegular(PaleyCliqueError):
    pass


class GapViolation(PaleyCliqueError):
    pass


class NotClosed(PaleyCliqueError):
    pass


class NotAGroup(PaleyCliqueError):
    pass


class RecipeCollision(PaleyCliqueError):
    pass
