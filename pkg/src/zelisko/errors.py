"""Exception hierarchy shared by every module of the package."""


class ZeliskoError(Exception):
    """Base class for all errors raised by this package."""


class NotDivisible(ZeliskoError, ArithmeticError):
    pass


class DivisionByZero(ZeliskoError, ZeroDivisionError):
    pass


class ModulusMismatch(ZeliskoError, ValueError):
    pass


class DimensionMismatch(ZeliskoError, ValueError):
    pass


class NotAUnit(ZeliskoError, ArithmeticError):
    pass


class Unsolvable(ZeliskoError, ArithmeticError):
    pass


class PreconditionViolated(ZeliskoError, ValueError):
    pass


class RingTooLarge(ZeliskoError):
    """An exhaustive computation would exceed its configured bound."""


class MalformedChain(ZeliskoError, ValueError):
    pass


class MalformedInput(ZeliskoError, ValueError):
    pass


class IndexOutOfRange(ZeliskoError, IndexError):
    pass


class SizeOutOfRange(ZeliskoError, ValueError):
    pass


class NotInvertible(ZeliskoError):
    pass


class StructureViolation(ZeliskoError):
    """A matrix entry does not have the shape required for membership.

    ``block`` names the offending block (``"H_21"``, ``"H_31"``, ...) and
    ``entry`` is the 0-based ``(row, col)`` position.
    """

    def __init__(self, block, entry, message=None):
        self.block = block
        self.entry = entry
        if message is None:
            message = f"entry {entry} violates the {block} constraint"
        super().__init__(message)


class SamplingExhausted(ZeliskoError):
    pass
