"""Exception hierarchy shared by every module in the package."""


class DecompositionError(ValueError):
    """Base class for all errors raised by cubedecomp."""


class NotAdjacent(DecompositionError):
    pass


class OutOfRange(DecompositionError):
    pass


class NotInLowerHalf(DecompositionError):
    pass


class NotClosed(DecompositionError):
    pass


class NotSimple(DecompositionError):
    pass


class GeneratorOutOfRange(DecompositionError):
    pass


class CosetCollision(DecompositionError):
    pass


class OddDimension(DecompositionError):
    pass


class NotPowerOfTwo(DecompositionError):
    pass


class DirectionOutOfHalf(DecompositionError):
    pass


class RangeViolation(DecompositionError):
    pass


class ResourceCap(DecompositionError):
    """Requested size exceeds the configured construction envelope."""


class PreconditionViolation(DecompositionError):
    pass


class BadParameters(DecompositionError):
    pass


class ElementOutOfRange(DecompositionError):
    pass


class NotADivisor(DecompositionError):
    pass


class EmptyDecomposition(DecompositionError):
    pass


class ParseError(DecompositionError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class VersionMismatch(ParseError):
    pass


class SinkFailure(DecompositionError):
    pass
