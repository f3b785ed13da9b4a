"""Exception types raised across the package."""


class KnotError(ValueError):
    """Base class for domain errors; the CLI maps these to exit code 1."""


class NotDivisible(KnotError):
    pass


class NotMultipleOfFour(KnotError):
    pass


class ZeroPolynomial(KnotError):
    pass


class EmptySpec(KnotError):
    pass


class LengthMismatch(KnotError):
    pass


class TooManyCrossings(KnotError):
    pass


class NotAKnot(KnotError):
    pass


class NotReduced(KnotError):
    pass


class OddM(KnotError):
    pass


class OddK(KnotError):
    pass


class BadParams(KnotError):
    pass


class ParseError(KnotError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
