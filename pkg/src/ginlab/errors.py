"""Exception hierarchy shared by every ginlab module."""


class GinlabError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class ParseError(GinlabError, ValueError):
    def __init__(self, message, text="", position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class DimensionMismatch(GinlabError, ValueError):
    pass


class NotDivisibleError(GinlabError, ArithmeticError):
    pass


class ZeroPolynomialError(GinlabError, ValueError):
    pass


class NonHomogeneousError(GinlabError, ValueError):
    pass


class SingularMatrixError(GinlabError, ValueError):
    pass


class NotBorelFixedError(GinlabError, ValueError):
    pass


class NoDisagreement(GinlabError, LookupError):
    pass


class StabilizationFailure(GinlabError):
    """Random trials did not settle on a Borel-fixed initial ideal."""
