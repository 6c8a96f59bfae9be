"""Exception hierarchy shared by every module of the package."""


class DetgensError(Exception):
    """Base class for all package errors."""


class ParseError(DetgensError):
    """Malformed polynomial text, minor index, or problem file."""


class FieldMismatchError(DetgensError):
    """Operands live over different coefficient fields or incompatible rings."""


class HypothesisViolation(DetgensError):
    """The input does not satisfy the hypothesis a construction needs."""


class RelationError(DetgensError):
    """A dependence relation is ill-posed or does not vanish on its entries."""


class ResourceLimitExceeded(DetgensError):
    """A Groebner computation hit its pair or basis budget.

    The outcome of the computation is inconclusive, not negative.
    """

    def __init__(self, message, pairs=0, basis_size=0):
        super().__init__(message)
        self.pairs = pairs
        self.basis_size = basis_size
