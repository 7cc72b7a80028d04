"""Exception hierarchy shared by every module."""


class StarDiscError(Exception):
    """Base class for all library errors."""


class NotPrime(StarDiscError, ValueError):
    pass


class NotPrimePower(StarDiscError, ValueError):
    pass


class DegreeTooLarge(StarDiscError, ValueError):
    pass


class BadBase(StarDiscError, ValueError):
    pass


class BadFamily(StarDiscError, ValueError):
    pass


class CenteredNeedsDim1(StarDiscError, ValueError):
    pass


class MissingSeed(StarDiscError, ValueError):
    pass


class DimensionMismatch(StarDiscError, ValueError):
    pass


class NotOneDimensional(StarDiscError, ValueError):
    pass


class EmptySubset(StarDiscError, ValueError):
    pass


class IndexOutOfRange(StarDiscError, IndexError):
    pass


class WeightsTooShort(StarDiscError, ValueError):
    pass


class BadKind(StarDiscError, ValueError):
    pass


class MissingConstant(StarDiscError, ValueError):
    pass


class BudgetExceeded(StarDiscError, RuntimeError):
    """Exact computation refused because its cost estimate is above the budget."""

    def __init__(self, cost, budget, what="exact star-discrepancy"):
        self.cost = cost
        self.budget = budget
        super().__init__(f"{what}: estimated cost {cost:.3g} exceeds budget {budget:.3g}")


class NotFound(StarDiscError, LookupError):
    pass


class PointSetFormatError(StarDiscError, ValueError):
    """Malformed point-set text file."""


class StreamSpecError(StarDiscError, ValueError):
    pass
