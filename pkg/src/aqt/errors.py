"""Exception hierarchy shared by all modules."""


class AqtError(ValueError):
    """Base class for every error raised by the package."""


class WindowError(AqtError):
    pass


class BadLength(WindowError):
    pass


class BadSum(WindowError):
    pass


class BadResidues(WindowError):
    pass


class RankMismatch(WindowError):
    pass


class AddressError(AqtError):
    """A function on positive roots is not the address of any alcove."""


class ComparableGenerators(AqtError):
    pass


class InvalidLabeledPath(AqtError):
    pass


class ValleyViolation(InvalidLabeledPath):
    pass


class NotRepresentingAlcove(AqtError):
    pass


class NotCoprime(AqtError):
    pass


class NonUniqueMinimum(AqtError):
    pass


class NonUniqueMaximum(AqtError):
    pass


class UnknownFamily(AqtError):
    pass


class InsufficientPrimes(AqtError):
    pass


class InexactDivision(AqtError):
    pass


class NegativeExponent(AqtError):
    pass


class BadArgs(AqtError):
    pass


class BudgetExceeded(AqtError):
    pass
