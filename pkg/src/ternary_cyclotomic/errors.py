"""Exception hierarchy shared by every module."""


class CycloError(Exception):
    """Base class for all library errors."""


class InvalidInput(CycloError, ValueError):
    pass


class NotCoprime(InvalidInput):
    pass


class NotSquarefree(InvalidInput):
    pass


class TooLarge(CycloError):
    pass


class SearchLimitExceeded(CycloError):
    pass


class ConditionViolated(CycloError):
    pass


class CongruenceViolated(CycloError):
    pass


class NoIntegerInInterval(CycloError):
    pass


class RNotPrime(CycloError):
    pass
