"""Exception hierarchy shared by every module."""


class FlagGammaError(Exception):
    """Base class for errors raised by this package."""


class MalformedInputError(FlagGammaError, ValueError):
    """Input data (facet lists, files, vectors) is not well formed."""


class DomainError(FlagGammaError, ValueError):
    """An argument lies outside the domain of an operation."""


class PreconditionError(FlagGammaError, ValueError):
    """A documented precondition of an operation does not hold."""


class BudgetExceededError(FlagGammaError, RuntimeError):
    """A computation would exceed its configured size budget."""
