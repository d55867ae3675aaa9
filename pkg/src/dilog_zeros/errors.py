"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument lies outside the domain of the requested function."""


class UnsupportedBranchError(ValueError):
    """The branch (A, B) has no zero, or the operation does not cover it."""


class NewtonStepError(ArithmeticError):
    """Newton step undefined because the derivative vanishes or is undefined."""


class ConvergenceError(RuntimeError):
    """An iteration failed to converge within its budget."""


class InconclusiveError(RuntimeError):
    """A numerical check could not reach a trustworthy verdict."""
