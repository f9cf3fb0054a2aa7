"""Exception types shared across the package."""


class TreeParamsError(Exception):
    """Base class for all package errors."""


class InvalidParameter(TreeParamsError, ValueError):
    """A numeric or structural argument is out of its documented range."""


class DomainError(TreeParamsError, ValueError):
    """An input violates the hypothesis of the construction it was given to."""


class PreconditionError(TreeParamsError, ValueError):
    """An input object fails a validity check required by the operation."""


class BudgetExceeded(TreeParamsError, RuntimeError):
    """A size guard or search budget was exceeded; no approximate answer is given."""


class DependencyError(TreeParamsError, RuntimeError):
    """A required precomputed artifact is not available."""


class MalformedInput(TreeParamsError, ValueError):
    """A text file does not follow its declared format."""
