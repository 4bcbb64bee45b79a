class ZetaVarError(Exception):
    """Base class for numerical failures raised by this package."""


class DomainError(ZetaVarError, ValueError):
    """Argument outside the supported domain of an operation."""


class PoleError(DomainError):
    """Argument sits on a pole of the function being evaluated."""


class ConvergenceError(ZetaVarError, ArithmeticError):
    """An iterative or adaptive procedure exhausted its budget."""
