"""Exception hierarchy shared by all modules."""


class SingularZetaError(Exception):
    """Base class for every error raised by the package."""


class ValidationError(SingularZetaError, ValueError):
    """An input violates a documented precondition."""


class PoleError(ValidationError):
    """A function was evaluated at (or numerically on top of) a pole."""


class NumericalError(SingularZetaError, ArithmeticError):
    """A numerical procedure failed to reach its accuracy target."""


class ConvergenceError(NumericalError):
    """A series or iteration did not converge."""


class BracketError(NumericalError):
    """A root bracket did not contain exactly one sign change."""


class ContaminationError(NumericalError):
    """A Laurent extraction found non-zero coefficients beyond the expected pole order."""


class RealityError(NumericalError):
    """A quantity that must be real came out with a significant imaginary part."""
