"""Exception types shared across the library."""


class ArgumentError(ValueError):
    """An argument violates a documented precondition."""


class DomainError(ValueError):
    """A parameter lies outside the interval it must belong to."""


class SingularPointError(ArithmeticError):
    """Curvature was requested at a point where the first derivative vanishes."""


class SolveError(RuntimeError):
    """A linear system could not be solved to the required accuracy."""


class ValidationError(ValueError):
    """A CLI job configuration failed validation."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field
