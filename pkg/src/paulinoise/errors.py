"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input violates a documented domain or contract."""


class NumericError(ArithmeticError):
    """A floating-point result landed outside its provable range."""
