"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Operand dimensions are incompatible."""


class DomainError(ValueError):
    """An argument lies outside its valid domain (index range, angle range, ...)."""


class DegenerateInputError(ValueError):
    """Input admits no well-defined result (e.g. angles of the zero vector)."""
