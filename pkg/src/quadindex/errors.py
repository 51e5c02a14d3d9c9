"""Exception types shared across the package."""


class InvalidArgument(ValueError):
    """An input violates an operation's documented precondition."""


class InternalInconsistency(ArithmeticError):
    """A division, identity or cross-check that must hold by theory failed.

    Raising this always indicates a bug (or a mathematical error in a closed
    form), never bad user input.
    """
