"""Exception types shared across the package."""


class InputError(ValueError):
    """Invalid user input: unknown algebra, malformed weight, bad parameters."""


class GuardExceeded(InputError):
    """A configured size guard (Weyl group order, orbit size) was exceeded."""


class NumericalFailure(RuntimeError):
    """A numerical routine failed (SVD non-convergence, root matching)."""
