"""Exception types shared across the package."""


class ValidationError(Exception):
    """A numerical validation failed (non-unitary matrix, unnormalized
    distribution, ...) as opposed to a malformed input, which raises
    ValueError."""
