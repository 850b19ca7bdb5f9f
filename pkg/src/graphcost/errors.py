"""Exception types raised across the package."""


class GraphError(ValueError):
    """Malformed graph input: loops, duplicate edges, out-of-range vertices."""


class SequenceError(ValueError):
    """A list of elements that is not a construction sequence of its graph."""


class CapExceeded(RuntimeError):
    """An exhaustive or exponential routine was asked to exceed its size cap."""

    def __init__(self, what: str, size: int, cap: int, hint: str = ""):
        self.size = size
        self.cap = cap
        msg = f"{what}: size {size} exceeds cap {cap}"
        if hint:
            msg += f" ({hint})"
        super().__init__(msg)


class IsomorphismError(ValueError):
    """A vertex map that does not preserve adjacency."""
