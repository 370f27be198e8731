class WreathdetError(Exception):
    """Base class for library errors."""


class ShapeError(WreathdetError, ValueError):
    """Matrix or tableau shape does not fit the requested operation."""


class CapExceededError(WreathdetError, ValueError):
    """An enumeration would exceed its configured size cap."""

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what} has size {size}, exceeding the cap {cap}")
