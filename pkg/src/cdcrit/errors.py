"""Exception types shared across the package."""


class CapacityError(Exception):
    """An input exceeds one of the documented size caps."""


class Graph6ParseError(ValueError):
    """Malformed graph6 input; ``offset`` points at the first bad byte."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset
