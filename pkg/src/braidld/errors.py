"""Exception types shared across the package."""


class AlphabetMismatch(ValueError):
    """Letters from different alphabets were combined in one word."""


class WordCapExceeded(RuntimeError):
    """A reduced word grew past the configured maximum length."""

    def __init__(self, length: int, cap: int):
        super().__init__(f"reduced word length {length} exceeds cap {cap}")
        self.length = length
        self.cap = cap


class InverseNotApplicable(ValueError):
    """An inverse braid letter cannot act on the current term sequence."""


class PositionOutOfRange(ValueError):
    """A braid letter touches a position beyond the given finite sequence."""
