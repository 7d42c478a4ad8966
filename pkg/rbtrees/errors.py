"""Exceptions raised by the kernel."""


class RBTreesError(ValueError):
    """Base class for domain errors."""


class NoApplicableMoveError(RBTreesError):
    """A move was requested on a tree that is already in normal form."""


class CapExceededError(RBTreesError):
    """A configured resource cap would be exceeded."""

    def __init__(self, what: str, value: int, cap: int):
        super().__init__(f"{what} = {value} exceeds the configured cap {cap}")
        self.what = what
        self.value = value
        self.cap = cap


class HorizonMismatchError(RBTreesError):
    """Two sequences with different horizons were combined."""


class InsufficientSamplesError(RBTreesError):
    """Too few distinct sample points to certify a polynomial identity."""
