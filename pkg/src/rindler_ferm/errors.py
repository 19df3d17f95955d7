"""Exceptions shared across the package."""


class CapacityError(RuntimeError):
    """A computation exceeds a hard size guard (memory or eigensolver cap)."""


class BlockStructureError(RuntimeError):
    """A partial transpose failed to decompose into 1x1 and 2x2 blocks."""
