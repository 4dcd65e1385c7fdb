"""Exception types shared across the package."""

from __future__ import annotations

__all__ = ["StructuralError", "ContractError", "ContradictionError"]


class StructuralError(ValueError):
    """Malformed data: bad face words, non-subcomplex arguments, broken files."""


class ContractError(ValueError):
    """A documented precondition does not hold; the message names the violated condition."""


class ContradictionError(RuntimeError):
    """An internal consistency check failed, e.g. a claimed embedding does not verify."""
