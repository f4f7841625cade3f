"""Shared exception types."""

from __future__ import annotations


class TreeParseError(ValueError):
    """Malformed tree or descriptor text; carries the byte offset of the fault."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (offset {position})")
        self.position = position


class CapacityError(Exception):
    """An operation would exceed a configured size or enumeration cap."""


class ConstructionError(RuntimeError):
    """Internal inconsistency while assembling or auditing a sequence."""
