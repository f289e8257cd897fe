"""Desk-scale guards for combinatorially explosive operations."""

from __future__ import annotations


class GuardExceeded(Exception):
    """A size guard was hit before starting an expensive enumeration."""

    def __init__(self, what: str, value: int, limit: int):
        self.what = what
        self.value = value
        self.limit = limit
        super().__init__(f"{what} = {value} exceeds guard limit {limit}")


def ensure_within(what: str, value: int, limit: int, unsafe: bool = False) -> None:
    if not unsafe and value > limit:
        raise GuardExceeded(what, value, limit)
