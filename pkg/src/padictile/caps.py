"""Resource guards for the enumerating operations."""
from __future__ import annotations


DEFAULT_CAP = 10**7


class ResourceCapError(RuntimeError):
    """An operation would generate more items than the configured cap."""


def check_cap(count: int, cap: int | None, what: str) -> None:
    limit = DEFAULT_CAP if cap is None else cap
    if count > limit:
        raise ResourceCapError(f"{what}: {count} items exceeds cap {limit}")
