"""Proven values and bounds for cf(n), the minimum over all n-point sets in
general position of the maximum crossing-family size."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .replication import best_known_upper_bound


@dataclass(frozen=True)
class KnownValue:
    """Bounds for cf(n) over the inclusive range [n_lo, n_hi].

    ``upper`` is None when the range is open-ended and the upper bound comes
    from the replication calculator instead of a fixed value.
    """

    n_lo: int
    n_hi: Optional[int]
    lower: int
    upper: Optional[int]
    provenance: str


KNOWN_VALUES: tuple[KnownValue, ...] = (
    KnownValue(2, 4, 1, 1,
               "any two points span a segment; a triangle with an interior "
               "point has no two disjoint crossing segments"),
    KnownValue(5, 9, 2, 2,
               "K5 is not planar, so every 5 points span a crossing pair; "
               "9-point configurations with no 3 pairwise-crossing segments exist"),
    KnownValue(10, 14, 3, 3,
               "exhaustive check of all 10-point order types forces a "
               "3-crossing family; 14-point configurations without one of size 4 exist"),
    KnownValue(15, 20, 4, 4,
               "computer-assisted exhaustive extension forces a 4-crossing "
               "family on 15 points; 20-point configurations without one of size 5 exist"),
    KnownValue(21, None, 4, None,
               "monotone lower bound carried from n = 20; upper bound from "
               "the replication construction over the extremal library"),
)


def known_range(n: int) -> KnownValue:
    if n < 2:
        raise ValueError("cf(n) is defined for n >= 2")
    for entry in KNOWN_VALUES:
        if entry.n_lo <= n and (entry.n_hi is None or n <= entry.n_hi):
            return entry
    raise AssertionError("known-value ranges must cover all n >= 2")


def known_bounds(n: int) -> tuple[int, int, KnownValue]:
    """(lower, upper, table entry) for cf(n); lower == upper when proven exactly."""
    entry = known_range(n)
    upper = entry.upper if entry.upper is not None else best_known_upper_bound(n)
    return entry.lower, upper, entry
