"""Order ideals of the zigzag fence poset and the Fibonacci split identities.

The fence on m elements alternates covers x_1 < x_2 > x_3 < x_4 > ...; its
number of down-closed subsets is the Fibonacci number F_{m+2} under this
package's indexing (calibrated by direct enumeration at m = 1, 2, 3).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .guards import ensure_within
from .seqcore import fib

ORACLE_LIMIT = 20


@dataclass(frozen=True)
class FencePoset:
    """Zigzag poset x_1 < x_2 > x_3 < ... on elements 1..size."""

    size: int

    def __post_init__(self):
        if self.size < 0:
            raise ValueError(f"size must be >= 0, got {self.size}")

    @property
    def covers(self) -> Tuple[Tuple[int, int], ...]:
        """(lower, upper) pairs; odd positions point up, even point down."""
        out = []
        for i in range(1, self.size):
            out.append((i, i + 1) if i % 2 == 1 else (i + 1, i))
        return tuple(out)


def count_ideals(m: int) -> int:
    """Down-closed subsets of the m-element fence, by a linear transfer step."""
    if m < 0:
        raise ValueError(f"size must be >= 0, got {m}")
    if m == 0:
        return 1
    # State: ideals with the current element excluded / included.
    out, inc = 1, 1
    for i in range(1, m):
        if i % 2 == 1:
            # x_i < x_{i+1}: including x_{i+1} forces x_i in.
            out, inc = out + inc, inc
        else:
            # x_{i+1} < x_i: including x_i forces x_{i+1} in.
            out, inc = out, out + inc
    return out + inc


def _count_closed(m: int, up_closed: bool, unsafe_limits: bool) -> int:
    ensure_within("fence oracle size", m, ORACLE_LIMIT, unsafe_limits)
    covers = FencePoset(m).covers
    count = 0
    for mask in range(1 << m):
        ok = True
        for lo, hi in covers:
            lo_in = mask >> (lo - 1) & 1
            hi_in = mask >> (hi - 1) & 1
            if up_closed:
                if lo_in and not hi_in:
                    ok = False
                    break
            elif hi_in and not lo_in:
                ok = False
                break
        if ok:
            count += 1
    return count


def count_ideals_oracle(m: int, unsafe_limits: bool = False) -> int:
    """Brute force over all 2^m subsets, counting the down-closed ones."""
    return _count_closed(m, up_closed=False, unsafe_limits=unsafe_limits)


def count_filters_oracle(m: int, unsafe_limits: bool = False) -> int:
    """Brute force over all 2^m subsets, counting the up-closed ones."""
    return _count_closed(m, up_closed=True, unsafe_limits=unsafe_limits)


def beck_identities(n: int, k: int) -> bool:
    """Both Fibonacci split identities obtained from fence-ideal counting."""
    if not 2 <= k <= n:
        raise ValueError(f"need 2 <= k <= n, got ({n}, {k})")
    first = fib(n) == fib(k) * fib(n + 1 - k) + fib(k - 1) * fib(n - k)
    second = fib(n) == fib(k - 1) * fib(n + 2 - k) + fib(k - 2) * fib(n + 1 - k)
    return first and second
