"""Shifted sub-poset copies and chain tilings.

A copy of the height-m prototype rooted at vertex (r, k) picks, independently
for each offset s = 1..m, an F_s-subset of the positions at level k+s. Its
maximal chains form the Cartesian product of the chosen subsets. A tiling is
an exact cover: a family of copies with one shared root whose chain families
partition all maximal chains from the root up to level k+m. Searches are
exhaustive and deterministic, so a None result means no cover exists among
the candidate copies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, List, Optional, Tuple

from . import exactcover
from .cobweb import VertexCoord
from .guards import ensure_within
from .seqcore import exact_div, f_factorial, f_falling, fib, fibonomial

ChainTuple = Tuple[int, ...]

CANDIDATE_LIMIT = 10**5
UNIVERSE_LIMIT = 10**4
COUNT_ALL_LIMIT = 30


@dataclass(frozen=True)
class CopySpec:
    """One shifted copy: root coordinate plus chosen positions per level above."""

    root: VertexCoord
    chosen: Tuple[Tuple[int, ...], ...]  # sorted positions at levels root.s + 1 ..

    @property
    def height(self) -> int:
        return len(self.chosen)


@dataclass(frozen=True)
class TilingSolution:
    """Max-disjoint copies whose chain families partition the chain universe."""

    root: VertexCoord
    height: int
    copies: Tuple[CopySpec, ...]
    assignment: Dict[ChainTuple, int] = field(compare=False)


def _validate_root(k: int, r: int) -> None:
    if k < 1:
        raise ValueError(f"root level must be >= 1, got {k}")
    if not 1 <= r <= fib(k):
        raise ValueError(f"root position {r} out of range 1..{fib(k)} at level {k}")


def copy_count(k: int, m: int) -> int:
    """Number of candidate copies rooted at level k with height m."""
    return math.prod(math.comb(fib(k + s), fib(s)) for s in range(1, m + 1))


def enumerate_copies(
    k: int, r: int, m: int, unsafe_limits: bool = False
) -> List[CopySpec]:
    """All copies rooted at (r, k), ordered lexicographically by chosen subsets."""
    _validate_root(k, r)
    if m < 1:
        raise ValueError(f"height must be >= 1, got {m}")
    # Guard incrementally: the running product crosses the limit long before
    # any individual binomial factor gets expensive to evaluate.
    running = 1
    for s in range(1, m + 1):
        running *= math.comb(fib(k + s), fib(s))
        ensure_within("candidate copy count", running, CANDIDATE_LIMIT, unsafe_limits)
    per_level = [
        sorted(combinations(range(1, fib(k + s) + 1), fib(s)))
        for s in range(1, m + 1)
    ]
    root = VertexCoord(r, k)
    return [CopySpec(root, chosen) for chosen in product(*per_level)]


def chains_of_copy(c: CopySpec) -> frozenset:
    """Maximal chains of a copy: the product of its chosen position subsets."""
    return frozenset(product(*c.chosen))


def chain_universe(k: int, m: int) -> List[ChainTuple]:
    """All maximal chains from a level-k root to level k+m, lexicographic."""
    return sorted(product(*(range(1, fib(k + s) + 1) for s in range(1, m + 1))))


def ratio_identity(n: int, k: int) -> bool:
    """Chain-count bookkeeping behind the copy count.

    The maximal chains above a level-k vertex up to level n, in number
    F-factorial(n)/F-factorial(k), split into fibonomial(n, k) families of
    F-factorial(n-k) chains each.
    """
    if not 0 < k <= n:
        raise ValueError(f"need 0 < k <= n, got ({n}, {k})")
    lhs = exact_div(f_factorial(n), f_factorial(k))
    return lhs == fibonomial(n, k) * f_factorial(n - k)


def find_tiling(
    k: int, r: int, m: int, unsafe_limits: bool = False
) -> Optional[TilingSolution]:
    """Search for a tiling by exact cover; None when the search exhausts.

    A solution necessarily has universe/family = fibonomial(k+m, m) copies.
    """
    universe_size = f_falling(k + m, m)
    ensure_within("chain universe size", universe_size, UNIVERSE_LIMIT, unsafe_limits)
    candidates = enumerate_copies(k, r, m, unsafe_limits)
    universe = chain_universe(k, m)
    families = [chains_of_copy(c) for c in candidates]
    rows = exactcover.solve_first(universe, families)
    if rows is None:
        return None
    copies = tuple(candidates[i] for i in rows)
    assignment = {
        chain: idx for idx, c in enumerate(copies) for chain in sorted(chains_of_copy(c))
    }
    return TilingSolution(VertexCoord(r, k), m, copies, assignment)


def count_all_tilings(k: int, r: int, m: int, unsafe_limits: bool = False) -> int:
    """Number of distinct tilings; guarded tightly because counts explode."""
    universe_size = f_falling(k + m, m)
    ensure_within(
        "chain universe size (count-all)", universe_size, COUNT_ALL_LIMIT, unsafe_limits
    )
    candidates = enumerate_copies(k, r, m, unsafe_limits)
    return exactcover.count_covers(
        chain_universe(k, m), [chains_of_copy(c) for c in candidates]
    )


def verify_tiling(t: TilingSolution) -> bool:
    """Structural check: shared root, well-formed copies, disjoint families
    partitioning the full chain universe, consistent assignment."""
    k, m = t.root.s, t.height
    if not (k >= 1 and 1 <= t.root.j <= fib(k) and m >= 1):
        return False
    seen: Dict[ChainTuple, int] = {}
    for idx, c in enumerate(t.copies):
        if c.root != t.root or c.height != m:
            return False
        for s, subset in enumerate(c.chosen, start=1):
            if len(subset) != fib(s) or len(set(subset)) != len(subset):
                return False
            if not all(1 <= pos <= fib(k + s) for pos in subset):
                return False
        for chain in chains_of_copy(c):
            if chain in seen:
                return False
            seen[chain] = idx
    if len(seen) != f_falling(k + m, m):
        return False
    return t.assignment == seen


def recurrence_decomposition_check(n: int, k: int) -> bool:
    """Arithmetic of the two-class split of the copy count, both forms,
    plus the symmetry rewrite of the second class."""
    if not 0 < k <= n:
        raise ValueError(f"need 0 < k <= n, got ({n}, {k})")
    target = fibonomial(n + 1, k)
    form_a = fib(k - 1) * fibonomial(n, k) + fib(n - k + 2) * fibonomial(n, k - 1)
    form_b = fib(k + 1) * fibonomial(n, k) + fib(n - k) * fibonomial(n, k - 1)
    rewrite = fib(n - k) * fibonomial(n, k - 1) == fib(n - k) * fibonomial(
        n, n - k + 1
    )
    return target == form_a and target == form_b and rewrite
