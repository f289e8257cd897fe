"""The truncated Fibonacci cobweb poset and its incidence algebra.

Level s holds F_s vertices; consecutive levels are completely connected, so
two distinct vertices are comparable exactly when they sit on different
levels. Vertices are linearised level by level: level s occupies 1-based
indices F_{s+1} .. F_{s+2}-1 (the prefix sum F_1+...+F_{s-1} equals
F_{s+1}-1). The order-indicator matrix is built both from the comparability
predicate and from an explicit Kronecker-delta expansion, and its exact
integer inverse gives the Mobius matrix.
"""

from __future__ import annotations

from bisect import bisect_right
from functools import lru_cache
from itertools import product
from typing import Iterator, List, NamedTuple, Optional, Tuple

from .guards import ensure_within
from .seqcore import fib

ENUMERATION_LIMIT = 10**6


class VertexCoord(NamedTuple):
    """Position j (1-based) within level s (1-based)."""

    j: int
    s: int


class CobwebPoset:
    """Immutable cobweb poset truncated to levels 1..max_level."""

    __slots__ = ("max_level", "level_sizes", "level_starts", "vertex_count")

    def __init__(self, max_level: int):
        if max_level < 1:
            raise ValueError(f"max_level must be >= 1, got {max_level}")
        sizes = tuple(fib(s) for s in range(1, max_level + 1))
        starts = tuple(fib(s + 1) for s in range(1, max_level + 1))
        object.__setattr__(self, "max_level", max_level)
        object.__setattr__(self, "level_sizes", sizes)
        object.__setattr__(self, "level_starts", starts)
        object.__setattr__(self, "vertex_count", fib(max_level + 2) - 1)

    def __setattr__(self, name, value):
        raise AttributeError("CobwebPoset is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, CobwebPoset) and other.max_level == self.max_level

    def __hash__(self) -> int:
        return hash(("CobwebPoset", self.max_level))

    def __repr__(self) -> str:
        return f"CobwebPoset(max_level={self.max_level})"

    def _check_index(self, x: int) -> None:
        if not 1 <= x <= self.vertex_count:
            raise ValueError(
                f"linear index {x} out of range 1..{self.vertex_count}"
            )

    def _check_coord(self, v: VertexCoord) -> None:
        if not 1 <= v.s <= self.max_level:
            raise ValueError(f"level {v.s} out of range 1..{self.max_level}")
        if not 1 <= v.j <= self.level_sizes[v.s - 1]:
            raise ValueError(
                f"position {v.j} out of range 1..{self.level_sizes[v.s - 1]}"
                f" at level {v.s}"
            )

    def linear_index(self, v: VertexCoord) -> int:
        """1-based linear index of v: F_{s+1} - 1 + j."""
        v = VertexCoord(*v)
        self._check_coord(v)
        return self.level_starts[v.s - 1] - 1 + v.j

    def coord_of(self, x: int) -> VertexCoord:
        """Inverse of linear_index."""
        self._check_index(x)
        s = bisect_right(self.level_starts, x)
        return VertexCoord(x - self.level_starts[s - 1] + 1, s)

    def level_of(self, x: int) -> int:
        self._check_index(x)
        return bisect_right(self.level_starts, x)

    def level_range(self, s: int) -> range:
        """Linear indices of level s."""
        if not 1 <= s <= self.max_level:
            raise ValueError(f"level {s} out of range 1..{self.max_level}")
        start = self.level_starts[s - 1]
        return range(start, start + self.level_sizes[s - 1])

    def leq(self, x: int, y: int) -> bool:
        """Order relation on linear indices."""
        if x == y:
            self._check_index(x)
            return True
        return self.level_of(x) < self.level_of(y)

    def hasse_edges(self) -> Iterator[Tuple[int, int]]:
        """Cover pairs (lower, upper), between consecutive levels only."""
        for s in range(1, self.max_level):
            for x in self.level_range(s):
                for y in self.level_range(s + 1):
                    yield x, y


def build(max_level: int) -> CobwebPoset:
    return CobwebPoset(max_level)


class IncMatrix:
    """Immutable square integer matrix with 1-based accessors."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        frozen = tuple(tuple(int(v) for v in row) for row in rows)
        dim = len(frozen)
        for row in frozen:
            if len(row) != dim:
                raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", frozen)

    def __setattr__(self, name, value):
        raise AttributeError("IncMatrix is immutable")

    @property
    def dim(self) -> int:
        return len(self.rows)

    def entry(self, x: int, y: int) -> int:
        if not (1 <= x <= self.dim and 1 <= y <= self.dim):
            raise ValueError(f"entry ({x}, {y}) out of range 1..{self.dim}")
        return self.rows[x - 1][y - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, IncMatrix) and other.rows == self.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IncMatrix(dim={self.dim})"

    @classmethod
    def identity(cls, dim: int) -> "IncMatrix":
        return cls(
            tuple(
                tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)
            )
        )

    def __mul__(self, other: "IncMatrix") -> "IncMatrix":
        if not isinstance(other, IncMatrix):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        n = self.dim
        brows = other.rows
        out = []
        for arow in self.rows:
            acc = [0] * n
            for t, a in enumerate(arow):
                if a == 0:
                    continue
                brow = brows[t]
                for j, b in enumerate(brow):
                    if b:
                        acc[j] += a * b
            out.append(acc)
        return IncMatrix(out)

    def first_difference(self, other: "IncMatrix") -> Optional[Tuple[int, int]]:
        """First (row, col) where the matrices disagree, 1-based; None if equal."""
        if other.dim != self.dim:
            return (0, 0)
        for i, (ra, rb) in enumerate(zip(self.rows, other.rows)):
            if ra != rb:
                for j, (a, b) in enumerate(zip(ra, rb)):
                    if a != b:
                        return (i + 1, j + 1)
        return None

    def inverse_unit_upper(self) -> "IncMatrix":
        """Exact inverse of a unit-diagonal upper-triangular matrix."""
        n = self.dim
        rows = self.rows
        for i in range(n):
            if rows[i][i] != 1:
                raise ValueError("matrix does not have a unit diagonal")
            if any(rows[i][j] for j in range(i)):
                raise ValueError("matrix is not upper triangular")
        inv: List[List[int]] = [[0] * n for _ in range(n)]
        for j in range(n):
            inv[j][j] = 1
            for i in range(j - 1, -1, -1):
                s = 0
                arow = rows[i]
                for t in range(i + 1, j + 1):
                    a = arow[t]
                    if a:
                        s += a * inv[t][j]
                inv[i][j] = -s
        return IncMatrix(inv)

    def dump(self) -> str:
        """Plain-text rows, entries space-separated."""
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows)


@lru_cache(maxsize=None)
def _zeta_from_order(max_level: int) -> IncMatrix:
    p = CobwebPoset(max_level)
    n = p.vertex_count
    levels = [p.level_of(x) for x in range(1, n + 1)]
    rows = []
    for x in range(1, n + 1):
        lx = levels[x - 1]
        rows.append(
            tuple(
                1 if (x == y or lx < levels[y - 1]) else 0 for y in range(1, n + 1)
            )
        )
    return IncMatrix(rows)


@lru_cache(maxsize=None)
def _zeta_explicit(max_level: int) -> IncMatrix:
    p = CobwebPoset(max_level)
    n = p.vertex_count
    rows = [[0] * n for _ in range(n)]
    # First summand: 1 whenever y = x + k for some k >= 0 (the sums below are
    # truncated at the matrix dimension; all deltas vanish beyond it).
    for x in range(1, n + 1):
        for y in range(x, n + 1):
            rows[x - 1][y - 1] = 1
    # Subtracted summand: for x = F_{s+1} + k it clears the k-th vertex's
    # remaining same-level entries y = x + r, 1 <= r <= F_s - k - 1.
    for x in range(1, n + 1):
        for s in range(1, max_level + 1):
            k = x - fib(s + 1)
            if k < 0:
                continue
            for r in range(1, fib(s) - k):
                y = x + r
                if y <= n:
                    rows[x - 1][y - 1] -= 1
    return IncMatrix(rows)


@lru_cache(maxsize=None)
def _mobius(max_level: int) -> IncMatrix:
    return _zeta_from_order(max_level).inverse_unit_upper()


@lru_cache(maxsize=None)
def _chain_matrix(max_level: int) -> IncMatrix:
    # Entry (x, y) counts chains x = z_0 < ... < z_t = y of every length:
    # the inverse of (identity - strict-order indicator).
    zeta = _zeta_from_order(max_level)
    n = zeta.dim
    ident_minus_eta = IncMatrix(
        tuple(
            tuple(
                (2 if i == j else 0) - zeta.rows[i][j] for j in range(n)
            )
            for i in range(n)
        )
    )
    return ident_minus_eta.inverse_unit_upper()


def zeta_from_order(p: CobwebPoset) -> IncMatrix:
    """Order-indicator matrix built from the comparability predicate."""
    return _zeta_from_order(p.max_level)


def zeta_explicit(p: CobwebPoset) -> IncMatrix:
    """Order-indicator matrix built from the Kronecker-delta expansion."""
    return _zeta_explicit(p.max_level)


def mobius(p: CobwebPoset) -> IncMatrix:
    """Exact integer inverse of the order-indicator matrix."""
    return _mobius(p.max_level)


def count_max_chains_from_root(p: CobwebPoset, n: int) -> int:
    """Maximal chains from the root hitting one vertex per level 1..n."""
    if not 1 <= n <= p.max_level:
        raise ValueError(f"target level {n} out of range 1..{p.max_level}")
    count = 1
    for s in range(2, n + 1):
        count *= p.level_sizes[s - 1]
    return count


def count_max_chains_from_vertex(p: CobwebPoset, v: VertexCoord, n: int) -> int:
    """Maximal chains from v (any vertex of its level) up to level n."""
    v = VertexCoord(*v)
    p._check_coord(v)
    if not v.s <= n <= p.max_level:
        raise ValueError(f"target level {n} out of range {v.s}..{p.max_level}")
    count = 1
    for s in range(v.s + 1, n + 1):
        count *= p.level_sizes[s - 1]
    return count


def enumerate_max_chains(
    p: CobwebPoset, v: VertexCoord, n: int, unsafe_limits: bool = False
) -> List[Tuple[VertexCoord, ...]]:
    """All maximal chains from v to level n, in lexicographic order."""
    v = VertexCoord(*v)
    total = count_max_chains_from_vertex(p, v, n)
    ensure_within("maximal chain count", total, ENUMERATION_LIMIT, unsafe_limits)
    upper = [
        [VertexCoord(j, s) for j in range(1, p.level_sizes[s - 1] + 1)]
        for s in range(v.s + 1, n + 1)
    ]
    return [(v, *rest) for rest in product(*upper)]


def count_all_chains(p: CobwebPoset, x: int, y: int) -> int:
    """Chains x = z_0 < ... < z_t = y of every length; 0 for incomparable pairs."""
    p._check_index(x)
    p._check_index(y)
    if x > y:
        return 0
    return _chain_matrix(p.max_level).entry(x, y)
