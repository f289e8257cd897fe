"""Binomial determinants counting nonintersecting path tuples.

For an index subset R = {r_1 < ... < r_k} of {0..n}, the determinant of the
matrix with entries C(r_i, n - r_{k+1-j}) counts nonintersecting k-tuples of
lattice paths; summed over all k-subsets it yields a Fibonomial coefficient.
Determinants are computed exactly with fraction-free elimination, with
cofactor expansion kept as the small-size cross-check.
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import List, Sequence, Tuple

from .guards import ensure_within
from .seqcore import exact_div

SUM_LIMIT = 14


def binomial(a: int, b: int) -> int:
    """Binomial coefficient, 0 when b > a."""
    if a < 0 or b < 0:
        raise ValueError(f"arguments must be >= 0, got ({a}, {b})")
    return math.comb(a, b)


def det_exact(matrix: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    for row in m:
        if len(row) != n:
            raise ValueError("matrix must be square")
    sign = 1
    prev_pivot = 1
    for t in range(n - 1):
        if m[t][t] == 0:
            for i in range(t + 1, n):
                if m[i][t] != 0:
                    m[t], m[i] = m[i], m[t]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[t][t]
        for i in range(t + 1, n):
            for j in range(t + 1, n):
                m[i][j] = exact_div(pivot * m[i][j] - m[i][t] * m[t][j], prev_pivot)
            m[i][t] = 0
        prev_pivot = pivot
    return sign * m[n - 1][n - 1]


def det_cofactor(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant by first-row cofactor expansion (cross-check oracle)."""
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    total = 0
    for c, head in enumerate(matrix[0]):
        if head == 0:
            continue
        minor = [
            [row[j] for j in range(n) if j != c] for row in matrix[1:]
        ]
        term = head * det_cofactor(minor)
        total += term if c % 2 == 0 else -term
    return total


def _validated(r: Sequence[int], n: int) -> Tuple[int, ...]:
    rs = tuple(r)
    if any(a >= b for a, b in zip(rs, rs[1:])):
        raise ValueError(f"index set must be strictly increasing, got {rs}")
    if rs and not (0 <= rs[0] and rs[-1] <= n):
        raise ValueError(f"index set {rs} not within 0..{n}")
    return rs


def path_matrix(r: Sequence[int], n: int) -> List[List[int]]:
    """The k x k binomial matrix attached to the index set."""
    rs = _validated(r, n)
    k = len(rs)
    return [
        [binomial(rs[i], n - rs[k - 1 - j]) for j in range(k)] for i in range(k)
    ]


def n_of_r(r: Sequence[int], n: int) -> int:
    """Nonintersecting path count for one index set (always >= 0)."""
    value = det_exact(path_matrix(r, n))
    if value < 0:
        raise ArithmeticError(
            f"path determinant for R={tuple(r)}, n={n} is negative ({value})"
        )
    return value


def fibonomial_via_paths(n: int, k: int, unsafe_limits: bool = False) -> int:
    """Sum of path counts over all k-subsets of {0..n}.

    Equals fibonomial(n+1, k); the k = 0 term is the empty determinant 1.
    """
    if n < 0 or k < 0:
        raise ValueError(f"indices must be >= 0, got ({n}, {k})")
    ensure_within("path sum upper index", n, SUM_LIMIT, unsafe_limits)
    return sum(n_of_r(r, n) for r in combinations(range(n + 1), k))
