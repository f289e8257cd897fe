"""Weighted-box binomial coefficients of the first and second kind.

The first kind selects k distinct boxes (elementary symmetric sums of the
weights), the second kind allows box repetition (complete homogeneous sums).
Preset weight vectors recover binomials, Stirling numbers of both kinds, and
Gaussian coefficients.
"""

from __future__ import annotations

import math
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence, Union

from .guards import ensure_within

ORACLE_LIMIT = 12


class WeightVector:
    """Nondecreasing positive integer weights (w_1, ..., w_n)."""

    __slots__ = ("weights",)

    def __init__(self, weights: Iterable[int], sort: bool = False):
        ws = tuple(int(w) for w in weights)
        for w in ws:
            if w < 1:
                raise ValueError(f"weights must be >= 1, got {w}")
        if sort:
            ws = tuple(sorted(ws))
        elif any(a > b for a, b in zip(ws, ws[1:])):
            raise ValueError(f"weights must be nondecreasing, got {ws}")
        object.__setattr__(self, "weights", ws)

    def __setattr__(self, name, value):
        raise AttributeError("WeightVector is immutable")

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, WeightVector):
            return self.weights == other.weights
        if isinstance(other, tuple):
            return self.weights == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.weights)

    def __repr__(self) -> str:
        return f"WeightVector{self.weights}"


Weights = Union[WeightVector, Sequence[int]]


def _coerce(w: Weights) -> tuple:
    if isinstance(w, WeightVector):
        return w.weights
    return WeightVector(w).weights


def c_coeff(w: Weights, k: int) -> int:
    """First-kind coefficient: sum of products over k strictly increasing boxes.

    Computed by the recurrence C_k^n = C_k^{n-1} + w_n C_{k-1}^{n-1} with
    C_0^n = 1 and C_k^0 = 0 for k > 0.
    """
    ws = _coerce(w)
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k > len(ws):
        return 0
    row = [1] + [0] * k  # row[j] = C_j over the current prefix
    for w_i in ws:
        for j in range(min(k, len(row) - 1), 0, -1):
            row[j] = row[j] + w_i * row[j - 1]
    return row[k]


def s_coeff(w: Weights, k: int) -> int:
    """Second-kind coefficient: sum of products over k nondecreasing boxes.

    Computed by the recurrence S_k^n = S_k^{n-1} + w_n S_{k-1}^n with
    S_0^n = 1 and S_k^0 = 0 for k > 0.
    """
    ws = _coerce(w)
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k == 0:
        return 1
    if not ws:
        raise ValueError("empty weight vector with k >= 1")
    row = [1] + [0] * k
    for w_i in ws:
        for j in range(1, k + 1):
            row[j] = row[j] + w_i * row[j - 1]
    return row[k]


def c_coeff_oracle(w: Weights, k: int, unsafe_limits: bool = False) -> int:
    """Brute-force enumeration of all strictly increasing index tuples."""
    ws = _coerce(w)
    ensure_within("oracle weight count", len(ws), ORACLE_LIMIT, unsafe_limits)
    ensure_within("oracle k", k, ORACLE_LIMIT, unsafe_limits)
    return sum(math.prod(t) for t in combinations(ws, k))


def s_coeff_oracle(w: Weights, k: int, unsafe_limits: bool = False) -> int:
    """Brute-force enumeration of all nondecreasing index tuples."""
    ws = _coerce(w)
    ensure_within("oracle weight count", len(ws), ORACLE_LIMIT, unsafe_limits)
    ensure_within("oracle k", k, ORACLE_LIMIT, unsafe_limits)
    if k >= 1 and not ws:
        raise ValueError("empty weight vector with k >= 1")
    return sum(math.prod(t) for t in combinations_with_replacement(ws, k))


PRESET_KINDS = ("ones", "arithmetic", "geometric")


def preset_weights(kind: str, n: int, q: int | None = None) -> WeightVector:
    """Named weight families: ones(n), arithmetic(n) = (1..n), geometric(n, q)."""
    if kind not in PRESET_KINDS:
        raise ValueError(f"kind must be one of {PRESET_KINDS}, got {kind!r}")
    if n < 1:
        raise ValueError(f"preset length must be >= 1, got {n}")
    if kind == "ones":
        return WeightVector((1,) * n)
    if kind == "arithmetic":
        return WeightVector(range(1, n + 1))
    if q is None or q < 1:
        raise ValueError(f"geometric preset needs an integer ratio q >= 1, got {q}")
    return WeightVector(q**i for i in range(n))
