"""Exact Fibonacci arithmetic: F-factorials, F-falling-factorials, Fibonomial
coefficients, and Gaussian q-binomial polynomials.

Everything is computed over Python's arbitrary-precision integers; divisions
are checked for zero remainder so an indexing-convention slip fails loudly
instead of silently truncating. Indexing is fixed at F_0 = 0, F_1 = F_2 = 1.
"""

from __future__ import annotations

import threading
from functools import lru_cache

_fib_cache = [0, 1]
_fib_lock = threading.Lock()

_ffact_cache = [1]
_ffact_lock = threading.Lock()


def exact_div(a: int, b: int) -> int:
    """Integer division that must be exact."""
    q, r = divmod(a, b)
    if r != 0:
        raise AssertionError(f"inexact division: {a} / {b} leaves remainder {r}")
    return q


def fib(n: int) -> int:
    """n-th Fibonacci number (F_0 = 0, F_1 = F_2 = 1)."""
    if n < 0:
        raise ValueError(f"Fibonacci index must be >= 0, got {n}")
    with _fib_lock:
        while len(_fib_cache) <= n:
            _fib_cache.append(_fib_cache[-1] + _fib_cache[-2])
        return _fib_cache[n]


def _fib_extended(n: int) -> int:
    # Backward extension F_{-m} = (-1)^{m+1} F_m; only needed by the B-form
    # recurrence at its k = n boundary (F_{-1} = 1).
    if n >= 0:
        return fib(n)
    m = -n
    value = fib(m)
    return value if m % 2 == 1 else -value


def f_factorial(n: int) -> int:
    """Product F_1 F_2 ... F_n, with the empty product 1 at n = 0."""
    if n < 0:
        raise ValueError(f"F-factorial index must be >= 0, got {n}")
    with _ffact_lock:
        while len(_ffact_cache) <= n:
            i = len(_ffact_cache)
            _ffact_cache.append(_ffact_cache[-1] * fib(i))
        return _ffact_cache[n]


def f_falling(n: int, k: int) -> int:
    """Falling product F_n F_{n-1} ... F_{n-k+1} (k factors)."""
    if k < 0:
        raise ValueError(f"length must be >= 0, got {k}")
    if k > n:
        raise ValueError(f"length {k} exceeds upper index {n}")
    result = 1
    for i in range(k):
        result *= fib(n - i)
    return result


def fibonomial(n: int, k: int) -> int:
    """Fibonomial coefficient F_n! / (F_k! F_{n-k}!); zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"indices must be >= 0, got ({n}, {k})")
    if k > n:
        return 0
    return exact_div(f_falling(n, k), f_factorial(k))


VARIANTS = ("A", "B")


def fibonomial_rec(n: int, k: int, variant: str = "A") -> int:
    """Fibonomial coefficient computed purely by one of the two recurrences.

    Variant A expands (n k) as F_{k-1}(n-1 k) + F_{n+1-k}(n-1 k-1), variant B
    as F_{k+1}(n-1 k) + F_{n-1-k}(n-1 k-1); both start from (n 0) = 1 and
    (0 k) = 0 for k > 0. Entries with k > n are 0 (every expansion path
    bottoms out at such a base case).
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if n < 0 or k < 0:
        raise ValueError(f"indices must be >= 0, got ({n}, {k})")
    return _fibonomial_rec(n, k, variant)


@lru_cache(maxsize=None)
def _fibonomial_rec(n: int, k: int, variant: str) -> int:
    if k == 0:
        return 1
    if n == 0 or k > n:
        return 0
    if variant == "A":
        return fib(k - 1) * _fibonomial_rec(n - 1, k, variant) + fib(
            n + 1 - k
        ) * _fibonomial_rec(n - 1, k - 1, variant)
    return fib(k + 1) * _fibonomial_rec(n - 1, k, variant) + _fib_extended(
        n - 1 - k
    ) * _fibonomial_rec(n - 1, k - 1, variant)


class IntPolynomial:
    """Immutable dense integer polynomial in one variable.

    Coefficients are stored lowest power first with trailing zeros stripped;
    the zero polynomial has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "IntPolynomial":
        if power < 0:
            raise ValueError("power must be >= 0")
        return cls((0,) * power + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial((other,))
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, power: int) -> "IntPolynomial":
        """Multiply by q^power."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * power + self.coeffs)

    def divexact(self, other: "IntPolynomial") -> "IntPolynomial":
        """Polynomial long division; raises unless the division is exact."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        div = other.coeffs
        if len(rem) < len(div):
            if any(rem):
                raise AssertionError("inexact polynomial division")
            return IntPolynomial()
        out = [0] * (len(rem) - len(div) + 1)
        for i in range(len(out) - 1, -1, -1):
            lead = rem[i + len(div) - 1]
            c = exact_div(lead, div[-1])
            out[i] = c
            if c:
                for j, d in enumerate(div):
                    rem[i + j] -= c * d
        if any(rem):
            raise AssertionError("inexact polynomial division")
        return IntPolynomial(out)

    def evaluate(self, x: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def __repr__(self) -> str:
        if self.is_zero():
            return "IntPolynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*q" if c != 1 else "q")
            else:
                terms.append(f"{c}*q^{i}" if c != 1 else f"q^{i}")
        return "IntPolynomial(" + " + ".join(terms) + ")"


def q_binomial(n: int, k: int) -> IntPolynomial:
    """Gaussian binomial polynomial in q; the zero polynomial when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"indices must be >= 0, got ({n}, {k})")
    return _q_binomial(n, k)


@lru_cache(maxsize=None)
def _q_binomial(n: int, k: int) -> IntPolynomial:
    # q-Pascal rule: (n k) = (n-1 k-1) + q^k (n-1 k)
    if k == 0:
        return IntPolynomial.one()
    if k > n:
        return IntPolynomial.zero()
    return _q_binomial(n - 1, k - 1) + _q_binomial(n - 1, k).shift(k)
