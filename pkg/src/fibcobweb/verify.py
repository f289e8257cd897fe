"""Self-verification suites: every library invariant at its contract range.

Each check compares two independent computation routes (closed form vs
recurrence, construction vs formula, search vs arithmetic, ...) and reports a
counterexample on failure. The CLI surfaces these as `verify --suite NAME`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Callable, Dict, List, Optional, Tuple

from . import cobweb, fence, gvpaths, tiling, weighted
from .seqcore import (
    f_factorial,
    f_falling,
    fib,
    fibonomial,
    fibonomial_rec,
    q_binomial,
)

TILING_INSTANCES = ((1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 2))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _result(name: str, counterexample: Optional[str], ok_detail: str = "") -> CheckResult:
    if counterexample is None:
        return CheckResult(name, True, ok_detail)
    return CheckResult(name, False, f"counterexample: {counterexample}")


# ---------------------------------------------------------------- arithmetic


def check_fibonomial_symmetry(max_n: int = 40) -> CheckResult:
    for n in range(max_n + 1):
        for k in range(n + 1):
            if fibonomial(n, k) != fibonomial(n, n - k):
                return _result("fibonomial symmetry", f"(n, k) = ({n}, {k})")
    return _result("fibonomial symmetry", None, f"n <= {max_n}")


def check_fibonomial_recurrences(max_n: int = 30) -> CheckResult:
    for n in range(max_n + 1):
        for k in range(n + 1):
            want = fibonomial(n, k)
            for variant in ("A", "B"):
                if fibonomial_rec(n, k, variant) != want:
                    return _result(
                        "fibonomial recurrence consistency",
                        f"variant {variant} at (n, k) = ({n}, {k})",
                    )
    return _result("fibonomial recurrence consistency", None, f"n <= {max_n}")


def check_fibonomial_integrality(max_n: int = 200) -> CheckResult:
    for n in range(max_n + 1):
        falling = 1
        for k in range(n + 1):
            if k > 0:
                falling *= fib(n - k + 1)
            if falling % f_factorial(k) != 0:
                return _result("fibonomial integrality", f"(n, k) = ({n}, {k})")
    return _result("fibonomial integrality", None, f"n <= {max_n}")


def check_falling_factorial_identity(max_n: int = 40) -> CheckResult:
    for n in range(max_n + 1):
        for k in range(n + 1):
            if f_falling(n, k) * f_factorial(n - k) != f_factorial(n):
                return _result(
                    "falling times complementary factorial", f"(n, k) = ({n}, {k})"
                )
    return _result("falling times complementary factorial", None, f"n <= {max_n}")


def check_q_binomial_coefficients(max_n: int = 12) -> CheckResult:
    for n in range(max_n + 1):
        for k in range(n + 1):
            poly = q_binomial(n, k)
            if any(c < 0 for c in poly.coeffs):
                return _result(
                    "q-binomial coefficient nonnegativity", f"(n, k) = ({n}, {k})"
                )
            if poly.evaluate(1) != math.comb(n, k):
                return _result(
                    "q-binomial coefficient sum", f"(n, k) = ({n}, {k})"
                )
    return _result("q-binomial coefficient nonnegativity and sum", None, f"n <= {max_n}")


def _weight_vectors(max_len: int, entries: Tuple[int, ...]):
    for length in range(max_len + 1):
        for ws in combinations_with_replacement(sorted(entries), length):
            yield ws


def check_konvalina_oracles(
    max_len: int = 8, entries: Tuple[int, ...] = (1, 2, 3), max_k: int = 8
) -> CheckResult:
    for ws in _weight_vectors(max_len, entries):
        for k in range(max_k + 1):
            if weighted.c_coeff(ws, k) != weighted.c_coeff_oracle(ws, k):
                return _result("first-kind coefficient vs oracle", f"w = {ws}, k = {k}")
            if not ws and k >= 1:
                continue
            if weighted.s_coeff(ws, k) != weighted.s_coeff_oracle(ws, k):
                return _result("second-kind coefficient vs oracle", f"w = {ws}, k = {k}")
    return _result(
        "weighted coefficients vs brute-force oracles",
        None,
        f"len <= {max_len} over {entries}, k <= {max_k}",
    )


def check_konvalina_binomial_preset(max_n: int = 10, max_k: int = 10) -> CheckResult:
    for n in range(1, max_n + 1):
        ones = weighted.preset_weights("ones", n)
        for k in range(max_k + 1):
            if weighted.c_coeff(ones, k) != math.comb(n, k):
                return _result("ones preset, first kind", f"(n, k) = ({n}, {k})")
            if weighted.s_coeff(ones, k) != math.comb(n + k - 1, k):
                return _result("ones preset, second kind", f"(n, k) = ({n}, {k})")
    return _result("ones preset reproduces binomials", None, f"n, k <= {max_n}")


@lru_cache(maxsize=None)
def stirling1_unsigned(n: int, k: int) -> int:
    """Triangle recurrence c(n, k) = c(n-1, k-1) + (n-1) c(n-1, k)."""
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    return stirling1_unsigned(n - 1, k - 1) + (n - 1) * stirling1_unsigned(n - 1, k)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Triangle recurrence S(n, k) = S(n-1, k-1) + k S(n-1, k)."""
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    return stirling2(n - 1, k - 1) + k * stirling2(n - 1, k)


def check_konvalina_stirling_presets(max_n: int = 7, max_k: int = 7) -> CheckResult:
    for n in range(1, max_n + 1):
        arith = weighted.preset_weights("arithmetic", n)
        for k in range(max_k + 1):
            if weighted.c_coeff(arith, k) != stirling1_unsigned(n + 1, n + 1 - k):
                return _result(
                    "arithmetic preset, first kind vs Stirling triangle",
                    f"(n, k) = ({n}, {k})",
                )
            if weighted.s_coeff(arith, k) != stirling2(n + k, n):
                return _result(
                    "arithmetic preset, second kind vs Stirling triangle",
                    f"(n, k) = ({n}, {k})",
                )
    return _result(
        "arithmetic preset reproduces Stirling numbers", None, f"n, k <= {max_n}"
    )


def check_konvalina_gaussian_preset(
    max_n: int = 6, max_k: int = 6, qs: Tuple[int, ...] = (2, 3)
) -> CheckResult:
    for q in qs:
        for n in range(1, max_n + 1):
            geo = weighted.preset_weights("geometric", n, q)
            for k in range(max_k + 1):
                if weighted.s_coeff(geo, k) != q_binomial(n + k - 1, k).evaluate(q):
                    return _result(
                        "geometric preset, second kind vs q-binomial",
                        f"(n, k, q) = ({n}, {k}, {q})",
                    )
    return _result(
        "geometric preset reproduces q-binomials", None, f"n, k <= {max_n}, q in {qs}"
    )


# --------------------------------------------------------------------- poset


def check_zeta_equivalence(
    max_level: int = 10, _corrupt: Optional[Tuple[int, int]] = None
) -> CheckResult:
    for level in range(1, max_level + 1):
        p = cobweb.build(level)
        explicit = cobweb.zeta_explicit(p)
        if _corrupt is not None and max(_corrupt) <= explicit.dim:
            x, y = _corrupt
            rows = [list(row) for row in explicit.rows]
            rows[x - 1][y - 1] ^= 1
            explicit = cobweb.IncMatrix(rows)
        diff = cobweb.zeta_from_order(p).first_difference(explicit)
        if diff is not None:
            return _result(
                "zeta construction equivalence", f"N = {level}, entry {diff}"
            )
    return _result("zeta construction equivalence", None, f"N <= {max_level}")


def check_mobius_inverse(max_level: int = 10) -> CheckResult:
    for level in range(1, max_level + 1):
        p = cobweb.build(level)
        zeta = cobweb.zeta_from_order(p)
        mob = cobweb.mobius(p)
        ident = cobweb.IncMatrix.identity(zeta.dim)
        if zeta * mob != ident or mob * zeta != ident:
            return _result("mobius inverse", f"N = {level}")
    return _result("mobius inverse", None, f"N <= {max_level}")


def check_mobius_alternating_sum(max_level: int = 6) -> CheckResult:
    p = cobweb.build(max_level)
    zeta = cobweb.zeta_from_order(p)
    mob = cobweb.mobius(p)
    n = zeta.dim
    for x in range(1, n + 1):
        for y in range(x, n + 1):
            if not zeta.entry(x, y):
                continue
            total = sum(
                mob.entry(x, z)
                for z in range(x, y + 1)
                if zeta.entry(x, z) and zeta.entry(z, y)
            )
            if total != (1 if x == y else 0):
                return _result("mobius alternating sum", f"(x, y) = ({x}, {y})")
    return _result("mobius alternating sum", None, f"N = {max_level}")


def check_chain_observations(max_level: int = 6) -> CheckResult:
    p = cobweb.build(max_level)
    root = cobweb.VertexCoord(1, 1)
    for n in range(1, max_level + 1):
        chains = cobweb.enumerate_max_chains(p, root, n)
        if len(chains) != f_factorial(n):
            return _result("maximal chains from root", f"n = {n}")
        if cobweb.count_max_chains_from_root(p, n) != f_factorial(n):
            return _result("root chain count closed form", f"n = {n}")
    for k in range(1, max_level + 1):
        for j in range(1, fib(k) + 1):
            v = cobweb.VertexCoord(j, k)
            for n in range(k, max_level + 1):
                want = f_falling(n, n - k)
                if len(cobweb.enumerate_max_chains(p, v, n)) != want:
                    return _result(
                        "maximal chains from vertex", f"v = ({j}, {k}), n = {n}"
                    )
                if cobweb.count_max_chains_from_vertex(p, v, n) != want:
                    return _result(
                        "vertex chain count closed form", f"v = ({j}, {k}), n = {n}"
                    )
    return _result("maximal chain observations", None, f"levels <= {max_level}")


def _count_chains_brute(p: cobweb.CobwebPoset, x: int, y: int, memo: dict) -> int:
    if x == y:
        return 1
    key = (x, y)
    if key not in memo:
        memo[key] = sum(
            _count_chains_brute(p, z, y, memo)
            for z in range(x + 1, y + 1)
            if p.leq(x, z) and p.leq(z, y)
        )
    return memo[key]


def check_chain_counts(max_level: int = 5) -> CheckResult:
    p = cobweb.build(max_level)
    memo: dict = {}
    for x in range(1, p.vertex_count + 1):
        for y in range(1, p.vertex_count + 1):
            want = (
                _count_chains_brute(p, x, y, memo)
                if p.leq(x, y)
                else 0
            )
            if cobweb.count_all_chains(p, x, y) != want:
                return _result("all-chain counts vs brute force", f"(x, y) = ({x}, {y})")
    return _result("all-chain counts vs brute force", None, f"N = {max_level}")


# -------------------------------------------------------------------- tiling


def check_copy_enumeration(pairs=((1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3), (4, 2))) -> CheckResult:
    for k, m in pairs:
        want = tiling.copy_count(k, m)
        for r in range(1, fib(k) + 1):
            copies = tiling.enumerate_copies(k, r, m)
            if len(copies) != want:
                return _result("copy enumeration count", f"(k, r, m) = ({k}, {r}, {m})")
            per_copy = f_factorial(m)
            for c in copies[:50]:
                if len(tiling.chains_of_copy(c)) != per_copy:
                    return _result("chains per copy", f"(k, r, m) = ({k}, {r}, {m})")
    return _result("copy enumeration counts", None, f"pairs {pairs}")


def check_universe_arithmetic(max_n: int = 40) -> CheckResult:
    for n in range(1, max_n + 1):
        for m in range(n):
            k = n - m
            if f_falling(n, m) != fibonomial(n, m) * f_factorial(m):
                return _result("chain universe arithmetic", f"(k, m) = ({k}, {m})")
    return _result("chain universe arithmetic", None, f"k + m <= {max_n}")


def check_ratio_identity(max_n: int = 40) -> CheckResult:
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            if not tiling.ratio_identity(n, k):
                return _result("chain ratio identity", f"(n, k) = ({n}, {k})")
    return _result("chain ratio identity", None, f"n <= {max_n}")


def check_recurrence_decomposition(max_n: int = 30) -> CheckResult:
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            if not tiling.recurrence_decomposition_check(n, k):
                return _result("two-class recurrence split", f"(n, k) = ({n}, {k})")
    return _result("two-class recurrence split", None, f"n <= {max_n}")


def tiling_outcomes(
    instances: Tuple[Tuple[int, int], ...] = TILING_INSTANCES, r: int = 1
) -> Dict[Tuple[int, int], Optional[tiling.TilingSolution]]:
    return {(k, m): tiling.find_tiling(k, r, m) for k, m in instances}


def check_tiling_instances(
    instances: Tuple[Tuple[int, int], ...] = TILING_INSTANCES
) -> CheckResult:
    """Exact-cover outcomes: every found tiling must verify and carry exactly
    fibonomial(k+m, m) copies; exhausted searches are reported explicitly."""
    found, absent = [], []
    for (k, m), solution in tiling_outcomes(instances).items():
        if solution is None:
            absent.append(f"({k},{m})")
            continue
        expected = fibonomial(k + m, m)
        if not tiling.verify_tiling(solution):
            return _result("tiling search", f"(k, m) = ({k}, {m}) failed verification")
        if len(solution.copies) != expected:
            return _result(
                "tiling search",
                f"(k, m) = ({k}, {m}) has {len(solution.copies)} copies,"
                f" expected {expected}",
            )
        found.append(f"({k},{m})")
    detail = f"tilings found: {', '.join(found) or 'none'}"
    if absent:
        detail += f"; no cover exists (exhaustive search): {', '.join(absent)}"
    return CheckResult("tiling search on contract instances", True, detail)


# --------------------------------------------------------------------- paths


def check_paths_identity(max_n: int = 12) -> CheckResult:
    for n in range(max_n + 1):
        for k in range(n + 2):
            total = 0
            for r in combinations(range(n + 1), k):
                value = gvpaths.n_of_r(r, n)
                if value < 0:
                    return _result("path count nonnegativity", f"R = {r}, n = {n}")
                total += value
            if total != fibonomial(n + 1, k):
                return _result("path determinant sum", f"(n, k) = ({n}, {k})")
    return _result("path determinant sum identity", None, f"n <= {max_n}")


def check_determinant_routes(max_n: int = 8, max_k: int = 4) -> CheckResult:
    for n in range(max_n + 1):
        for k in range(min(max_k, n + 1) + 1):
            for r in combinations(range(n + 1), k):
                matrix = gvpaths.path_matrix(r, n)
                if gvpaths.det_exact(matrix) != gvpaths.det_cofactor(matrix):
                    return _result(
                        "fraction-free vs cofactor determinant", f"R = {r}, n = {n}"
                    )
    return _result(
        "fraction-free vs cofactor determinant", None, f"k <= {max_k}, n <= {max_n}"
    )


# --------------------------------------------------------------------- fence


def check_fence_oracle(max_m: int = 15) -> CheckResult:
    for m in range(max_m + 1):
        if fence.count_ideals(m) != fence.count_ideals_oracle(m):
            return _result("fence ideals vs brute force", f"m = {m}")
    return _result("fence ideals vs brute force", None, f"m <= {max_m}")


def check_fence_fibonacci(max_m: int = 30) -> CheckResult:
    for m in range(max_m + 1):
        if fence.count_ideals(m) != fib(m + 2):
            return _result("fence ideal count Fibonacci form", f"m = {m}")
    return _result("fence ideal count Fibonacci form", None, f"m <= {max_m}")


def check_fence_duality(max_m: int = 12) -> CheckResult:
    for m in range(max_m + 1):
        if fence.count_ideals_oracle(m) != fence.count_filters_oracle(m):
            return _result("fence ideal/filter duality", f"m = {m}")
    return _result("fence ideal/filter duality", None, f"m <= {max_m}")


def check_beck_identities(max_n: int = 40) -> CheckResult:
    for n in range(2, max_n + 1):
        for k in range(2, n + 1):
            if not fence.beck_identities(n, k):
                return _result("Fibonacci split identities", f"(n, k) = ({n}, {k})")
    return _result("Fibonacci split identities", None, f"n <= {max_n}")


# -------------------------------------------------------------------- suites

Check = Callable[[], CheckResult]

SUITES: Dict[str, Tuple[Check, ...]] = {
    "arith": (
        check_fibonomial_symmetry,
        check_fibonomial_recurrences,
        check_fibonomial_integrality,
        check_falling_factorial_identity,
        check_q_binomial_coefficients,
        check_konvalina_oracles,
        check_konvalina_binomial_preset,
        check_konvalina_stirling_presets,
        check_konvalina_gaussian_preset,
    ),
    "poset": (
        check_zeta_equivalence,
        check_mobius_inverse,
        check_mobius_alternating_sum,
        check_chain_observations,
        check_chain_counts,
    ),
    "tiling": (
        check_copy_enumeration,
        check_universe_arithmetic,
        check_ratio_identity,
        check_recurrence_decomposition,
        check_tiling_instances,
    ),
    "paths": (
        check_paths_identity,
        check_determinant_routes,
    ),
    "fence": (
        check_fence_oracle,
        check_fence_fibonacci,
        check_fence_duality,
        check_beck_identities,
    ),
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suite(name: str) -> List[CheckResult]:
    if name == "all":
        results: List[CheckResult] = []
        for suite in SUITES.values():
            results.extend(check() for check in suite)
        return results
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    return [check() for check in SUITES[name]]
