import math

import pytest

from fibcobweb.cobweb import VertexCoord
from fibcobweb.guards import GuardExceeded
from fibcobweb.seqcore import f_factorial, fib, fibonomial
from fibcobweb.tiling import (
    CopySpec,
    TilingSolution,
    chain_universe,
    chains_of_copy,
    copy_count,
    count_all_tilings,
    enumerate_copies,
    find_tiling,
    ratio_identity,
    recurrence_decomposition_check,
    verify_tiling,
)


def test_enumerate_copies_counts():
    assert len(enumerate_copies(1, 1, 2)) == 2
    assert len(enumerate_copies(2, 1, 3)) == 60
    assert len(enumerate_copies(1, 1, 1)) == 1


def test_copy_count_formula():
    for k, m in [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3), (4, 2)]:
        want = math.prod(math.comb(fib(k + s), fib(s)) for s in range(1, m + 1))
        assert copy_count(k, m) == want
        for r in range(1, fib(k) + 1):
            assert len(enumerate_copies(k, r, m)) == want


def test_enumerate_copies_validation():
    with pytest.raises(ValueError):
        enumerate_copies(0, 1, 2)
    with pytest.raises(ValueError):
        enumerate_copies(3, 3, 2)  # level 3 has 2 positions
    with pytest.raises(ValueError):
        enumerate_copies(2, 1, 0)


def test_enumerate_copies_guard():
    with pytest.raises(GuardExceeded):
        enumerate_copies(6, 1, 3)  # 13 * 21 * C(34, 2) candidates


def test_copy_structure():
    copies = enumerate_copies(2, 1, 3)
    for c in copies:
        assert c.root == VertexCoord(1, 2)
        assert [len(s) for s in c.chosen] == [fib(1), fib(2), fib(3)]
    assert copies == sorted(copies, key=lambda c: c.chosen)


@pytest.mark.parametrize("m,expected", [(2, 1), (3, 2), (4, 6)])
def test_chains_per_copy(m, expected):
    c = enumerate_copies(1, 1, m)[0]
    assert len(chains_of_copy(c)) == expected
    assert expected == f_factorial(m)


def test_chain_universe():
    u = chain_universe(2, 3)
    assert len(u) == 30
    assert u == sorted(u)
    assert u[0] == (1, 1, 1)
    assert u[-1] == (2, 3, 5)


def test_ratio_identity_examples():
    assert ratio_identity(5, 2)
    assert ratio_identity(7, 7)
    assert ratio_identity(10, 5)
    for n in range(1, 21):
        for k in range(1, n + 1):
            assert ratio_identity(n, k)
    with pytest.raises(ValueError):
        ratio_identity(5, 0)
    with pytest.raises(ValueError):
        ratio_identity(3, 4)


FEASIBLE = [(1, 1, 1), (1, 1, 2), (2, 1, 2), (3, 1, 2), (3, 2, 2), (3, 1, 3)]
COVERLESS = [(1, 1, 3), (2, 1, 3)]


@pytest.mark.parametrize("k,r,m", FEASIBLE)
def test_find_tiling_feasible(k, r, m):
    solution = find_tiling(k, r, m)
    assert solution is not None
    assert solution.root == VertexCoord(r, k)
    assert len(solution.copies) == fibonomial(k + m, m)
    assert verify_tiling(solution)


@pytest.mark.parametrize("k,r,m", COVERLESS)
def test_find_tiling_exhausts(k, r, m):
    assert find_tiling(k, r, m) is None


def test_find_tiling_guard():
    with pytest.raises(GuardExceeded):
        find_tiling(1, 1, 10)


def test_find_tiling_deterministic():
    a = find_tiling(3, 1, 3)
    b = find_tiling(3, 1, 3)
    assert a == b
    assert a.assignment == b.assignment


def test_verify_tiling_rejects_tampering():
    solution = find_tiling(3, 1, 2)
    assert verify_tiling(solution)

    # duplicated copy covers a chain twice
    tampered = TilingSolution(
        solution.root,
        solution.height,
        (solution.copies[0],) + solution.copies,
        solution.assignment,
    )
    assert not verify_tiling(tampered)

    # dropped copy leaves chains uncovered
    tampered = TilingSolution(
        solution.root, solution.height, solution.copies[1:], solution.assignment
    )
    assert not verify_tiling(tampered)

    # root mismatch
    moved = TilingSolution(
        VertexCoord(2, 3), solution.height, solution.copies, solution.assignment
    )
    assert not verify_tiling(moved)

    # assignment pointing at the wrong copy
    broken = dict(solution.assignment)
    first_chain = next(iter(broken))
    broken[first_chain] = (broken[first_chain] + 1) % len(solution.copies)
    tampered = TilingSolution(
        solution.root, solution.height, solution.copies, broken
    )
    assert not verify_tiling(tampered)


def test_verify_tiling_rejects_malformed_copy():
    solution = find_tiling(1, 1, 2)
    bad_copy = CopySpec(solution.root, ((1,), (0,)))  # position 0 out of range
    tampered = TilingSolution(
        solution.root, solution.height, (bad_copy,) + solution.copies[1:],
        solution.assignment,
    )
    assert not verify_tiling(tampered)


def test_count_all_tilings():
    assert count_all_tilings(1, 1, 2) == 1
    assert count_all_tilings(2, 1, 2) == 1
    assert count_all_tilings(3, 1, 2) == 1
    assert count_all_tilings(1, 1, 3) == 0
    with pytest.raises(GuardExceeded):
        count_all_tilings(3, 1, 3)  # 120-chain universe over the count-all limit


def test_recurrence_decomposition_examples():
    assert recurrence_decomposition_check(5, 2)
    assert fibonomial(6, 2) == 40
    assert fib(3) * fibonomial(5, 2) + fib(3) * fibonomial(5, 1) == 40
    assert fib(1) * fibonomial(5, 2) + fib(5) * fibonomial(5, 1) == 40
    assert recurrence_decomposition_check(1, 1)
    for n in range(1, 16):
        for k in range(1, n + 1):
            assert recurrence_decomposition_check(n, k)
        assert fibonomial(n + 1, n) == fib(n + 1)
    with pytest.raises(ValueError):
        recurrence_decomposition_check(4, 0)
    with pytest.raises(ValueError):
        recurrence_decomposition_check(4, 5)
