import pytest

from fibcobweb.cobweb import (
    IncMatrix,
    VertexCoord,
    build,
    count_all_chains,
    count_max_chains_from_root,
    count_max_chains_from_vertex,
    enumerate_max_chains,
    mobius,
    zeta_explicit,
    zeta_from_order,
)
from fibcobweb.guards import GuardExceeded
from fibcobweb.seqcore import f_factorial, f_falling, fib


def test_build_examples():
    assert build(5).vertex_count == 12
    assert build(1).vertex_count == 1
    assert build(6).level_sizes == (1, 1, 2, 3, 5, 8)
    with pytest.raises(ValueError):
        build(0)


def test_level_layout():
    for n in range(1, 11):
        p = build(n)
        assert p.vertex_count == fib(n + 2) - 1
        for s in range(1, n + 1):
            r = p.level_range(s)
            assert r.start == fib(s + 1)
            assert len(r) == fib(s)


def test_linear_index_examples():
    p = build(6)
    assert p.linear_index(VertexCoord(1, 1)) == 1
    assert p.linear_index(VertexCoord(2, 3)) == 4
    assert p.coord_of(8) == VertexCoord(1, 5)


def test_index_coord_roundtrip():
    p = build(8)
    for x in range(1, p.vertex_count + 1):
        assert p.linear_index(p.coord_of(x)) == x
    for s in range(1, 9):
        for j in range(1, fib(s) + 1):
            v = VertexCoord(j, s)
            assert p.coord_of(p.linear_index(v)) == v


def test_coordinate_validation():
    p = build(4)
    with pytest.raises(ValueError):
        p.linear_index(VertexCoord(4, 4))  # level 4 has 3 vertices
    with pytest.raises(ValueError):
        p.linear_index(VertexCoord(1, 5))
    with pytest.raises(ValueError):
        p.coord_of(0)
    with pytest.raises(ValueError):
        p.coord_of(p.vertex_count + 1)


def test_order_relation():
    p = build(6)
    assert p.leq(1, 1)
    assert p.leq(3, 5) and p.leq(5, 13)
    assert not p.leq(3, 4)  # same level
    assert not p.leq(5, 3)


def test_hasse_edges_count():
    p = build(5)
    edges = list(p.hasse_edges())
    assert len(edges) == sum(fib(s) * fib(s + 1) for s in range(1, 5))
    assert (1, 2) in edges and (2, 3) in edges and (2, 4) in edges


def test_zeta_entries():
    z = zeta_from_order(build(6))
    assert all(z.entry(x, x) == 1 for x in range(1, 21))
    assert z.entry(3, 4) == 0
    assert z.entry(5, 8) == 1


def test_zeta_explicit_row_eight_zeros():
    z = zeta_explicit(build(6))
    assert [z.entry(8, y) for y in range(9, 13)] == [0, 0, 0, 0]
    assert [z.entry(8, y) for y in range(13, 16)] == [1, 1, 1]


def test_zeta_explicit_single_vertex():
    assert zeta_explicit(build(1)).rows == ((1,),)


def test_zeta_constructions_agree():
    for n in range(1, 11):
        p = build(n)
        assert zeta_explicit(p) == zeta_from_order(p)


def test_mobius_small_entries():
    m = mobius(build(3))
    assert all(m.entry(x, x) == 1 for x in range(1, 5))
    assert m.entry(1, 2) == -1
    assert m.entry(1, 3) == 0


def test_mobius_inverts_zeta():
    for n in range(1, 9):
        p = build(n)
        z = zeta_from_order(p)
        m = mobius(p)
        ident = IncMatrix.identity(z.dim)
        assert z * m == ident
        assert m * z == ident


def test_mobius_alternating_sum():
    p = build(5)
    z = zeta_from_order(p)
    m = mobius(p)
    for x in range(1, z.dim + 1):
        for y in range(x, z.dim + 1):
            if not z.entry(x, y):
                continue
            total = sum(
                m.entry(x, t)
                for t in range(x, y + 1)
                if z.entry(x, t) and z.entry(t, y)
            )
            assert total == (1 if x == y else 0)


def test_chain_counts_from_root():
    p = build(10)
    assert count_max_chains_from_root(p, 1) == 1
    assert count_max_chains_from_root(p, 5) == 30
    assert count_max_chains_from_root(p, 10) == 122522400
    for n in range(1, 11):
        assert count_max_chains_from_root(p, n) == f_factorial(n)
    with pytest.raises(ValueError):
        count_max_chains_from_root(p, 11)


def test_chain_counts_from_vertex():
    p = build(6)
    assert count_max_chains_from_vertex(p, VertexCoord(1, 3), 6) == 120
    assert count_max_chains_from_vertex(p, VertexCoord(2, 4), 4) == 1
    for k in range(1, 7):
        for j in range(1, fib(k) + 1):
            for n in range(k, 7):
                assert count_max_chains_from_vertex(
                    p, VertexCoord(j, k), n
                ) == f_falling(n, n - k)
    with pytest.raises(ValueError):
        count_max_chains_from_vertex(p, VertexCoord(1, 4), 3)


def test_chain_count_factorises_through_levels():
    p = build(8)
    for n in range(1, 9):
        for k in range(1, n + 1):
            assert count_max_chains_from_root(p, n) == count_max_chains_from_root(
                p, k
            ) * count_max_chains_from_vertex(p, VertexCoord(1, k), n)


def test_enumerate_max_chains():
    p = build(6)
    root_chains = enumerate_max_chains(p, VertexCoord(1, 1), 3)
    assert len(root_chains) == 2
    assert root_chains[0][0] == VertexCoord(1, 1)
    assert root_chains == sorted(root_chains)

    assert len(enumerate_max_chains(p, VertexCoord(1, 2), 2)) == 1
    assert len(enumerate_max_chains(p, VertexCoord(1, 2), 5)) == 30


def test_enumerate_lengths_match_counts():
    p = build(6)
    for k in range(1, 7):
        for j in range(1, fib(k) + 1):
            v = VertexCoord(j, k)
            for n in range(k, 7):
                assert len(enumerate_max_chains(p, v, n)) == f_falling(n, n - k)


def test_enumerate_guard():
    p = build(12)
    with pytest.raises(GuardExceeded):
        enumerate_max_chains(p, VertexCoord(1, 1), 12)


def _chains_brute(p, x, y):
    if x == y:
        return 1
    return sum(
        _chains_brute(p, z, y)
        for z in range(x + 1, y + 1)
        if p.leq(x, z) and p.leq(z, y)
    )


def test_count_all_chains():
    p3 = build(3)
    assert count_all_chains(p3, 2, 2) == 1
    assert count_all_chains(p3, 1, 3) == 2
    assert count_all_chains(p3, 3, 4) == 0
    assert count_all_chains(p3, 4, 1) == 0
    p4 = build(4)
    for x in range(1, p4.vertex_count + 1):
        for y in range(1, p4.vertex_count + 1):
            want = _chains_brute(p4, x, y) if p4.leq(x, y) else 0
            assert count_all_chains(p4, x, y) == want


def test_poset_equality_and_immutability():
    assert build(4) == build(4)
    assert build(4) != build(5)
    assert hash(build(4)) == hash(build(4))
    with pytest.raises(AttributeError):
        build(3).max_level = 7


def test_incmatrix_basics():
    m = IncMatrix(((1, 2), (0, 1)))
    assert m.dim == 2
    assert m.entry(1, 2) == 2
    assert m.dump() == "1 2\n0 1"
    with pytest.raises(ValueError):
        m.entry(0, 1)
    with pytest.raises(ValueError):
        IncMatrix(((1, 2), (3,)))
    inv = m.inverse_unit_upper()
    assert inv.rows == ((1, -2), (0, 1))
    assert m * inv == IncMatrix.identity(2)


def test_incmatrix_first_difference():
    a = IncMatrix(((1, 0), (0, 1)))
    b = IncMatrix(((1, 1), (0, 1)))
    assert a.first_difference(b) == (1, 2)
    assert a.first_difference(a) is None


def test_inverse_requires_unit_upper_triangular():
    with pytest.raises(ValueError):
        IncMatrix(((2, 0), (0, 1))).inverse_unit_upper()
    with pytest.raises(ValueError):
        IncMatrix(((1, 0), (1, 1))).inverse_unit_upper()
