"""Tests for the Hamiltonicity solver: backtracking kernel, frontier DP,
certificates, and path covers, cross-checked against brute force."""

import random

import pytest

from hamlat.graphs import MultiGraph, from_edges
from hamlat.solver import (
    BudgetExceeded,
    HamCertificate,
    cover_pattern,
    enumerate_hamiltonian_cycles,
    enumerate_hamiltonian_paths,
    enumerate_path_covers,
    find_hamiltonian_cycle,
    frontier_cover_patterns,
    frontier_has_hamiltonian_cycle,
    verify_certificate,
)
from hamlat.solver.naive import (
    naive_cover_patterns,
    naive_has_hamiltonian_cycle,
    naive_hamiltonian_paths,
)


def _cycle(n: int) -> MultiGraph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _complete(n: int) -> MultiGraph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _grid(rows: int, cols: int) -> MultiGraph:
    g = MultiGraph(rows * cols)
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                g.add_edge(v, v + 1)
            if r + 1 < rows:
                g.add_edge(v, v + cols)
    return g


def _petersen() -> MultiGraph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return from_edges(10, edges)


def _random_graph(rng: random.Random, n: int, extra: int) -> MultiGraph:
    edges = [(i, rng.randrange(i)) for i in range(1, n)]
    for _ in range(extra):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.append((u, v))
    return from_edges(n, edges)


# -- cycle finding ------------------------------------------------------------


def test_cycle_on_c4():
    cert = find_hamiltonian_cycle(_cycle(4))
    assert cert == HamCertificate("cycle", (0, 1, 2, 3))
    assert verify_certificate(_cycle(4), cert)


def test_cycle_counts_frozen():
    assert len(enumerate_hamiltonian_cycles(_cycle(4))[0]) == 1
    assert len(enumerate_hamiltonian_cycles(_complete(4))[0]) == 3
    assert len(enumerate_hamiltonian_cycles(_complete(5))[0]) == 12
    assert len(enumerate_hamiltonian_cycles(_grid(2, 3))[0]) == 1


def test_no_cycle_cases():
    assert find_hamiltonian_cycle(_grid(3, 3)) is None  # odd bipartite grid
    assert find_hamiltonian_cycle(_petersen()) is None
    assert find_hamiltonian_cycle(from_edges(3, [(0, 1), (1, 2)])) is None
    assert find_hamiltonian_cycle(MultiGraph(0)) is None
    assert find_hamiltonian_cycle(_complete(2)) is None


def test_cycle_ignores_loops_and_parallels():
    g = _cycle(4)
    g.add_edge(0, 0)
    g.add_edge(1, 2)
    cert = find_hamiltonian_cycle(g)
    assert cert == HamCertificate("cycle", (0, 1, 2, 3))


def test_cycle_canonical_start():
    certs, exhausted = enumerate_hamiltonian_cycles(_complete(4))
    assert exhausted
    assert [c.sequence for c in certs] == [
        (0, 1, 2, 3),
        (0, 1, 3, 2),
        (0, 2, 1, 3),
    ]


def test_enumerate_limit():
    certs, exhausted = enumerate_hamiltonian_cycles(_complete(5), limit=4)
    assert len(certs) == 4 and not exhausted
    with pytest.raises(ValueError):
        enumerate_hamiltonian_cycles(_complete(4), limit=0)


def test_node_budget():
    g = _grid(4, 5)
    with pytest.raises(BudgetExceeded) as info:
        enumerate_hamiltonian_cycles(g, node_budget=3)
    assert info.value.nodes > 0
    # a generous budget completes
    certs, exhausted = enumerate_hamiltonian_cycles(g, node_budget=10**7)
    assert exhausted and len(certs) > 0


# -- path finding -------------------------------------------------------------


def test_path_counts_frozen():
    paths, exhausted = enumerate_hamiltonian_paths(_complete(4), 0, 1)
    assert exhausted
    assert [p.sequence for p in paths] == [(0, 2, 3, 1), (0, 3, 2, 1)]
    assert [p.sequence for p in enumerate_hamiltonian_paths(_cycle(4), 0, 1)[0]] == [
        (0, 3, 2, 1)
    ]
    assert enumerate_hamiltonian_paths(_cycle(4), 0, 2)[0] == []
    assert [
        p.sequence
        for p in enumerate_hamiltonian_paths(from_edges(3, [(0, 1), (1, 2)]), 0, 2)[0]
    ] == [(0, 1, 2)]


def test_petersen_is_traceable():
    paths, exhausted = enumerate_hamiltonian_paths(_petersen(), 0, 7, limit=1)
    assert paths and verify_certificate(_petersen(), paths[0])


def test_path_argument_validation():
    with pytest.raises(ValueError):
        enumerate_hamiltonian_paths(_cycle(4), 2, 2)
    with pytest.raises(ValueError):
        enumerate_hamiltonian_paths(_cycle(4), 0, 9)


def test_paths_agree_with_naive_random():
    rng = random.Random(41)
    for _ in range(120):
        n = rng.randint(2, 7)
        g = _random_graph(rng, n, rng.randint(0, n))
        start, end = rng.sample(range(n), 2) if n >= 2 else (0, 0)
        got, exhausted = enumerate_hamiltonian_paths(g, start, end)
        assert exhausted
        assert [p.sequence for p in got] == naive_hamiltonian_paths(g, start, end)


# -- certificates -------------------------------------------------------------


def test_verify_certificate_rejects_bad():
    g = _cycle(4)
    good = HamCertificate("cycle", (0, 1, 2, 3))
    assert verify_certificate(g, good)
    assert not verify_certificate(g, HamCertificate("cycle", (0, 1, 2)))
    assert not verify_certificate(g, HamCertificate("cycle", (0, 1, 3, 2)))
    assert not verify_certificate(g, HamCertificate("cycle", (0, 1, 2, 2)))
    assert verify_certificate(g, HamCertificate("path", (0, 1, 2, 3)))
    assert not verify_certificate(g, HamCertificate("path", (0, 2, 1, 3)))  # 0-2 absent
    assert verify_certificate(from_edges(2, [(0, 1)]), HamCertificate("path", (0, 1)))
    assert not verify_certificate(
        from_edges(2, [(0, 1)]), HamCertificate("cycle", (0, 1))
    )


# -- path covers and patterns -------------------------------------------------


def test_path_cover_on_path_graph():
    g = from_edges(3, [(0, 1), (1, 2)])
    covers, exhausted = enumerate_path_covers(g, (0, 2))
    assert exhausted and covers == [((0, 1, 2),)]
    assert cover_pattern(covers[0]) == frozenset({frozenset({0, 2})})


def test_path_cover_two_paths():
    # 2x3 grid, ports at the four corners: two left-right paths or two verticals
    g = _grid(2, 3)
    ports = (0, 2, 3, 5)
    covers, exhausted = enumerate_path_covers(g, ports)
    assert exhausted
    patterns = {cover_pattern(c) for c in covers}
    assert patterns == {
        frozenset({frozenset({0, 2}), frozenset({3, 5})}),
        frozenset({frozenset({0, 3}), frozenset({2, 5})}),
    }


def test_path_cover_validation():
    g = _cycle(4)
    with pytest.raises(ValueError):
        enumerate_path_covers(g, (0, 1, 2))
    with pytest.raises(ValueError):
        enumerate_path_covers(g, (0, 0))
    assert enumerate_path_covers(g, ()) == ([], True)
    assert enumerate_path_covers(MultiGraph(0), ()) == ([()], True)


def test_cover_patterns_agree_with_naive_random():
    rng = random.Random(1337)
    for _ in range(150):
        n = rng.randint(3, 7)
        g = _random_graph(rng, n, rng.randint(0, n))
        k = 4 if n >= 4 and rng.random() < 0.4 else 2
        ports = tuple(rng.sample(range(n), k))
        covers, exhausted = enumerate_path_covers(g, ports)
        assert exhausted
        assert {cover_pattern(c) for c in covers} == naive_cover_patterns(g, ports)


# -- frontier DP --------------------------------------------------------------


def _grid_coords(rows: int, cols: int):
    coords = [(c, r) for c in range(cols) for r in range(rows)]
    idx = {p: k for k, p in enumerate(coords)}
    edges = [
        (idx[(x, y)], idx[(x + dx, y + dy)])
        for (x, y) in coords
        for dx, dy in ((1, 0), (0, 1))
        if (x + dx, y + dy) in idx
    ]
    return coords, edges


def test_frontier_cycle_decision():
    coords, edges = _grid_coords(2, 4)
    assert frontier_has_hamiltonian_cycle(coords, edges)
    coords, edges = _grid_coords(3, 3)
    assert not frontier_has_hamiltonian_cycle(coords, edges)
    coords, edges = _grid_coords(4, 6)
    assert frontier_has_hamiltonian_cycle(coords, edges)
    assert not frontier_has_hamiltonian_cycle([(0, 0), (1, 0)], [(0, 1)])


def test_frontier_cover_patterns_match_naive():
    coords, edges = _grid_coords(2, 3)
    idx = {p: k for k, p in enumerate(coords)}
    ports = [idx[(0, 0)], idx[(0, 1)], idx[(2, 0)], idx[(2, 1)]]
    got = frontier_cover_patterns(coords, edges, ports)
    g = MultiGraph(len(coords))
    for u, v in edges:
        g.add_edge(u, v)
    assert got == naive_cover_patterns(g, ports)


def test_frontier_randomized_three_way():
    rng = random.Random(777)
    for _ in range(150):
        n = rng.randint(3, 8)
        coords = rng.sample([(x, y) for x in range(4) for y in range(4)], n)
        pool = [(a, b) for a in range(n) for b in range(a + 1, n)]
        edges = rng.sample(pool, rng.randint(n - 1, min(len(pool), 2 * n)))
        g = from_edges(n, edges)
        bt = find_hamiltonian_cycle(g) is not None
        assert frontier_has_hamiltonian_cycle(coords, edges) == bt
        assert naive_has_hamiltonian_cycle(g) == bt


def test_frontier_handles_long_strips():
    # far beyond brute force: a 2 x 60 strip has a unique Hamiltonian cycle
    coords, edges = _grid_coords(2, 60)
    assert frontier_has_hamiltonian_cycle(coords, edges)
    coords, edges = _grid_coords(3, 41)  # odd vertex-count bipartite strip
    assert not frontier_has_hamiltonian_cycle(coords, edges)


# -- determinism --------------------------------------------------------------


def test_enumeration_is_deterministic():
    a = enumerate_hamiltonian_cycles(_complete(5))
    b = enumerate_hamiltonian_cycles(_complete(5))
    assert a == b
    ca = enumerate_path_covers(_grid(2, 3), (0, 2, 3, 5))
    cb = enumerate_path_covers(_grid(2, 3), (0, 2, 3, 5))
    assert ca == cb
