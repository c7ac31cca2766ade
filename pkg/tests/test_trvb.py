"""Tests for vertex breaking and the brute-force tree-residue solver."""

import itertools
import random
from collections import defaultdict

import pytest

from hamlat.graphs import MultiGraph, is_connected, is_tree, is_isomorphic_small
from hamlat.io import FormatError
from hamlat.trvb import (
    BRUTEFORCE_CAP,
    BreakSet,
    TrvbInstance,
    break_vertex,
    format_trvb,
    parse_trvb,
    residue,
    residue_is_tree,
    solve_trvb_bruteforce,
)


def _triangle() -> MultiGraph:
    g = MultiGraph(3)
    g.add_edge(0, 1)
    g.add_edge(0, 2)
    g.add_edge(1, 2)
    return g


def _path(n: int) -> MultiGraph:
    g = MultiGraph(n)
    for v in range(n - 1):
        g.add_edge(v, v + 1)
    return g


def _bowtie() -> MultiGraph:
    g = MultiGraph(5)
    for u, v in [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]:
        g.add_edge(u, v)
    return g


def _random_connected_multigraph(rng: random.Random, n: int, extra: int) -> MultiGraph:
    g = MultiGraph(n)
    for v in range(1, n):
        g.add_edge(rng.randrange(v), v)
    for _ in range(extra):
        u, v = rng.randrange(n), rng.randrange(n)
        g.add_edge(min(u, v), max(u, v))
    return g


# --- break_vertex -----------------------------------------------------------


def test_break_triangle_vertex_gives_path_on_four():
    h = break_vertex(_triangle(), 0)
    assert h.n == 4
    assert h.m == 3
    assert is_tree(h)
    assert sorted(h.degree(v) for v in range(h.n)) == [1, 1, 2, 2]


def test_break_leaf_keeps_graph_shape():
    g = _path(3)
    h = break_vertex(g, 0)
    assert is_isomorphic_small(g, h) is not None


def test_break_vertex_with_two_loops_gives_two_disjoint_edges():
    g = MultiGraph(1)
    g.add_edge(0, 0)
    g.add_edge(0, 0)
    h = break_vertex(g, 0)
    assert h.n == 4
    assert h.m == 2
    assert not is_connected(h)
    assert sorted(h.degree(v) for v in range(h.n)) == [1, 1, 1, 1]


def test_break_isolated_vertex_removes_it():
    h = break_vertex(MultiGraph(1), 0)
    assert h.n == 0
    assert h.m == 0


def test_break_vertex_rejects_missing():
    with pytest.raises(ValueError):
        break_vertex(_triangle(), 3)
    with pytest.raises(ValueError):
        break_vertex(_triangle(), -1)


def test_break_invariants_random():
    rng = random.Random(1105)
    for _ in range(60):
        n = rng.randrange(1, 8)
        g = _random_connected_multigraph(rng, n, rng.randrange(0, 5))
        v = rng.randrange(n)
        h = break_vertex(g, v)
        assert h.m == g.m
        assert h.n == g.n - 1 + g.degree(v)


def test_residue_breaks_simultaneously():
    g = MultiGraph(2)
    g.add_edge(0, 1)
    h = residue(g, [0, 1])
    assert h.n == 2
    assert h.m == 1
    assert is_tree(h)


# --- instances and the solver ----------------------------------------------


def test_instance_requires_connected_graph():
    with pytest.raises(ValueError):
        TrvbInstance(graph=MultiGraph(2), breakable=frozenset())


def test_instance_requires_breakable_in_range():
    with pytest.raises(ValueError):
        TrvbInstance(graph=_triangle(), breakable=frozenset({3}))


def test_break_set_normalizes():
    assert BreakSet((2, 1, 1)).vertices == (1, 2)


def test_solve_triangle_one_breakable():
    inst = TrvbInstance(graph=_triangle(), breakable=frozenset({1}))
    assert solve_trvb_bruteforce(inst) == BreakSet((1,))


def test_solve_parallel_pair_without_breakable_is_no():
    g = MultiGraph(2)
    g.add_edge(0, 1)
    g.add_edge(0, 1)
    inst = TrvbInstance(graph=g, breakable=frozenset())
    assert solve_trvb_bruteforce(inst) is None


def test_solve_tree_returns_empty_break_set():
    inst = TrvbInstance(graph=_path(4), breakable=frozenset({1, 2}))
    assert solve_trvb_bruteforce(inst) == BreakSet(())


def test_solve_returns_lexicographically_least():
    # Pendant 0 on triangle 1-2-3: {0} fails, {0, 2} works and precedes {2}.
    g = MultiGraph(4)
    for u, v in [(0, 1), (1, 2), (1, 3), (2, 3)]:
        g.add_edge(u, v)
    inst = TrvbInstance(graph=g, breakable=frozenset({0, 2}))
    assert solve_trvb_bruteforce(inst) == BreakSet((0, 2))


def test_solve_rejects_forest_residues():
    # Breaking the bowtie centre disconnects it; leaving it keeps both cycles.
    inst = TrvbInstance(graph=_bowtie(), breakable=frozenset({2}))
    assert solve_trvb_bruteforce(inst) is None


def test_solve_cap():
    n = BRUTEFORCE_CAP + 1
    g = MultiGraph(n + 1)
    for v in range(n):
        g.add_edge(v, n)
    inst = TrvbInstance(graph=g, breakable=frozenset(range(n)))
    with pytest.raises(ValueError, match=str(BRUTEFORCE_CAP)):
        solve_trvb_bruteforce(inst)


def test_residue_is_tree_checks_subset():
    inst = TrvbInstance(graph=_triangle(), breakable=frozenset({1}))
    assert residue_is_tree(inst, BreakSet((1,)))
    assert not residue_is_tree(inst, BreakSet(()))
    with pytest.raises(ValueError):
        residue_is_tree(inst, BreakSet((0,)))


def test_reduction_regime():
    TrvbInstance(graph=_triangle(), breakable=frozenset({0})).check_reduction_regime()
    k5 = MultiGraph(5)
    for u, v in itertools.combinations(range(5), 2):
        k5.add_edge(u, v)
    with pytest.raises(ValueError, match="planar"):
        TrvbInstance(graph=k5, breakable=frozenset()).check_reduction_regime()
    star = MultiGraph(6)
    for v in range(5):
        star.add_edge(v, 5)
    with pytest.raises(ValueError, match="degree"):
        TrvbInstance(graph=star, breakable=frozenset({5})).check_reduction_regime()


# --- independent cross-check ------------------------------------------------


def _independent_residue_is_tree(g: MultiGraph, broken: set) -> bool:
    """Tree check on a node-labelled rebuild of the residue."""
    nodes = {("v", u) for u in range(g.n) if u not in broken}
    adj = defaultdict(list)
    edge_count = 0
    for idx, (u, v) in enumerate(g.edges()):
        a = ("leaf", idx, 0) if u in broken else ("v", u)
        b = ("leaf", idx, 1) if v in broken else ("v", v)
        nodes.add(a)
        nodes.add(b)
        adj[a].append(b)
        adj[b].append(a)
        edge_count += 1
    if not nodes or edge_count != len(nodes) - 1:
        return False
    seen = {min(nodes)}
    queue = [min(nodes)]
    while queue:
        x = queue.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == len(nodes)


def _independent_solve(g: MultiGraph, breakable: frozenset):
    wins = []
    for r in range(len(breakable) + 1):
        for combo in itertools.combinations(sorted(breakable), r):
            if _independent_residue_is_tree(g, set(combo)):
                wins.append(combo)
    return min(wins) if wins else None


def test_solve_matches_independent_enumeration():
    rng = random.Random(2210)
    yes = no = 0
    for _ in range(40):
        n = rng.randrange(1, 8)
        g = _random_connected_multigraph(rng, n, rng.randrange(0, 4))
        k = min(n, 10)
        breakable = frozenset(rng.sample(range(n), rng.randrange(0, k + 1)))
        inst = TrvbInstance(graph=g, breakable=breakable)
        got = solve_trvb_bruteforce(inst)
        want = _independent_solve(g, breakable)
        if want is None:
            assert got is None
            no += 1
        else:
            assert got is not None and got.vertices == want
            assert _independent_residue_is_tree(g, set(got.vertices))
            yes += 1
    assert yes >= 5 and no >= 5


# --- file format ------------------------------------------------------------


def test_trvb_format_text():
    inst = TrvbInstance(graph=_triangle(), breakable=frozenset({1}))
    assert format_trvb(inst) == (
        "trvb v1\n"
        "multigraph v1\n"
        "vertices 3\n"
        "edges 3\n"
        "0 1\n"
        "0 2\n"
        "1 2\n"
        "breakable 1\n"
        "end\n"
    )


def test_trvb_roundtrip():
    rng = random.Random(404)
    for _ in range(20):
        n = rng.randrange(1, 7)
        g = _random_connected_multigraph(rng, n, rng.randrange(0, 4))
        breakable = frozenset(rng.sample(range(n), rng.randrange(0, n + 1)))
        inst = TrvbInstance(graph=g, breakable=breakable)
        text = format_trvb(inst)
        back = parse_trvb(text)
        assert back.breakable == inst.breakable
        assert sorted(back.graph.edges()) == sorted(
            tuple(sorted(e)) for e in inst.graph.edges()
        )
        assert format_trvb(back) == text


def test_trvb_roundtrip_empty_breakable():
    inst = TrvbInstance(graph=_path(2), breakable=frozenset())
    text = format_trvb(inst)
    assert "\nbreakable\n" in text
    assert parse_trvb(text).breakable == frozenset()


@pytest.mark.parametrize(
    "text",
    [
        # missing breakable line
        "trvb v1\nmultigraph v1\nvertices 2\nedges 1\n0 1\nend\n",
        # unsorted list
        "trvb v1\nmultigraph v1\nvertices 3\nedges 3\n0 1\n0 2\n1 2\nbreakable 2 1\nend\n",
        # repeated vertex
        "trvb v1\nmultigraph v1\nvertices 3\nedges 3\n0 1\n0 2\n1 2\nbreakable 1 1\nend\n",
        # out-of-range vertex
        "trvb v1\nmultigraph v1\nvertices 2\nedges 1\n0 1\nbreakable 2\nend\n",
        # breakable line before the edges
        "trvb v1\nmultigraph v1\nvertices 2\nedges 1\nbreakable 0\n0 1\nend\n",
        # trailing content
        "trvb v1\nmultigraph v1\nvertices 2\nedges 1\n0 1\nbreakable 0\nend\nx\n",
        # disconnected graph
        "trvb v1\nmultigraph v1\nvertices 3\nedges 1\n0 1\nbreakable 0\nend\n",
        # wrong magic
        "trvb v2\nmultigraph v1\nvertices 2\nedges 1\n0 1\nbreakable 0\nend\n",
    ],
)
def test_trvb_parse_rejections(text):
    with pytest.raises(FormatError):
        parse_trvb(text)
