"""Brute-force reference oracles, used only to cross-check the real solver
on small inputs (permutations over <= 10 vertices, edge subsets for covers)."""

from __future__ import annotations

from itertools import permutations

from ..graphs import MultiGraph

_CAP = 10


def naive_has_hamiltonian_cycle(g: MultiGraph) -> bool:
    n = g.n
    if n > _CAP:
        raise ValueError(f"naive oracle capped at {_CAP} vertices")
    if n < 3:
        return False
    adj = g.simple_adjacency()
    rest = list(range(1, n))
    for perm in permutations(rest):
        seq = (0,) + perm
        if all(seq[i + 1] in adj[seq[i]] for i in range(n - 1)) and seq[0] in adj[seq[-1]]:
            return True
    return False


def naive_hamiltonian_paths(g: MultiGraph, start: int, end: int) -> list[tuple[int, ...]]:
    """All Hamiltonian start-to-end paths, sorted."""
    n = g.n
    if n > _CAP:
        raise ValueError(f"naive oracle capped at {_CAP} vertices")
    if start == end:
        raise ValueError("start and end must differ")
    adj = g.simple_adjacency()
    middle = [v for v in range(n) if v not in (start, end)]
    out = []
    for perm in permutations(middle):
        seq = (start,) + perm + (end,)
        if all(seq[i + 1] in adj[seq[i]] for i in range(n - 1)):
            out.append(seq)
    return sorted(out)


def naive_cover_patterns(g: MultiGraph, ports: list[int]) -> set[frozenset[frozenset[int]]]:
    """Achievable port-pairing patterns by edge-subset brute force (m <= 22)."""
    n, m = g.n, g.m
    edges = []
    seen = set()
    for u, v in g.edges():
        if u != v:
            key = (min(u, v), max(u, v))
            if key not in seen:
                seen.add(key)
                edges.append(key)
    if len(edges) > 22:
        raise ValueError("naive cover oracle capped at 22 distinct edges")
    port_set = set(ports)
    patterns: set[frozenset[frozenset[int]]] = set()
    for mask in range(1 << len(edges)):
        deg = [0] * n
        chosen = []
        ok = True
        for i, (u, v) in enumerate(edges):
            if mask >> i & 1:
                chosen.append((u, v))
                deg[u] += 1
                deg[v] += 1
                if deg[u] > 2 or deg[v] > 2:
                    ok = False
                    break
        if not ok:
            continue
        for v in range(n):
            want = 1 if v in port_set else 2
            if deg[v] != want:
                ok = False
                break
        if not ok:
            continue
        # endpoints correct by degree; reject any cycles via component scan
        adj: dict[int, list[int]] = {v: [] for v in range(n)}
        for u, v in chosen:
            adj[u].append(v)
            adj[v].append(u)
        seen_v = set()
        pattern = set()
        ok = True
        for p in sorted(port_set):
            if p in seen_v:
                continue
            cur, prev = p, -1
            seen_v.add(p)
            while True:
                nxt = [w for w in adj[cur] if w != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                seen_v.add(cur)
            pattern.add(frozenset((p, cur)))
        if len(seen_v) != n:
            ok = False  # leftover vertices form cycles
        if ok:
            patterns.add(frozenset(pattern))
    return patterns
