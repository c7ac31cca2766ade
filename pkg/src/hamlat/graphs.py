"""Finite multigraph container and the small graph algorithms shared package-wide.

Vertices are dense integers 0..n-1.  Edges are stored by id and may be
parallel or self-loops (needed for vertex-breaking inputs); algorithms that
only care about adjacency work on the simplified view.
"""

from __future__ import annotations

from typing import Iterable, Optional


class MultiGraph:
    """Undirected multigraph on dense integer vertex ids."""

    def __init__(self, n: int = 0):
        self._inc: list[list[int]] = [[] for _ in range(n)]
        self._edges: list[tuple[int, int]] = []

    @property
    def n(self) -> int:
        return len(self._inc)

    @property
    def m(self) -> int:
        return len(self._edges)

    def add_vertex(self) -> int:
        self._inc.append([])
        return len(self._inc) - 1

    def add_vertices(self, k: int) -> list[int]:
        """Add k isolated vertices; returns their ids."""
        first = len(self._inc)
        for _ in range(k):
            self._inc.append([])
        return list(range(first, first + k))

    def add_edge(self, u: int, v: int) -> int:
        """Add an edge (parallel edges and self-loops allowed); returns its id."""
        self._check_vertex(u)
        self._check_vertex(v)
        eid = len(self._edges)
        self._edges.append((u, v))
        self._inc[u].append(eid)
        if v != u:
            self._inc[v].append(eid)
        return eid

    def edge_endpoints(self, eid: int) -> tuple[int, int]:
        return self._edges[eid]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) tuples in insertion order (self-loops included)."""
        return list(self._edges)

    def degree(self, v: int) -> int:
        """Vertex degree; a self-loop contributes 2."""
        self._check_vertex(v)
        d = 0
        for eid in self._inc[v]:
            a, b = self._edges[eid]
            d += 2 if a == b else 1
        return d

    def incident_edges(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(self._inc[v])

    def neighbors(self, v: int) -> list[int]:
        """Sorted distinct neighbors (excluding v itself unless self-loop)."""
        self._check_vertex(v)
        out = set()
        for eid in self._inc[v]:
            a, b = self._edges[eid]
            out.add(b if a == v else a)
        return sorted(out)

    def has_edge(self, u: int, v: int) -> bool:
        return v in set(self.neighbors(u))

    def edges_between(self, u: int, v: int) -> list[int]:
        return [eid for eid in self._inc[u]
                if self._edges[eid] in ((u, v), (v, u))]

    def copy(self) -> "MultiGraph":
        g = MultiGraph(self.n)
        for u, v in self._edges:
            g.add_edge(u, v)
        return g

    def simple_adjacency(self) -> list[set[int]]:
        """Adjacency sets with parallels collapsed and self-loops dropped."""
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self._edges:
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        return adj

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < len(self._inc):
            raise ValueError(f"vertex {v} not in graph (n={len(self._inc)})")

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"MultiGraph(n={self.n}, m={self.m})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> MultiGraph:
    g = MultiGraph(n)
    for u, v in edges:
        g.add_edge(u, v)
    return g


def is_connected(g: MultiGraph) -> bool:
    """True for the empty graph and any graph with one component."""
    if g.n == 0:
        return True
    adj = g.simple_adjacency()
    seen = [False] * g.n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n


def is_tree(g: MultiGraph) -> bool:
    """Connected with m == n - 1; parallel edges and self-loops count."""
    return g.n > 0 and g.m == g.n - 1 and is_connected(g)


def max_degree(g: MultiGraph) -> int:
    if g.n == 0:
        return 0
    return max(g.degree(v) for v in range(g.n))


def articulation_vertices(g: MultiGraph) -> list[int]:
    """Sorted cut vertices of a connected graph (iterative lowpoint computation)."""
    if g.n == 0 or not is_connected(g):
        raise ValueError("articulation_vertices requires a connected, non-empty graph")
    adj = [sorted(s) for s in g.simple_adjacency()]
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    out: set[int] = set()
    timer = 0
    root = 0
    root_children = 0
    # stack holds (vertex, iterator index into adj[vertex])
    stack: list[list[int]] = [[root, 0]]
    disc[root] = low[root] = timer
    timer += 1
    while stack:
        frame = stack[-1]
        u, i = frame
        if i < len(adj[u]):
            frame[1] += 1
            w = adj[u][i]
            if disc[w] == -1:
                parent[w] = u
                if u == root:
                    root_children += 1
                disc[w] = low[w] = timer
                timer += 1
                stack.append([w, 0])
            elif w != parent[u]:
                low[u] = min(low[u], disc[w])
        else:
            stack.pop()
            p = parent[u]
            if p != -1:
                low[p] = min(low[p], low[u])
                if p != root and low[u] >= disc[p]:
                    out.add(p)
    if root_children >= 2:
        out.add(root)
    return sorted(out)


def planarity_check(g: MultiGraph) -> bool:
    """Planarity of the underlying simple graph (loops/parallels never matter)."""
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    for u, v in g.edges():
        if u != v:
            h.add_edge(u, v)
    ok, _ = nx.check_planarity(h)
    return ok


_ISO_CAP = 64


def is_isomorphic_small(g1: MultiGraph, g2: MultiGraph) -> Optional[dict[int, int]]:
    """A vertex bijection g1 -> g2 preserving adjacency+multiplicity, or None.

    Capped at 64 vertices; intended for validating small embeddings.
    """
    if g1.n > _ISO_CAP or g2.n > _ISO_CAP:
        raise ValueError(f"is_isomorphic_small is capped at {_ISO_CAP} vertices")
    if g1.n != g2.n or g1.m != g2.m:
        return None
    n = g1.n
    if n == 0:
        return {}

    def multi_counts(g: MultiGraph) -> dict[tuple[int, int], int]:
        counts: dict[tuple[int, int], int] = {}
        for u, v in g.edges():
            key = (u, v) if u <= v else (v, u)
            counts[key] = counts.get(key, 0) + 1
        return counts

    c1, c2 = multi_counts(g1), multi_counts(g2)

    def refine(g: MultiGraph, counts) -> list[tuple]:
        # iterated neighborhood-multiset coloring
        color = [g.degree(v) for v in range(g.n)]
        loops = [counts.get((v, v), 0) for v in range(g.n)]
        color = [(c, l) for c, l in zip(color, loops)]
        adj = g.simple_adjacency()
        for _ in range(g.n):
            nxt = [
                (color[v], tuple(sorted(color[w] for w in adj[v])))
                for v in range(g.n)
            ]
            ranks = {c: i for i, c in enumerate(sorted(set(nxt)))}
            new = [ranks[c] for c in nxt]
            if len(set(new)) == len(set(color)):
                return new
            color = new
        return color

    col1, col2 = refine(g1, c1), refine(g2, c2)
    if sorted(col1) != sorted(col2):
        return None

    adj1 = g1.simple_adjacency()
    order = sorted(range(n), key=lambda v: (col1.count(col1[v]), col1[v], v))
    candidates = [
        [w for w in range(n) if col2[w] == col1[v]]
        for v in range(n)
    ]
    mapping: dict[int, int] = {}
    used = [False] * n

    def extend(idx: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for x in adj1[v]:
                if x in mapping:
                    a, b = (v, x) if v <= x else (x, v)
                    y = mapping[x]
                    c, d = (w, y) if w <= y else (y, w)
                    if c1.get((a, b), 0) != c2.get((c, d), 0):
                        ok = False
                        break
            if ok and c1.get((v, v), 0) != c2.get((w, w), 0):
                ok = False
            if ok:
                # mapped non-neighbors must stay non-neighbors
                for x, y in mapping.items():
                    if x not in adj1[v]:
                        a, b = (v, x) if v <= x else (x, v)
                        c, d = (w, y) if w <= y else (y, w)
                        if c1.get((a, b), 0) != c2.get((c, d), 0):
                            ok = False
                            break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(idx + 1):
                    return True
                del mapping[v]
                used[w] = False
        return False

    if extend(0):
        return dict(mapping)
    return None
