"""Exact Hamiltonicity oracle: decision, certificates, bounded enumeration,
and path-cover enumeration (the workhorse behind gadget verification).

The search kernel has two interchangeable implementations: a compiled
extension (`_speedups`, built from Cython) and a pure-Python twin (`_pure`).
The compiled one is preferred at import time; set HAMLAT_PURE=1 to force the
fallback.  Both implement the same algorithm with the same search order.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from ..graphs import MultiGraph

from . import _pure

if os.environ.get("HAMLAT_PURE") == "1":
    _kernel = _pure
else:
    try:
        from . import _speedups as _kernel  # type: ignore[attr-defined]
    except ImportError:
        _kernel = _pure

KERNEL_NAME = _kernel.__name__.rsplit(".", 1)[-1]


class BudgetExceeded(RuntimeError):
    """Raised when the solver's node budget runs out before an answer."""

    def __init__(self, nodes: int):
        super().__init__(f"search node budget exceeded after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class HamCertificate:
    """An ordered vertex sequence; kind is "cycle" or "path"."""

    kind: str
    sequence: tuple[int, ...]

    @property
    def start(self) -> int:
        return self.sequence[0]

    @property
    def end(self) -> int:
        return self.sequence[-1]


def _simple_edges(g: MultiGraph) -> list[tuple[int, int]]:
    """Deduplicated loop-free edge list (only adjacency matters here)."""
    seen = set()
    out = []
    for u, v in g.edges():
        if u == v:
            continue
        key = (u, v) if u < v else (v, u)
        if key not in seen:
            seen.add(key)
            out.append(key)
    return out


_NO_LIMIT = 1 << 62


def _run_kernel(n, edges, quotas, cover_mode, limit, node_budget):
    status, solutions, nodes = _kernel.solve(
        n,
        edges,
        quotas,
        cover_mode,
        _NO_LIMIT if limit is None else limit,
        _NO_LIMIT if node_budget is None else node_budget,
    )
    if status == _pure.BUDGET:
        raise BudgetExceeded(nodes)
    exhausted = status == _pure.EXHAUSTED
    return solutions, exhausted


def _cycle_sequence(n: int, edges, chosen: frozenset[int]) -> tuple[int, ...]:
    """Canonical cycle order: start at vertex 0, toward its smaller neighbor."""
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for eid in chosen:
        u, v = edges[eid]
        adj[u].append(v)
        adj[v].append(u)
    seq = [0]
    prev = -1
    cur = 0
    nxt = min(adj[0])
    while nxt != 0:
        seq.append(nxt)
        prev, cur = cur, nxt
        a, b = adj[cur]
        nxt = b if a == prev else a
    return tuple(seq)


def _cover_paths(n: int, edges, chosen: frozenset[int], ports) -> tuple[tuple[int, ...], ...]:
    """Chosen edges as vertex-disjoint paths, each oriented from its smaller
    endpoint, sorted."""
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for eid in chosen:
        u, v = edges[eid]
        adj[u].append(v)
        adj[v].append(u)
    paths = []
    visited = set()
    for p in sorted(ports):
        if p in visited:
            continue
        seq = [p]
        visited.add(p)
        prev = -1
        cur = p
        while True:
            nbrs = [w for w in adj[cur] if w != prev]
            if not nbrs:
                break
            nxt = nbrs[0]
            seq.append(nxt)
            visited.add(nxt)
            prev, cur = cur, nxt
        paths.append(tuple(seq))
    return tuple(sorted(paths))


def find_hamiltonian_cycle(
    g: MultiGraph, node_budget: Optional[int] = None
) -> Optional[HamCertificate]:
    """A Hamiltonian cycle certificate, or None (a definitive no).

    Fewer than 3 vertices never has a Hamiltonian cycle.
    """
    n = g.n
    if n < 3:
        return None
    edges = _simple_edges(g)
    solutions, _ = _run_kernel(n, edges, [2] * n, False, 1, node_budget)
    if not solutions:
        return None
    return HamCertificate("cycle", _cycle_sequence(n, edges, solutions[0]))


def enumerate_hamiltonian_cycles(
    g: MultiGraph, limit: Optional[int] = None, node_budget: Optional[int] = None
) -> tuple[list[HamCertificate], bool]:
    """Up to `limit` distinct Hamiltonian cycles, sorted; plus an
    exhaustiveness flag."""
    if limit is not None and limit < 1:
        raise ValueError("limit must be >= 1")
    n = g.n
    if n < 3:
        return [], True
    edges = _simple_edges(g)
    solutions, exhausted = _run_kernel(n, edges, [2] * n, False, limit, node_budget)
    certs = sorted(
        (HamCertificate("cycle", _cycle_sequence(n, edges, sol)) for sol in solutions),
        key=lambda c: c.sequence,
    )
    return certs, exhausted


def enumerate_hamiltonian_paths(
    g: MultiGraph,
    start: int,
    end: int,
    limit: Optional[int] = None,
    node_budget: Optional[int] = None,
) -> tuple[list[HamCertificate], bool]:
    """Up to `limit` distinct Hamiltonian start-to-end paths, sorted by
    vertex sequence; exhaustive flag is True when the search completed."""
    if start == end:
        raise ValueError("start and end must differ")
    if limit is not None and limit < 1:
        raise ValueError("limit must be >= 1")
    n = g.n
    for v in (start, end):
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} not in graph")
    edges = _simple_edges(g)
    quotas = [2] * n
    quotas[start] = 1
    quotas[end] = 1
    solutions, exhausted = _run_kernel(n, edges, quotas, True, limit, node_budget)
    certs = []
    for sol in solutions:
        (path,) = _cover_paths(n, edges, sol, [start, end])
        if path[0] != start:
            path = tuple(reversed(path))
        certs.append(HamCertificate("path", path))
    return sorted(certs, key=lambda c: c.sequence), exhausted


def verify_certificate(g: MultiGraph, cert: HamCertificate) -> bool:
    """True iff the certificate is a genuine Hamiltonian cycle/path of g."""
    seq = cert.sequence
    n = g.n
    if len(seq) != n or len(set(seq)) != n:
        return False
    if any(not 0 <= v < n for v in seq):
        return False
    adj = g.simple_adjacency()
    for a, b in zip(seq, seq[1:]):
        if b not in adj[a]:
            return False
    if cert.kind == "cycle":
        return n >= 3 and seq[0] in adj[seq[-1]]
    if cert.kind == "path":
        return True
    return False


def enumerate_path_covers(
    g: MultiGraph,
    ports: list[int],
    limit: Optional[int] = None,
    node_budget: Optional[int] = None,
) -> tuple[list[tuple[tuple[int, ...], ...]], bool]:
    """Covers of g by vertex-disjoint paths whose endpoints are exactly
    `ports` (each port ends exactly one path).

    Returns (covers, exhausted); each cover is a sorted tuple of paths, each
    path oriented from its smaller endpoint.
    """
    if limit is not None and limit < 1:
        raise ValueError("limit must be >= 1")
    if len(ports) % 2 == 1 or len(set(ports)) != len(ports):
        raise ValueError("ports must be distinct and even in number")
    n = g.n
    for p in ports:
        if not 0 <= p < n:
            raise ValueError(f"port {p} not in graph")
    if n == 0:
        return ([()], True) if not ports else ([], True)
    if not ports:
        return [], True  # paths need endpoints; nonempty graph uncoverable
    edges = _simple_edges(g)
    quotas = [2] * n
    for p in ports:
        quotas[p] = 1
    solutions, exhausted = _run_kernel(n, edges, quotas, True, limit, node_budget)
    covers = sorted(_cover_paths(n, edges, sol, ports) for sol in solutions)
    return covers, exhausted


def cover_pattern(cover: tuple[tuple[int, ...], ...]) -> frozenset[frozenset[int]]:
    """The port-pairing pattern of a path cover: which ports share a path."""
    return frozenset(frozenset((p[0], p[-1])) for p in cover)


from .frontier import (  # noqa: E402  (frontier imports back lazily)
    frontier_cover_patterns,
    frontier_has_hamiltonian_cycle,
    solve_frontier,
)

__all__ = [
    "BudgetExceeded",
    "HamCertificate",
    "KERNEL_NAME",
    "cover_pattern",
    "enumerate_hamiltonian_cycles",
    "enumerate_hamiltonian_paths",
    "enumerate_path_covers",
    "find_hamiltonian_cycle",
    "frontier_cover_patterns",
    "frontier_has_hamiltonian_cycle",
    "solve_frontier",
    "verify_certificate",
]
