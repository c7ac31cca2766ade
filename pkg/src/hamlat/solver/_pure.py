"""Pure-Python exact search kernel for Hamiltonian cycles and path covers.

The kernel works on a simple graph given as an edge list.  Every edge is
UNDECIDED, IN, or OUT; unit propagation enforces per-vertex quotas (2 for
interior vertices, 1 for declared path endpoints), a union-find forbids
premature cycles, and a reachability check prunes states whose remaining
graph cannot cover everything.  Search order is fixed, so results are
deterministic.

`hamlat.solver._speedups` is a compiled twin of this module; both must keep
identical semantics and search order.
"""

from __future__ import annotations

UNDEC, IN, OUT = 0, 1, 2

# status codes returned by solve()
OK, EXHAUSTED, BUDGET = "ok", "exhausted", "budget"


def solve(
    n: int,
    edges: list[tuple[int, int]],
    quotas: list[int],
    cover_mode: bool,
    limit: int,
    node_budget: int | None,
):
    """Enumerate IN-edge sets meeting all quotas.

    cover_mode False: sets forming a single Hamiltonian cycle (all quotas 2).
    cover_mode True: sets forming vertex-disjoint paths that cover every
    vertex and whose endpoints are exactly the quota-1 vertices.

    Returns (status, solutions, nodes): solutions are frozensets of edge ids;
    status is "exhausted" (space fully explored), "ok" (stopped at limit), or
    "budget" (node budget exhausted).
    """
    m = len(edges)
    if n == 0:
        return EXHAUSTED, [], 0

    inc: list[list[int]] = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(edges):
        inc[u].append(eid)
        inc[v].append(eid)

    estate = [UNDEC] * m
    in_cnt = [0] * n
    un_cnt = [len(inc[v]) for v in range(n)]

    for v in range(n):
        if un_cnt[v] < quotas[v]:
            return EXHAUSTED, [], 0

    parent = list(range(n))
    size = [1] * n
    total_in = 0
    undecided = m
    needed_in = sum(quotas) // 2
    is_port = [quotas[v] == 1 for v in range(n)]

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    # trail entries: ("e", eid) for an edge assignment, ("u", child, root)
    # for a union; both undone in reverse order
    trail: list[tuple] = []

    def set_edge(eid: int, st: int) -> bool:
        """Assign an UNDEC edge; False on immediate contradiction."""
        nonlocal total_in, undecided
        estate[eid] = st
        undecided -= 1
        trail.append(("e", eid))
        u, v = edges[eid]
        un_cnt[u] -= 1
        un_cnt[v] -= 1
        if st == IN:
            in_cnt[u] += 1
            in_cnt[v] += 1
            total_in += 1
            if in_cnt[u] > quotas[u] or in_cnt[v] > quotas[v]:
                return False
            ru, rv = find(u), find(v)
            if ru == rv:
                # closing a cycle: only as the final Hamiltonian closure
                if cover_mode or total_in != needed_in:
                    return False
            else:
                if size[ru] < size[rv]:
                    ru, rv = rv, ru
                parent[rv] = ru
                size[ru] += size[rv]
                trail.append(("u", rv, ru))
        if in_cnt[u] + un_cnt[u] < quotas[u]:
            return False
        if in_cnt[v] + un_cnt[v] < quotas[v]:
            return False
        return True

    def undo_to(mark: int) -> None:
        nonlocal total_in, undecided
        while len(trail) > mark:
            entry = trail.pop()
            if entry[0] == "e":
                eid = entry[1]
                st = estate[eid]
                estate[eid] = UNDEC
                undecided += 1
                u, v = edges[eid]
                un_cnt[u] += 1
                un_cnt[v] += 1
                if st == IN:
                    in_cnt[u] -= 1
                    in_cnt[v] -= 1
                    total_in -= 1
            else:
                _, child, root = entry
                parent[child] = child
                size[root] -= size[child]

    def propagate(seed: list[int]) -> bool:
        """Quota-driven unit propagation to fixpoint; False on contradiction."""
        queue = list(seed)
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            iv, uv, qv = in_cnt[v], un_cnt[v], quotas[v]
            if iv > qv or iv + uv < qv:
                return False
            if uv == 0:
                if iv != qv:
                    return False
                continue
            if iv == qv:
                for eid in inc[v]:
                    if estate[eid] == UNDEC:
                        if not set_edge(eid, OUT):
                            return False
                        a, b = edges[eid]
                        queue.append(a)
                        queue.append(b)
            elif iv + uv == qv:
                for eid in inc[v]:
                    if estate[eid] == UNDEC:
                        if not set_edge(eid, IN):
                            return False
                        a, b = edges[eid]
                        queue.append(a)
                        queue.append(b)
        return True

    def reachability_ok() -> bool:
        """Components of the IN+UNDEC graph must still be completable."""
        seen = [False] * n
        for s in range(n):
            if seen[s]:
                continue
            seen[s] = True
            stack = [s]
            comp_size = 1
            comp_ports = 1 if is_port[s] else 0
            while stack:
                x = stack.pop()
                for eid in inc[x]:
                    if estate[eid] == OUT:
                        continue
                    a, b = edges[eid]
                    y = b if a == x else a
                    if not seen[y]:
                        seen[y] = True
                        comp_size += 1
                        if is_port[y]:
                            comp_ports += 1
                        stack.append(y)
            if not cover_mode:
                return comp_size == n
            if comp_ports == 0 or comp_ports % 2 == 1:
                return False
        return True

    def pick_branch_edge() -> int:
        """Undecided edge at the most constrained open vertex (deterministic)."""
        best_v = -1
        best_key = None
        for v in range(n):
            if un_cnt[v] > 0 and in_cnt[v] < quotas[v]:
                key = (un_cnt[v], v)
                if best_key is None or key < best_key:
                    best_key = key
                    best_v = v
        if best_v < 0:
            return -1
        for eid in inc[best_v]:
            if estate[eid] == UNDEC:
                return eid
        return -1

    solutions: list[frozenset[int]] = []
    nodes = 0

    if not (propagate(list(range(n))) and reachability_ok()):
        undo_to(0)
        return EXHAUSTED, [], 0

    if undecided == 0:
        # propagation alone decided everything; fixpoint implies quotas met
        solutions.append(frozenset(e for e in range(m) if estate[e] == IN))
        undo_to(0)
        return EXHAUSTED, solutions, 0

    # iterative DFS; each frame is [trail_mark, branch_eid, phase]
    stack: list[list[int]] = [[len(trail), pick_branch_edge(), 0]]

    while stack:
        frame = stack[-1]
        mark, eid, phase = frame
        undo_to(mark)
        if phase == 2 or eid < 0:
            stack.pop()
            continue
        frame[2] += 1
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            undo_to(0)
            return BUDGET, solutions, nodes
        st = IN if phase == 0 else OUT
        u, v = edges[eid]
        if not (set_edge(eid, st) and propagate([u, v]) and reachability_ok()):
            continue
        if undecided == 0:
            solutions.append(frozenset(e for e in range(m) if estate[e] == IN))
            if len(solutions) >= limit:
                undo_to(0)
                return OK, solutions, nodes
            continue
        nxt = pick_branch_edge()
        stack.append([len(trail), nxt, 0])

    undo_to(0)
    return EXHAUSTED, solutions, nodes
