"""Frontier dynamic programming for Hamiltonicity and path-cover patterns.

Vertices are swept in lexicographic coordinate order; the DP state records,
for every vertex that still has unswept neighbors, whether it is untouched,
finished, or the open end of a partial path (open ends are matched pairwise,
or tagged with the port where their path's other end already stopped).  This
handles long thin graphs (strips, gadget rings) whose exhaustive path-cover
structure is far beyond plain backtracking.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

# per-vertex records inside a state
_UNTOUCHED = "U"
_DONE = "D"
_END = "E"  # carries ("m", slot) or ("p", port id)


def _run(
    n: int,
    order: list[int],
    adj: list[list[int]],
    quotas: list[int],
    cover_mode: bool,
):
    """Core sweep.  Returns (feasible, patterns)."""
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    leave_after = [0] * n
    for v in range(n):
        leave_after[v] = max([pos[v]] + [pos[u] for u in adj[v]])

    # state: (active_records, closed, pattern)
    #   active_records: tuple of (vertex, record) ordered by pos
    #   record: ("U",) | ("D",) | ("E", ("m", slot) | ("p", port))
    start_state = ((), False, frozenset())
    states = {start_state}

    def canonical(records: tuple, closed: bool, pattern: frozenset):
        slot_map: dict[int, int] = {}
        out = []
        for v, rec in records:
            if rec[0] == _END and rec[1][0] == "m":
                s = rec[1][1]
                if s not in slot_map:
                    slot_map[s] = len(slot_map)
                out.append((v, (_END, ("m", slot_map[s]))))
            else:
                out.append((v, rec))
        return (tuple(out), closed, pattern)

    fresh_slot = [0]

    def apply_edge(recs: dict, u: int, end_infos: list) -> bool:
        """Attach one edge from the in-flight vertex to active vertex u.

        Mutates recs and appends u's contribution to end_infos.  Returns
        False when u cannot take an edge.
        """
        rec = recs[u]
        if rec[0] == _DONE:
            return False
        if rec[0] == _UNTOUCHED:
            if quotas[u] == 1:
                recs[u] = (_DONE,)
                end_infos.append(("p", u))
            else:
                end_infos.append(("new", u))
                # record finalized later (slot known after pairing)
            return True
        # open end: consuming it finishes u
        link = rec[1]
        recs[u] = (_DONE,)
        end_infos.append(link)
        return True

    for step, v in enumerate(order):
        nbrs = sorted((u for u in adj[v] if pos[u] < step), key=lambda u: pos[u])
        new_states = set()
        for records, closed, pattern in states:
            recs = dict(records)
            choices: list[tuple[int, ...]] = [()]
            if not closed:
                q = quotas[v]
                avail = [u for u in nbrs if recs[u][0] != _DONE]
                if q >= 1:
                    choices += [(u,) for u in avail]
                if q >= 2:
                    choices += [
                        (a, b)
                        for i, a in enumerate(avail)
                        for b in avail[i + 1:]
                    ]
            for chosen in choices:
                recs2 = dict(recs)
                end_infos: list = []
                ok = True
                for u in chosen:
                    if not apply_edge(recs2, u, end_infos):
                        ok = False
                        break
                if not ok:
                    continue
                pattern2 = pattern
                closed2 = closed
                cap_v = quotas[v] - len(chosen)

                # resolve the path structure around v
                if len(chosen) == 0:
                    recs2[v] = (_UNTOUCHED,)
                elif len(chosen) == 1:
                    info = end_infos[0]
                    if cap_v == 0:
                        # only a port (quota 1) finishes on a single edge,
                        # and it becomes one endpoint of its path
                        if info[0] == "p":
                            pair = frozenset((info[1], v))
                            if not cover_mode:
                                continue
                            pattern2 = pattern2 | {pair}
                            recs2[v] = (_DONE,)
                        elif info[0] == "new":
                            u = info[1]
                            recs2[u] = (_END, ("p", v))
                            recs2[v] = (_DONE,)
                        else:  # ("m", slot): other end stays open, now tagged
                            recs2[v] = (_DONE,)
                            _retag(recs2, info, ("p", v))
                    else:
                        # v stays an open end of this path
                        if info[0] == "new":
                            u = info[1]
                            s = fresh_slot[0]
                            fresh_slot[0] += 1
                            recs2[u] = (_END, ("m", s))
                            recs2[v] = (_END, ("m", s))
                        elif info[0] == "p":
                            recs2[v] = (_END, ("p", info[1]))
                        else:
                            recs2[v] = (_END, info)
                else:  # two edges, v interior and done
                    a, b = end_infos
                    # same-path closure through v?
                    if a[0] == "m" and b[0] == "m" and a[1] == b[1]:
                        if cover_mode:
                            continue
                        closed2 = True
                        recs2[v] = (_DONE,)
                    else:
                        recs2[v] = (_DONE,)
                        joined = _join(recs2, a, b, cover_mode, fresh_slot)
                        if joined is None:
                            continue
                        extra_pair = joined
                        if extra_pair is not None and extra_pair != ():
                            pattern2 = pattern2 | {extra_pair}

                # bury everything whose frontier life ends at this step
                dead_ok = True
                pruned = []
                for x in list(recs2.keys()):
                    if leave_after[x] == step:
                        if recs2[x][0] != _DONE:
                            dead_ok = False
                            break
                        pruned.append(x)
                if not dead_ok:
                    continue
                for x in pruned:
                    del recs2[x]

                new_records = tuple(
                    sorted(recs2.items(), key=lambda kv: pos[kv[0]])
                )
                new_states.add(canonical(new_records, closed2, pattern2))
        states = new_states
        if not states:
            break

    feasible = False
    patterns: set[frozenset] = set()
    for records, closed, pattern in states:
        if records:
            continue
        if cover_mode:
            feasible = True
            patterns.add(pattern)
        elif closed:
            feasible = True
    return feasible, patterns


def _retag(recs: dict, link, new_link) -> None:
    """Replace the partner of a matched open end with a new link."""
    for x, rec in recs.items():
        if rec == ("E", link):
            recs[x] = ("E", new_link)
            return
    raise AssertionError("dangling path end")


def _join(recs: dict, a, b, cover_mode: bool, fresh_slot):
    """Join two path-end contributions through the current vertex.

    Returns a frozenset pair when a cover path completed, () when nothing
    completed, or None when the join is illegal.
    """
    if a[0] == "new" and b[0] == "new":
        s = fresh_slot[0]
        fresh_slot[0] += 1
        recs[a[1]] = ("E", ("m", s))
        recs[b[1]] = ("E", ("m", s))
        return ()
    if a[0] == "new" or b[0] == "new":
        if b[0] == "new":
            a, b = b, a
        u = a[1]
        recs[u] = ("E", b)
        return ()
    if a[0] == "m" and b[0] == "m":
        # two distinct open paths merge: re-pair their far ends
        s = fresh_slot[0]
        fresh_slot[0] += 1
        _retag(recs, a, ("m", s))
        _retag(recs, b, ("m", s))
        return ()
    if a[0] == "m" or b[0] == "m":
        if b[0] == "m":
            a, b = b, a
        _retag(recs, a, b)  # far end inherits the port tag
        return ()
    # both port tags: a path completed
    if not cover_mode:
        return None
    return frozenset((a[1], b[1]))


def _order_and_width(coords: Sequence[tuple]) -> tuple[list[int], int]:
    order = sorted(range(len(coords)), key=lambda i: coords[i])
    width = len({tuple(c[1:]) for c in coords})
    return order, width


def frontier_has_hamiltonian_cycle(
    coords: Sequence[tuple], edges: Iterable[tuple[int, int]]
) -> bool:
    """Hamiltonian-cycle decision by frontier DP over coordinate order."""
    n = len(coords)
    if n < 3:
        return False
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if u != v and v not in adj[u]:
            adj[u].append(v)
            adj[v].append(u)
    order, _ = _order_and_width(coords)
    feasible, _ = _run(n, order, adj, [2] * n, False)
    return feasible


def frontier_cover_patterns(
    coords: Sequence[tuple],
    edges: Iterable[tuple[int, int]],
    ports: Sequence[int],
) -> set[frozenset]:
    """Exhaustive set of achievable port-pairing patterns for path covers."""
    n = len(coords)
    if len(ports) % 2 == 1 or len(set(ports)) != len(ports):
        raise ValueError("ports must be distinct and even in number")
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if u != v and v not in adj[u]:
            adj[u].append(v)
            adj[v].append(u)
    quotas = [2] * n
    for p in ports:
        quotas[p] = 1
    order, _ = _order_and_width(coords)
    _, patterns = _run(n, order, adj, quotas, True)
    return patterns


MAX_STRIP_WIDTH = 20


def solve_frontier(grid_graph, width: int = MAX_STRIP_WIDTH) -> bool:
    """Hamiltonian-cycle decision for a grid graph lying in a narrow strip.

    Strip width is the number of occupied cross-sweep rows (distinct
    coordinate tails).  When the graph is wider than `width` (or `width`
    exceeds the supported cap) this transparently falls back to the
    backtracking solver; the decision is identical either way.
    """
    coords = grid_graph.vertices
    if len(coords) < 3:
        return False
    _, actual = _order_and_width(coords)
    if actual > min(width, MAX_STRIP_WIDTH):
        from . import find_hamiltonian_cycle

        return find_hamiltonian_cycle(grid_graph.to_multigraph()) is not None
    return frontier_has_hamiltonian_cycle(coords, grid_graph.edge_indices)
