"""Tree-residue vertex breaking: model, breaking operation, brute-force solver.

Breaking a vertex detaches its edge ends onto fresh degree-1 vertices.  An
instance asks whether some subset of its breakable vertices can be broken so
that the residue is a single tree (connected and acyclic; forests do not
count).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .graphs import MultiGraph, is_connected, is_tree
from .io import FormatError, _Lines, _fail, _ints, format_multigraph, parse_multigraph

TRVB_MAGIC = "trvb v1"
BRUTEFORCE_CAP = 24


@dataclass(frozen=True)
class TrvbInstance:
    """A connected multigraph with a designated set of breakable vertices."""

    graph: MultiGraph
    breakable: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "breakable", frozenset(self.breakable))
        bad = [v for v in self.breakable if not 0 <= v < self.graph.n]
        if bad:
            raise ValueError(f"breakable vertices {sorted(bad)} not in graph")
        if not is_connected(self.graph):
            raise ValueError("instance graph must be connected")

    def check_reduction_regime(self) -> None:
        """Planar, breakable degrees <= 4: the regime the reductions accept."""
        from .graphs import planarity_check

        if not planarity_check(self.graph):
            raise ValueError("instance graph is not planar")
        bad = sorted(v for v in self.breakable if self.graph.degree(v) > 4)
        if bad:
            raise ValueError(f"breakable vertices {bad} have degree > 4")


@dataclass(frozen=True)
class BreakSet:
    """A witness: the broken vertices, as a sorted tuple."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(set(self.vertices))))


def residue(g: MultiGraph, broken: Iterable[int]) -> MultiGraph:
    """Graph after breaking every vertex in `broken` simultaneously.

    Surviving vertices keep their relative order and occupy ids 0..; fresh
    leaves follow, two per broken self-loop, one per other broken edge end,
    in sorted edge order.
    """
    broken = set(broken)
    for v in broken:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph")
    keep = [v for v in range(g.n) if v not in broken]
    new_id = {v: k for k, v in enumerate(keep)}
    out = MultiGraph(len(keep))
    for u, v in sorted(tuple(sorted(e)) for e in g.edges()):
        a = out.add_vertices(1)[0] if u in broken else new_id[u]
        b = out.add_vertices(1)[0] if v in broken else new_id[v]
        out.add_edge(a, b)
    return out


def break_vertex(g: MultiGraph, v: int) -> MultiGraph:
    """Replace v by deg(v) fresh degree-1 vertices, one per incident edge end."""
    return residue(g, [v])


def residue_is_tree(inst: TrvbInstance, bs: BreakSet) -> bool:
    """True iff breaking exactly bs.vertices leaves a single tree."""
    if not set(bs.vertices) <= inst.breakable:
        raise ValueError("break set is not a subset of the breakable vertices")
    return is_tree(residue(inst.graph, bs.vertices))


def _subsets_lex(items: list[int]) -> Iterator[tuple[int, ...]]:
    """All subsets of a sorted list, in lexicographic tuple order."""

    def rec(prefix: list[int], start: int) -> Iterator[tuple[int, ...]]:
        yield tuple(prefix)
        for i in range(start, len(items)):
            prefix.append(items[i])
            yield from rec(prefix, i + 1)
            prefix.pop()

    yield from rec([], 0)


def solve_trvb_bruteforce(inst: TrvbInstance) -> Optional[BreakSet]:
    """Lexicographically least working BreakSet, or None if no subset works."""
    k = len(inst.breakable)
    if k > BRUTEFORCE_CAP:
        raise ValueError(
            f"{k} breakable vertices exceed the brute-force cap ({BRUTEFORCE_CAP})"
        )
    items = sorted(inst.breakable)
    for subset in _subsets_lex(items):
        if is_tree(residue(inst.graph, subset)):
            return BreakSet(subset)
    return None


def format_trvb(inst: TrvbInstance) -> str:
    """Canonical text form: the multigraph format plus a breakable line."""
    body = format_multigraph(inst.graph)
    assert body.endswith("end\n")
    breakable = " ".join(str(v) for v in sorted(inst.breakable))
    line = f"breakable {breakable}".rstrip()
    return TRVB_MAGIC + "\n" + body[: -len("end\n")] + line + "\nend\n"


def parse_trvb(text: str) -> TrvbInstance:
    """Inverse of format_trvb."""
    src = _Lines(text)
    src.next(TRVB_MAGIC)
    body_lines = []
    breakable: Optional[list[int]] = None
    while True:
        line = src.next()
        parts = line.split()
        if parts[:1] == ["breakable"]:
            breakable = _ints(src.pos, parts[1:], len(parts) - 1)
            body_lines.append(src.next("end"))
            break
        body_lines.append(line)
        if line == "end":
            _fail(src.pos, "missing breakable line")
    if src.peek() not in (None, ""):
        _fail(src.pos + 1, "trailing content after end")
    g = parse_multigraph("\n".join(body_lines) + "\n")
    if sorted(set(breakable)) != breakable:
        raise FormatError("breakable vertices must be sorted and distinct")
    try:
        return TrvbInstance(graph=g, breakable=frozenset(breakable))
    except ValueError as exc:
        raise FormatError(str(exc))
