"""Plain-text file formats for grid graphs and multigraphs.

Formats are canonical: a graph has exactly one serialization, writers emit
it, and parse/format are exact inverses (bit-exact round-trips).  Grid-graph
files store the parent lattice and the vertex set only; edges are re-induced
on read, never stored.
"""

from __future__ import annotations

from .graphs import MultiGraph
from .lattice import (
    AugmentedAssignment,
    FaceCoord,
    GridGraph,
    LatticeSpec,
    builtin_lattice,
    induce,
)

GRIDGRAPH_MAGIC = "gridgraph v1"
MULTIGRAPH_MAGIC = "multigraph v1"

Highlights = dict[str, tuple[int, ...]]


class FormatError(ValueError):
    """Raised when a graph file does not match its declared format."""


def _fail(lineno: int, msg: str) -> None:
    raise FormatError(f"line {lineno}: {msg}")


class _Lines:
    def __init__(self, text: str):
        self.lines = text.split("\n")
        self.pos = 0

    def next(self, expect: str | None = None) -> str:
        if self.pos >= len(self.lines):
            _fail(self.pos + 1, "unexpected end of file")
        line = self.lines[self.pos]
        self.pos += 1
        if expect is not None and line != expect:
            _fail(self.pos, f"expected {expect!r}, got {line!r}")
        return line

    def peek(self) -> str | None:
        return self.lines[self.pos] if self.pos < len(self.lines) else None


def _ints(lineno: int, parts: list[str], count: int) -> list[int]:
    if len(parts) != count:
        _fail(lineno, f"expected {count} fields, got {len(parts)}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        _fail(lineno, f"non-integer field in {parts!r}")
        raise AssertionError  # unreachable


def _format_parent(parent) -> list[str]:
    if isinstance(parent, LatticeSpec):
        return [f"lattice {parent.name}"]
    x0, y0, nx, ny = parent.window
    head = f"augmented {x0} {y0} {nx} {ny}"
    if parent.rule is not None:
        return [f"{head} rule {parent.rule}"]
    if parent.constant is not None:
        return [f"{head} constant {parent.constant}"]
    lines = [f"{head} table"]
    for x, y, val in sorted(parent.table):
        lines.append(f"pixel {x} {y} {val}")
    return lines


def _parse_parent(src: _Lines):
    line = src.next()
    parts = line.split()
    if not parts:
        _fail(src.pos, "missing lattice header")
    if parts[0] == "lattice":
        if len(parts) != 2:
            _fail(src.pos, f"bad lattice header {line!r}")
        try:
            return builtin_lattice(parts[1])
        except ValueError as exc:
            _fail(src.pos, str(exc))
    if parts[0] != "augmented" or len(parts) < 6:
        _fail(src.pos, f"bad lattice header {line!r}")
    x0, y0, nx, ny = _ints(src.pos, parts[1:5], 4)
    kind = parts[5]
    rest = parts[6:]
    try:
        if kind == "rule" and len(rest) == 1:
            return AugmentedAssignment(window=(x0, y0, nx, ny), rule=rest[0])
        if kind == "constant" and len(rest) == 1:
            return AugmentedAssignment(window=(x0, y0, nx, ny), constant=rest[0])
        if kind == "table" and not rest:
            table = []
            for _ in range(nx * ny):
                pline = src.next()
                pparts = pline.split()
                if len(pparts) != 4 or pparts[0] != "pixel":
                    _fail(src.pos, f"expected pixel line, got {pline!r}")
                px, py = _ints(src.pos, pparts[1:3], 2)
                table.append((px, py, pparts[3]))
            return AugmentedAssignment(window=(x0, y0, nx, ny), table=tuple(sorted(table)))
    except FormatError:
        raise
    except ValueError as exc:
        _fail(src.pos, str(exc))
    _fail(src.pos, f"bad lattice header {line!r}")


def format_gridgraph(graph: GridGraph, highlights: Highlights | None = None) -> str:
    """Canonical text form of a grid graph plus optional highlight index lists."""
    lines = [GRIDGRAPH_MAGIC]
    lines += _format_parent(graph.lattice)
    lines.append(f"vertices {graph.n}")
    for v in graph.vertices:
        lines.append(" ".join(str(c) for c in v))
    for name in sorted(highlights or {}):
        idxs = highlights[name]
        if any(not 0 <= i < graph.n for i in idxs):
            raise FormatError(f"highlight {name!r} references a bad vertex index")
        if not name.isidentifier():
            raise FormatError(f"highlight name {name!r} must be an identifier")
        lines.append(f"highlight {name} " + " ".join(str(i) for i in idxs))
    lines.append("end")
    return "\n".join(lines) + "\n"


def parse_gridgraph(text: str) -> tuple[GridGraph, Highlights]:
    """Inverse of format_gridgraph; edges are re-induced from the parent."""
    src = _Lines(text)
    src.next(GRIDGRAPH_MAGIC)
    parent = _parse_parent(src)
    nparts = src.next().split()
    if len(nparts) != 2 or nparts[0] != "vertices":
        _fail(src.pos, "expected vertex count")
    n = _ints(src.pos, nparts[1:], 1)[0]
    width = 3 if isinstance(parent, LatticeSpec) else 2
    verts = []
    for _ in range(n):
        fields = _ints(src.pos + 1, src.next().split(), width)
        verts.append(FaceCoord(*fields) if width == 3 else tuple(fields))
    highlights: Highlights = {}
    while True:
        line = src.next()
        if line == "end":
            break
        parts = line.split()
        if parts[:1] != ["highlight"] or len(parts) < 2:
            _fail(src.pos, f"expected highlight or end, got {line!r}")
        name = parts[1]
        idxs = tuple(_ints(src.pos, parts[2:], len(parts) - 2))
        if name in highlights:
            _fail(src.pos, f"duplicate highlight {name!r}")
        if any(not 0 <= i < n for i in idxs):
            _fail(src.pos, f"highlight {name!r} references a bad vertex index")
        highlights[name] = idxs
    if src.peek() not in (None, ""):
        _fail(src.pos + 1, "trailing content after end")
    graph = induce(parent, verts)
    if len(graph.vertices) != n:
        _fail(1, "duplicate vertices in file")
    return graph, highlights


def format_multigraph(g: MultiGraph) -> str:
    """Canonical text form of a multigraph (loops and parallel edges kept)."""
    lines = [MULTIGRAPH_MAGIC, f"vertices {g.n}", f"edges {len(g.edges())}"]
    for u, v in sorted(tuple(sorted(e)) for e in g.edges()):
        lines.append(f"{u} {v}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def parse_multigraph(text: str) -> MultiGraph:
    """Inverse of format_multigraph."""
    src = _Lines(text)
    src.next(MULTIGRAPH_MAGIC)
    nparts = src.next().split()
    if len(nparts) != 2 or nparts[0] != "vertices":
        _fail(src.pos, "expected vertex count")
    n = _ints(src.pos, nparts[1:], 1)[0]
    mparts = src.next().split()
    if len(mparts) != 2 or mparts[0] != "edges":
        _fail(src.pos, "expected edge count")
    m = _ints(src.pos, mparts[1:], 1)[0]
    if n < 0 or m < 0:
        _fail(src.pos, "negative count")
    g = MultiGraph(n)
    prev = None
    for _ in range(m):
        u, v = _ints(src.pos + 1, src.next().split(), 2)
        if not (0 <= u < n and 0 <= v < n):
            _fail(src.pos, f"edge ({u}, {v}) out of range")
        if (u, v) != tuple(sorted((u, v))):
            _fail(src.pos, f"edge ({u}, {v}) not in canonical order")
        if prev is not None and (u, v) < prev:
            _fail(src.pos, "edges not sorted")
        prev = (u, v)
        g.add_edge(u, v)
    src.next("end")
    if src.peek() not in (None, ""):
        _fail(src.pos + 1, "trailing content after end")
    return g


def save(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def load(path: str) -> str:
    with open(path, "r", encoding="utf-8", newline="\n") as fh:
        return fh.read()
