"""Gadget file format and the shipped catalog.

A gadget file wraps a grid-graph block with the gadget's identity, port
declarations, and behavioral claims:

    gadget v1
    name dual-4.6.12-edge-east
    kind edge
    <grid-graph block, verbatim>
    port odd_attach 5
    port even_attach 0 1
    end

Port lines give vertex indices into the graph's sorted vertex list, with
groups separated by "/".  Trvb gadgets add one "claim <state> i:j ..." line
per claimed state; connection cases add "case <n>" before the graph block.
Catalog entries live under data/ and load in filename order.
"""

from __future__ import annotations

from importlib import resources

from ..io import format_gridgraph, parse_gridgraph
from . import _KIND_ROLES, GADGET_KINDS, GadgetSpec

GADGET_MAGIC = "gadget v1"


def format_gadget(spec: GadgetSpec) -> str:
    """Serialize a gadget; inverse of parse_gadget."""
    gg = spec.induced()
    index = gg.vertex_index()
    lines = [GADGET_MAGIC, f"name {spec.name}", f"kind {spec.kind}"]
    if spec.case is not None:
        lines.append(f"case {spec.case}")
    lines.append(format_gridgraph(gg).rstrip("\n"))
    for role in _KIND_ROLES[spec.kind]:
        groups = spec.groups(role)
        rendered = " / ".join(
            " ".join(str(index[v]) for v in grp) for grp in groups
        )
        lines.append(f"port {role} {rendered}")
    for nm, pattern in sorted(spec.claimed_states):
        rendered = " ".join(f"{index[a]}:{index[b]}" for a, b in pattern)
        lines.append(f"claim {nm} {rendered}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def parse_gadget(text: str) -> GadgetSpec:
    """Parse a gadget file; raises ValueError with a line number on bad input."""
    lines = text.splitlines()

    def fail(lineno: int, msg: str) -> None:
        raise ValueError(f"line {lineno}: {msg}")

    pos = 0

    def next_line() -> tuple[int, str]:
        nonlocal pos
        while pos < len(lines) and not lines[pos].strip():
            pos += 1
        if pos >= len(lines):
            fail(len(lines), "unexpected end of gadget file")
        pos += 1
        return pos, lines[pos - 1].strip()

    lineno, line = next_line()
    if line != GADGET_MAGIC:
        fail(lineno, f"expected {GADGET_MAGIC!r}, got {line!r}")
    lineno, line = next_line()
    if not line.startswith("name "):
        fail(lineno, f"expected a name line, got {line!r}")
    name = line[5:].strip()
    lineno, line = next_line()
    if not line.startswith("kind "):
        fail(lineno, f"expected a kind line, got {line!r}")
    kind = line[5:].strip()
    if kind not in GADGET_KINDS:
        fail(lineno, f"unknown gadget kind {kind!r}")
    case = None
    lineno, line = next_line()
    if line.startswith("case "):
        try:
            case = int(line[5:])
        except ValueError:
            fail(lineno, f"bad case number {line[5:]!r}")
        lineno, line = next_line()

    # the embedded grid-graph block runs through its own "end" line
    if line != "gridgraph v1":
        fail(lineno, f"expected the grid-graph block, got {line!r}")
    start = pos - 1
    while pos < len(lines) and lines[pos].strip() != "end":
        pos += 1
    if pos >= len(lines):
        fail(len(lines), "grid-graph block is missing its end line")
    pos += 1
    graph, _ = parse_gridgraph("\n".join(lines[start:pos]) + "\n")
    verts = graph.vertices

    def vertex(lineno: int, token: str):
        try:
            i = int(token)
        except ValueError:
            fail(lineno, f"bad vertex index {token!r}")
        if not 0 <= i < len(verts):
            fail(lineno, f"vertex index {i} out of range 0..{len(verts) - 1}")
        return verts[i]

    ports = []
    claims = []
    while True:
        lineno, line = next_line()
        if line == "end":
            break
        parts = line.split()
        if parts[0] == "port" and len(parts) >= 3:
            role = parts[1]
            groups = []
            grp: list = []
            for token in parts[2:]:
                if token == "/":
                    groups.append(tuple(grp))
                    grp = []
                else:
                    grp.append(vertex(lineno, token))
            groups.append(tuple(grp))
            ports.append((role, tuple(groups)))
        elif parts[0] == "claim" and len(parts) >= 3:
            pattern = []
            for token in parts[2:]:
                a, sep, b = token.partition(":")
                if not sep:
                    fail(lineno, f"bad claim pair {token!r}")
                pattern.append((vertex(lineno, a), vertex(lineno, b)))
            claims.append((parts[1], tuple(pattern)))
        else:
            fail(lineno, f"expected a port, claim, or end line, got {line!r}")
    for extra in lines[pos:]:
        if extra.strip():
            raise ValueError(f"trailing content after end: {extra.strip()!r}")
    return GadgetSpec(
        name=name,
        lattice=graph.lattice,
        vertices=verts,
        kind=kind,
        ports=tuple(ports),
        claimed_states=tuple(claims),
        case=case,
    )


def _data_files():
    root = resources.files(__package__) / "data"
    if not root.is_dir():
        return []
    return sorted(
        (entry for entry in root.iterdir() if entry.name.endswith(".gg")),
        key=lambda entry: entry.name,
    )


def catalog() -> list[GadgetSpec]:
    """All shipped gadgets, in filename order."""
    return [parse_gadget(entry.read_text()) for entry in _data_files()]


def gadget_ids() -> tuple[str, ...]:
    """Names of all shipped gadgets."""
    return tuple(spec.name for spec in catalog())


def catalog_entry(gadget_id: str) -> GadgetSpec:
    """The shipped gadget named `gadget_id`; ValueError names the valid ids."""
    for spec in catalog():
        if spec.name == gadget_id:
            return spec
    raise ValueError(
        f"unknown gadget {gadget_id!r}; shipped: {', '.join(gadget_ids())}"
    )
