#!/usr/bin/env python3
"""Design checks for the vertex-breaking vertex gadgets.

Exercises the geometry frozen in hamlat.gadgets.vertex_breaking beyond
the catalog verifier: exact induced shapes, cross-checked state
enumeration on two independent engines, rotational symmetry of the
large 3.3.4.3.4 patch, and free rail room outside every port.  Run from
the repository root:

    python3 scripts/design_trvb_gadgets.py [--target 3.4.6.4] [--write]

--write refreshes the frozen catalog files under src/hamlat/gadgets/data/.
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path
import sys

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from hamlat.gadgets import verify, verify_trvb_vertex_gadget
from hamlat.gadgets.store import format_gadget, parse_gadget
from hamlat.gadgets.vertex_breaking import (
    TRVB_TARGETS,
    VertexDesign,
    vertex_design,
)
from hamlat.lattice import FaceCoord, builtin_lattice, induce, window


def designs_for(target: str) -> list[VertexDesign]:
    out = [vertex_design(target, 4)]
    if target == "3.4.6.4":
        out.append(vertex_design(target, 3))
    return out


def edge_set(gg) -> set:
    """Induced edges as a set of coordinate pairs."""
    return {frozenset(e) for e in gg.edge_vertex_pairs()}


# ---------------------------------------------------------------------------
# phase 1: the catalog verifier accepts every canonical gadget


def check_canonical(design: VertexDesign) -> None:
    spec = design.canonical_gadget()
    print(f"== catalog gadget ({spec.name}) ==")
    start = time.perf_counter()
    report = verify(spec)
    print(report.summary())
    print(f"  ({time.perf_counter() - start:.2f}s)")
    assert report.passed, f"{spec.name}: verification failed"
    assert report.exhaustive, f"{spec.name}: verification not exhaustive"


# ---------------------------------------------------------------------------
# phase 2: both enumeration engines agree, here and on a shifted anchor


def check_engines(design: VertexDesign) -> None:
    print("== enumerate and frontier engines agree ==")
    for anchor in ((0, 0), (2, 3)):
        reports = {
            method: verify_trvb_vertex_gadget(
                design.gadget(*anchor), node_budget=5_000_000, method=method
            )
            for method in ("enumerate", "frontier")
        }
        for method, report in reports.items():
            assert report.passed, f"anchor {anchor}: {method} engine rejected"
            assert report.exhaustive, f"anchor {anchor}: {method} not exhaustive"
        print(f"  anchor {anchor}: both engines accept the claimed states")


# ---------------------------------------------------------------------------
# phase 3: induced shapes match the design's intent exactly


def _ring_edges(ring: tuple) -> set:
    k = len(ring)
    return {frozenset((ring[m], ring[(m + 1) % k])) for m in range(k)}


def check_shape(design: VertexDesign) -> None:
    print("== induced shape ==")
    gg = induce(design.lattice, design.vertices)
    got = edge_set(gg)
    degrees = {}
    for e in got:
        for v in e:
            degrees[v] = degrees.get(v, 0) + 1
    if design.target == "3.4.6.4" and design.breakable:
        assert got == _ring_edges(design.vertices), "expected a chordless 8-ring"
        print("  chordless 8-face ring of alternating hexagons and squares")
    elif design.target == "3.4.6.4":
        assert got == _ring_edges(design.vertices), "expected a chordless 12-ring"
        between = [v for v in design.vertices if all(v not in w for w in design.wires)]
        assert all(degrees[v] == 2 for v in between), "between-wire arcs not forced"
        print("  chordless 12-face ring; between-wire arcs are degree-2 forced")
    elif design.target == "3.3.3.4.4":
        ring = design.vertices
        chord = frozenset((ring[0], ring[4]))
        assert got == _ring_edges(ring) | {chord}, "expected 8-ring plus diameter"
        print("  8-face lens ring with one harmless square-square diameter chord")
    else:
        census = tuple(sorted(degrees.values()))
        assert len(design.vertices) == 24 and census == (
            (2,) * 16 + (3,) * 8
        ), f"3.3.4.3.4 patch shape drifted: n={len(design.vertices)}, {census}"
        print("  24-face patch, 28 edges, sixteen degree-2 and eight degree-3 faces")


def check_cairo_symmetry(design: VertexDesign) -> None:
    """The 3.3.4.3.4 patch maps to itself under quarter-turn rotation."""
    print("== fourfold rotational symmetry ==")
    lat = design.lattice
    faces = set(design.vertices)
    pos = {v: lat.position(FaceCoord(*v)) for v in faces}
    cx = sum(p[0] for p in pos.values()) / len(pos)
    cy = sum(p[1] for p in pos.values()) / len(pos)

    def rotated(v):
        x, y = pos[v]
        want = (cx - (y - cy), cy + (x - cx))
        hits = [
            u
            for u, (ux, uy) in pos.items()
            if (ux - want[0]) ** 2 + (uy - want[1]) ** 2 < 0.0025
        ]
        assert len(hits) == 1, f"rotation image of {v} not unique in patch"
        return hits[0]

    image = {v: rotated(v) for v in faces}
    assert set(image.values()) == faces, "rotation is not a bijection of the patch"
    got = edge_set(induce(lat, faces))
    mapped = {frozenset((image[a], image[b])) for a, b in map(tuple, got)}
    assert mapped == got, "rotation is not a graph automorphism of the patch"
    cycle = [design.wires[0][0]]
    for _ in range(3):
        cycle.append(image[cycle[-1]])
    assert set(cycle) == {w[0] for w in design.wires}, "rotation does not cycle wires"
    print("  quarter-turn is a patch automorphism cycling the four wires")


# ---------------------------------------------------------------------------
# phase 4: every port keeps free lattice neighbors for wire rails


def check_rail_room(design: VertexDesign) -> None:
    print("== rail room outside every port ==")
    anchor = (4, 4)
    patch = set(design.gadget(*anchor).vertices)
    ambient = induce(design.lattice, window(design.lattice, 12, 12))
    neighbors: dict[tuple, set] = {}
    for a, b in ambient.edge_vertex_pairs():
        neighbors.setdefault(a, set()).add(b)
        neighbors.setdefault(b, set()).add(a)
    for wire in design.broken_pattern(anchor):
        for port in wire:
            spare = neighbors[port] - patch
            assert spare, f"port {port} has no free neighbor for a rail"
    print("  every port face has at least one lattice neighbor off the patch")


# ---------------------------------------------------------------------------
# catalog freezing


def write_catalog(designs: list[VertexDesign]) -> None:
    data_dir = Path(__file__).resolve().parents[1] / "src" / "hamlat" / "gadgets" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)
    for design in designs:
        spec = design.canonical_gadget()
        text = format_gadget(spec)
        assert parse_gadget(text) == spec, f"{spec.name}: store round trip drifted"
        suffix = "vertex" if design.breakable else "vertex3"
        path = data_dir / f"{design.target.replace('.', '')}_{suffix}.gg"
        path.write_text(text)
        print(f"wrote {path}")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--target", help="check one lattice instead of all three")
    parser.add_argument("--write", action="store_true", help="freeze catalog files")
    args = parser.parse_args(argv)

    targets = (args.target,) if args.target else TRVB_TARGETS
    checked = []
    for target in targets:
        for design in designs_for(builtin_lattice(target).name):
            check_canonical(design)
            check_engines(design)
            check_shape(design)
            if design.target == "3.3.4.3.4":
                check_cairo_symmetry(design)
            check_rail_room(design)
            checked.append(design)
    if args.write:
        write_catalog(checked)
    print("all design checks passed")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
