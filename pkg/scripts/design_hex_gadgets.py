#!/usr/bin/env python3
"""Design checks for the hexagonal-emulation gadget families.

Exercises the geometry frozen in hamlat.gadgets.families well beyond the
catalog verifier: exact induced shapes, door discipline inside complete
assemblies, and source/assembly Hamiltonicity agreement, capped by an
exhaustive sweep over every induced hexagonal-grid graph on a fixed
nine-vertex window.  Run from the repository root:

    python3 scripts/design_hex_gadgets.py [--target 4.6.12] [--quick] [--write]

--write refreshes the frozen catalog files under src/hamlat/gadgets/data/.
"""

from __future__ import annotations

import argparse
import time
from itertools import combinations
from pathlib import Path
import sys

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from hamlat.gadgets import verify
from hamlat.gadgets.families import (
    HEX_DIRECTIONS,
    EmulationFamily,
    _shift as shift,
    hex_family,
)
from hamlat.gadgets.store import format_gadget, parse_gadget
from hamlat.lattice import builtin_lattice, induce, window
from hamlat.solver import (
    enumerate_hamiltonian_paths,
    find_hamiltonian_cycle,
    verify_certificate,
)

HEX = builtin_lattice("hexagonal")

# faces of one hexagonal cycle, one fused pair of them, and helpers reused
# by several battery entries below
HEXAGON = [(0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 0, 1), (1, 1, 0)]
DOUBLE_HEXAGON = [
    (1, 1, 0), (1, 0, 1), (2, 0, 0), (2, 0, 1), (2, 1, 0),
    (1, 1, 1), (0, 1, 1), (0, 2, 0), (0, 2, 1), (1, 2, 0),
]


def edge_set(gg) -> set:
    """Induced edges as a set of coordinate pairs."""
    return {frozenset(e) for e in gg.edge_vertex_pairs()}


# ---------------------------------------------------------------------------
# phase 1: the catalog verifier accepts every canonical gadget


def check_canonical(fam: EmulationFamily) -> None:
    print(f"== catalog gadgets (dual-{fam.target}) ==")
    for spec in fam.canonical_gadgets():
        start = time.perf_counter()
        report = verify(spec)
        print(report.summary())
        print(f"  ({time.perf_counter() - start:.2f}s)")
        assert report.passed, f"{spec.name}: verification failed"
        assert report.exhaustive, f"{spec.name}: verification not exhaustive"


# ---------------------------------------------------------------------------
# phase 2: induced shapes match the design tables exactly


def check_shapes(fam: EmulationFamily) -> None:
    print("== exact induced shapes match the family tables ==")
    i, j = 2, 2  # generic anchor; shapes are translation invariant
    ring = shift(fam.ring, fam.even_anchor(i, j))
    want = {frozenset((ring[a], ring[b])) for a, b in fam.ring_edges}
    got = edge_set(induce(fam.lattice, ring))
    assert got == want, "even gadget induced shape drifted"

    block = shift(fam.block, fam.odd_anchor(i, j))
    want = {frozenset((block[a], block[b])) for a, b in fam.block_edges}
    got = edge_set(induce(fam.lattice, block))
    assert got == want, "odd gadget induced shape drifted"

    for k in range(3):
        spec = fam.edge_gadget(i, j, k)
        a, b = fam.corridors[k].pair
        private = fam.edge_private(i, j, k)
        token = {"a": ring[a], "b": ring[b], "e": spec.odd_attach}
        coord = lambda t: token[t] if isinstance(t, str) else private[t]
        want = {frozenset((coord(x), coord(y))) for x, y in fam.corridor_edges}
        assert edge_set(spec.induced()) == want, f"edge gadget dir {k}: shape drifted"
    print("  even ring, odd block, and all 3 corridor shapes match their tables")


def check_corridor_ends(fam: EmulationFamily) -> None:
    print("== corridor traversal endpoints ==")
    roles = None
    for k in range(3):
        spec = fam.edge_gadget(1, 1, k)
        gg = spec.induced()
        g = gg.to_multigraph()
        index = gg.vertex_index()
        ring = shift(fam.ring, fam.even_anchor(1, 1))
        pair = tuple(ring[t] for t in fam.corridors[k].pair)
        working = set()
        for role, end in enumerate(pair):
            certs, _ = enumerate_hamiltonian_paths(
                g, index[end], index[spec.odd_attach], limit=1
            )
            if certs:
                working.add(role)
        assert working, f"edge gadget dir {k}: no traversal from either pair vertex"
        if roles is None:
            roles = working
        assert working == roles, f"edge gadget dir {k}: traversal ends differ across directions"
    print(f"  all 3 corridors admit traversal from pair role(s) {sorted(roles)}")


# ---------------------------------------------------------------------------
# phase 3: full assemblies — disjoint regions and door discipline


def hex_degree(faces: set, i: int, j: int, f: int) -> int:
    """Degree of hexagonal vertex (i, j, f) in the induced source graph."""
    if f == 0:
        return sum((i + di, j + dj, 1) in faces for di, dj in HEX_DIRECTIONS)
    return sum((i - di, j - dj, 0) in faces for di, dj in HEX_DIRECTIONS)


def assemble(fam: EmulationFamily, faces):
    """Regions, vertex ownership, and the induced assembly for a vertex set."""
    fs = {(int(i), int(j), int(f)) for (i, j, f) in faces}
    regions: dict[tuple, tuple] = {}
    for i, j, f in sorted(fs):
        assert f in (0, 1), f"hexagonal face index {f} out of range"
        if f == 0:
            regions["even", i, j] = shift(fam.ring, fam.even_anchor(i, j))
        else:
            regions["odd", i, j] = shift(fam.block, fam.odd_anchor(i, j))
        if hex_degree(fs, i, j, f) == 0:
            pendant = fam.even_pendant_at(i, j) if f == 0 else fam.odd_pendant_at(i, j)
            if pendant is not None:
                regions["pendant", i, j, f] = (pendant,)
    for i, j, f in sorted(fs):
        if f == 0:
            for k, (di, dj) in enumerate(HEX_DIRECTIONS):
                if (i + di, j + dj, 1) in fs:
                    regions["edge", i, j, k] = fam.edge_private(i, j, k)
    owner: dict[tuple, tuple] = {}
    for key, verts in regions.items():
        for v in verts:
            assert v not in owner, f"{v} claimed by both {owner[v]} and {key}"
            owner[v] = key
    return regions, owner, induce(fam.lattice, owner)


def allowed_doors(fam: EmulationFamily, regions) -> dict:
    """Every cross-region lattice edge the design permits, with its reason."""
    allowed: dict[frozenset, tuple] = {}
    for key in regions:
        if key[0] == "edge":
            _, i, j, k = key
            spec = fam.edge_gadget(i, j, k)
            private = fam.edge_private(i, j, k)
            interior = set(private)
            for a, b in spec.induced().edge_vertex_pairs():
                if (a in interior) != (b in interior):
                    allowed[frozenset((a, b))] = key
            ring = shift(fam.ring, fam.even_anchor(i, j))
            di, dj = HEX_DIRECTIONS[k]
            block = shift(fam.block, fam.odd_anchor(i + di, j + dj))
            hosts = {"ring": ring, "block": block}
            for p_idx, where, h_idx in fam.corridors[k].extra_doors:
                allowed[frozenset((private[p_idx], hosts[where][h_idx]))] = key
        elif key[0] == "pendant":
            _, i, j, f = key
            if f == 0:
                host = shift(fam.ring, fam.even_anchor(i, j))[fam.even_pendant_host]
            else:
                host = shift(fam.block, fam.odd_anchor(i, j))[fam.odd_pendant_host]
            allowed[frozenset((regions[key][0], host))] = key
    return allowed


def check_doors(fam: EmulationFamily, regions, owner, gg) -> None:
    """Cross-region edges must equal the declared door set exactly."""
    allowed = allowed_doors(fam, regions)
    crossing = {
        frozenset((a, b))
        for a, b in gg.edge_vertex_pairs()
        if owner[a] != owner[b]
    }
    stray = crossing - set(allowed)
    assert not stray, f"undeclared cross-region edges: {sorted(map(sorted, stray))[:4]}"
    missing = set(allowed) - crossing
    assert not missing, f"declared doors missing: {sorted(map(sorted, missing))[:4]}"


def agreement(fam: EmulationFamily, faces) -> tuple[bool, int]:
    """(source and assembly agree on Hamiltonicity, assembly order)."""
    source = induce(HEX, faces)
    src_ham = find_hamiltonian_cycle(source.to_multigraph()) is not None
    regions, owner, gg = assemble(fam, faces)
    assert sum(len(v) for v in regions.values()) == gg.n
    check_doors(fam, regions, owner, gg)
    out = gg.to_multigraph()
    cert = find_hamiltonian_cycle(out)
    if cert is not None:
        assert verify_certificate(out, cert), "solver returned a bad certificate"
    return (cert is not None) == src_ham, gg.n


def check_battery(fam: EmulationFamily) -> None:
    print("== assembly equivalence battery ==")
    battery = (
        ("single even vertex", [(0, 0, 0)]),
        ("single odd vertex", [(0, 0, 1)]),
        ("one edge", [(0, 0, 0), (0, 0, 1)]),
        ("two disjoint edges", [(0, 0, 0), (0, 0, 1), (0, 2, 0), (0, 2, 1)]),
        ("3-vertex path", [(0, 0, 0), (0, 0, 1), (1, 0, 0)]),
        ("4-vertex path", [(0, 0, 0), (0, 0, 1), (1, 0, 0), (1, 0, 1)]),
        ("5-vertex path", HEXAGON[:5]),
        ("hexagon", HEXAGON),
        ("hexagon plus pendant vertex", HEXAGON + [(0, 0, 0)]),
        ("hexagon plus isolated vertex", HEXAGON + [(2, 2, 0)]),
        ("fused double hexagon", DOUBLE_HEXAGON),
    )
    for label, faces in battery:
        start = time.perf_counter()
        ok, n = agreement(fam, faces)
        src = induce(HEX, faces)
        ham = find_hamiltonian_cycle(src.to_multigraph()) is not None
        print(
            f"  {label}: source n={src.n} ham={ham}, assembly n={n}"
            f" ({time.perf_counter() - start:.2f}s)"
        )
        assert ok, f"{label}: source and assembly disagree on Hamiltonicity"

    # pin the per-vertex door counts a degree-3 even gadget sees
    expected_census = {
        "4.6.12": (1, 3, 1, 3, 1, 3),
        "3.3.3.3.6": (0, 1, 2, 0, 1, 2, 0, 1, 2, 0),
    }[fam.target]
    regions, owner, gg = assemble(fam, DOUBLE_HEXAGON)
    ring = shift(fam.ring, fam.even_anchor(1, 1))
    counts = dict.fromkeys(ring, 0)
    for a, b in gg.edge_vertex_pairs():
        if owner[a] != owner[b]:
            for v in (a, b):
                if v in counts:
                    counts[v] += 1
    census = tuple(counts[v] for v in ring)
    assert census == expected_census, f"ring door census drifted: {census}"
    print(f"  degree-3 ring door census is {census}")


def check_sweep(fam: EmulationFamily) -> None:
    print("== exhaustive sweep: all induced sources on a 9-vertex window ==")
    faces = tuple(sorted(window(HEX, 3, 3))[:9])
    start = time.perf_counter()
    checked = ham_count = max_n = 0
    slowest = (0.0, ())
    for size in range(len(faces) + 1):
        for subset in combinations(faces, size):
            t0 = time.perf_counter()
            ok, n = agreement(fam, subset)
            dt = time.perf_counter() - t0
            assert ok, f"sweep disagreement on {subset}"
            checked += 1
            max_n = max(max_n, n)
            slowest = max(slowest, (dt, subset))
            src = induce(HEX, subset)
            if subset and find_hamiltonian_cycle(src.to_multigraph()):
                ham_count += 1
    total = time.perf_counter() - start
    print(
        f"  {checked} subsets agree ({ham_count} Hamiltonian sources,"
        f" largest assembly n={max_n}, {total:.1f}s total,"
        f" slowest {slowest[0]:.2f}s on {len(slowest[1])} faces)"
    )


# ---------------------------------------------------------------------------
# catalog freezing


_FILE_SUFFIXES = ("even", "odd", "edge", "edge_west", "edge_south")


def write_catalog(fam: EmulationFamily) -> None:
    data_dir = Path(__file__).resolve().parents[1] / "src" / "hamlat" / "gadgets" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)
    prefix = fam.target.replace(".", "")
    for spec, suffix in zip(fam.canonical_gadgets(), _FILE_SUFFIXES):
        text = format_gadget(spec)
        assert parse_gadget(text) == spec, f"{spec.name}: store round trip drifted"
        path = data_dir / f"{prefix}_{suffix}.gg"
        path.write_text(text)
        print(f"wrote {path}")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--target", default="4.6.12", help="emulation family to check")
    parser.add_argument("--quick", action="store_true", help="skip the window sweep")
    parser.add_argument("--write", action="store_true", help="freeze catalog files")
    args = parser.parse_args(argv)

    fam = hex_family(args.target)
    check_canonical(fam)
    check_shapes(fam)
    check_corridor_ends(fam)
    check_battery(fam)
    if not args.quick:
        check_sweep(fam)
    if args.write:
        write_catalog(fam)
    print("all design checks passed")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
