"""Parameterized gadget placements for hexagonal-grid emulation targets.

An emulation family pins, per emulated hexagonal cell: an even-vertex
gadget around every face-0 hexagonal vertex, an odd-vertex gadget around
every face-1 vertex, and one corridor (edge gadget) per hexagonal edge
direction.  A corridor shares its even attachment pair with the even
gadget and its odd attachment with an odd-gadget entrance; the rest of
its vertices are corridor-private.  Anchors follow an integer 2x2 basis
per emulated cell, so families with skew placements fit the same mold.
The frozen catalog entries under data/ are instances of these
constructors, and the hexagonal reduction re-derives every placement
from the same tables, so each family's geometry lives in exactly one
place.

Families whose bare vertex gadget is Hamiltonian on its own declare an
isolation pendant: one extra lattice vertex adjacent only to the gadget
of an isolated emulated vertex.  Without it a single-vertex source
(which has no Hamiltonian cycle) would reduce to a Hamiltonian output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..lattice import LatticeSpec, builtin_lattice
from . import GadgetSpec

# hexagonal source lattice: face 0 takes even gadgets, face 1 odd gadgets;
# direction k joins even vertex (i, j) to odd vertex (i + di, j + dj)
HEX_DIRECTIONS = ((0, 0), (-1, 0), (0, -1))

# face indices of the 4.6.12 lattice: 12-gon, two hexagons, three squares
_Z, _HA, _HB, _S0, _S1, _S2 = range(6)

# face indices of the 3.3.3.3.6 lattice: hexagon, six petal triangles,
# up and down filler triangles
_FH = 0
_FP = (1, 2, 3, 4, 5, 6)  # petal t lives at face index t + 1
_FU, _FD = 7, 8


def _shift(coords, base: tuple[int, int]) -> tuple:
    """Coordinates translated by `base` whole cells."""
    bi, bj = base
    return tuple((i + bi, j + bj, f) for (i, j, f) in coords)


@dataclass(frozen=True)
class CorridorShape:
    """Even-anchor-relative geometry of one edge-gadget direction."""

    pair: tuple[int, int]  # ring indices of the shared even attachment
    private: tuple  # corridor-owned coordinates
    odd_attach: tuple  # shared odd-gadget entrance
    # lattice contacts between private vertices and gadget vertices beyond
    # the ones visible inside the edge gadget itself, as triples
    # (private index, "ring" | "block", index into that gadget tuple);
    # "block" refers to the odd gadget this corridor attaches to
    extra_doors: tuple = ()


@dataclass(frozen=True)
class EmulationFamily:
    """Gadget geometry emulating hexagonal grids on one target lattice."""

    target: str
    basis_i: tuple[int, int]  # anchor step per emulated i unit
    basis_j: tuple[int, int]  # anchor step per emulated j unit
    even_offset: tuple[int, int]
    odd_offset: tuple[int, int]
    ring: tuple  # even gadget, anchor-relative; entrance pairs index into it
    ring_pairs: tuple  # 3 index pairs, one per hexagonal direction
    ring_edges: tuple  # expected induced edges of the even gadget, by index
    block: tuple  # odd gadget, anchor-relative
    block_entrances: tuple  # 3 indices into block, one per direction
    block_edges: tuple  # expected induced edges of the odd gadget, by index
    corridors: tuple  # 3 CorridorShape, one per direction
    # expected induced corridor edges; tokens "a"/"b" are the pair
    # vertices, "e" the odd attachment, integers index into private
    corridor_edges: tuple
    even_pendant: Optional[tuple] = None  # isolation pendant, even-relative
    odd_pendant: Optional[tuple] = None  # isolation pendant, odd-relative
    even_pendant_host: int = 0  # ring index the even pendant hangs from
    odd_pendant_host: int = 0  # block index the odd pendant hangs from
    # anchors of the five frozen catalog entries (even, odd, edge 0/1/2),
    # picked so every coordinate stays non-negative
    canonical_anchors: tuple = ((0, 0),) * 5

    @property
    def lattice(self) -> LatticeSpec:
        return builtin_lattice(self.target)

    def even_anchor(self, i: int, j: int) -> tuple[int, int]:
        """Lattice cell anchoring the even gadget of hexagonal vertex (i, j, 0)."""
        return (
            i * self.basis_i[0] + j * self.basis_j[0] + self.even_offset[0],
            i * self.basis_i[1] + j * self.basis_j[1] + self.even_offset[1],
        )

    def odd_anchor(self, i: int, j: int) -> tuple[int, int]:
        """Lattice cell anchoring the odd gadget of hexagonal vertex (i, j, 1)."""
        return (
            i * self.basis_i[0] + j * self.basis_j[0] + self.odd_offset[0],
            i * self.basis_i[1] + j * self.basis_j[1] + self.odd_offset[1],
        )

    def even_gadget(self, i: int, j: int, name: Optional[str] = None) -> GadgetSpec:
        """The even-vertex gadget emulating hexagonal vertex (i, j, 0)."""
        verts = _shift(self.ring, self.even_anchor(i, j))
        groups = tuple((verts[a], verts[b]) for a, b in self.ring_pairs)
        return GadgetSpec(
            name=name or f"dual-{self.target} even vertex ({i},{j})",
            lattice=self.lattice,
            vertices=verts,
            kind="even_vertex",
            ports={"entrances": groups},
        )

    def odd_gadget(self, i: int, j: int, name: Optional[str] = None) -> GadgetSpec:
        """The odd-vertex gadget emulating hexagonal vertex (i, j, 1)."""
        verts = _shift(self.block, self.odd_anchor(i, j))
        groups = tuple((verts[e],) for e in self.block_entrances)
        return GadgetSpec(
            name=name or f"dual-{self.target} odd vertex ({i},{j})",
            lattice=self.lattice,
            vertices=verts,
            kind="odd_vertex",
            ports={"entrances": groups},
        )

    def edge_gadget(self, i: int, j: int, k: int, name: Optional[str] = None) -> GadgetSpec:
        """The edge gadget for the hexagonal edge leaving (i, j, 0) in direction k."""
        shape = self.corridors[k]
        base = self.even_anchor(i, j)
        a, b = shape.pair
        pair = _shift((self.ring[a], self.ring[b]), base)
        private = _shift(shape.private, base)
        (odd,) = _shift((shape.odd_attach,), base)
        return GadgetSpec(
            name=name or f"dual-{self.target} edge ({i},{j}) dir {k}",
            lattice=self.lattice,
            vertices=pair + private + (odd,),
            kind="edge",
            ports={"odd_attach": ((odd,),), "even_attach": (pair,)},
        )

    def edge_private(self, i: int, j: int, k: int) -> tuple:
        """Corridor-private vertices (shared attachments excluded)."""
        return _shift(self.corridors[k].private, self.even_anchor(i, j))

    def even_pendant_at(self, i: int, j: int) -> Optional[tuple]:
        """Isolation pendant for an isolated even vertex (i, j, 0), if any."""
        if self.even_pendant is None:
            return None
        (v,) = _shift((self.even_pendant,), self.even_anchor(i, j))
        return v

    def odd_pendant_at(self, i: int, j: int) -> Optional[tuple]:
        """Isolation pendant for an isolated odd vertex (i, j, 1), if any."""
        if self.odd_pendant is None:
            return None
        (v,) = _shift((self.odd_pendant,), self.odd_anchor(i, j))
        return v

    def canonical_gadgets(self) -> tuple[GadgetSpec, ...]:
        """Frozen catalog instances: even, odd, and the three edge directions."""
        (ev, od, e0, e1, e2) = self.canonical_anchors
        return (
            self.even_gadget(*ev, name=f"dual-{self.target} even vertex"),
            self.odd_gadget(*od, name=f"dual-{self.target} odd vertex"),
            self.edge_gadget(*e0, 0, name=f"dual-{self.target} edge"),
            self.edge_gadget(*e1, 1, name=f"dual-{self.target} edge west"),
            self.edge_gadget(*e2, 2, name=f"dual-{self.target} edge south"),
        )


def _kisrhombille_family() -> EmulationFamily:
    """Gadgets on the dual of 4.6.12 at four lattice cells per hexagonal cell.

    The even gadget is the induced 6-cycle of squares and 12-gons around
    hexagon face a of the anchor cell (the hexagon itself stays outside);
    consecutive ring vertices alternate between entrance pairs and plain
    edges.  The odd gadget is hexagon face b of its anchor plus the same
    six-face ring around it, with the three neighboring a-hexagons as
    single-vertex entrance stubs.  Each corridor adds a hexagon/square
    triangle beside the even pair plus one 12-gon cut vertex carrying a
    pendant edge to the odd stub.  Bare rings and blocks are Hamiltonian,
    so isolated vertices take a pendant.
    """
    ring = (
        (0, 0, _S0),  # 0: pair of direction 0
        (1, 0, _Z),  # 1: pair of direction 2
        (0, 0, _S2),  # 2: pair of direction 2
        (0, 0, _Z),  # 3: pair of direction 1
        (0, 0, _S1),  # 4: pair of direction 1
        (0, 1, _Z),  # 5: pair of direction 0
    )
    block = (
        (0, 0, _HB),  # hub hexagon
        (0, 0, _S0),  # ring, clockwise from the hub's lower-left square
        (1, 0, _Z),
        (1, 0, _S1),
        (1, 1, _Z),
        (0, 1, _S2),
        (0, 1, _Z),
        (0, 0, _HA),  # entrance stub, direction 0
        (1, 0, _HA),  # entrance stub, direction 1
        (0, 1, _HA),  # entrance stub, direction 2
    )
    block_edges = (
        (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6),
        (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1),
        (7, 1), (7, 2), (7, 6),
        (8, 2), (8, 3), (8, 4),
        (9, 4), (9, 5), (9, 6),
    )
    corridors = (
        CorridorShape(
            pair=(0, 5),
            private=((0, 0, _HB), (0, 1, _S2), (1, 1, _Z)),
            odd_attach=(1, 1, _HA),
            extra_doors=((0, "ring", 1),),
        ),
        CorridorShape(
            pair=(4, 3),
            private=((-1, 0, _HB), (-1, 0, _S0), (-1, 1, _Z)),
            odd_attach=(-2, 1, _HA),
            extra_doors=((0, "ring", 5),),
        ),
        CorridorShape(
            pair=(2, 1),
            private=((0, -1, _HB), (1, -1, _S1), (1, -1, _Z)),
            odd_attach=(1, -2, _HA),
            extra_doors=((0, "ring", 3),),
        ),
    )
    return EmulationFamily(
        target="4.6.12",
        basis_i=(4, 0),
        basis_j=(0, 4),
        even_offset=(0, 0),
        odd_offset=(1, 1),
        ring=ring,
        ring_pairs=((0, 5), (4, 3), (2, 1)),
        ring_edges=((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)),
        block=block,
        block_entrances=(7, 8, 9),
        block_edges=block_edges,
        corridors=corridors,
        corridor_edges=(
            ("a", "b"), ("a", 0), ("b", 0), ("b", 1),
            (0, 1), (0, 2), (1, 2), (2, "e"),
        ),
        even_pendant=(-1, 0, _S0),
        odd_pendant=(2, 0, _Z),
        even_pendant_host=3,
        odd_pendant_host=8,
        canonical_anchors=((0, 0), (0, 0), (0, 0), (1, 0), (0, 1)),
    )


def _floret_family() -> EmulationFamily:
    """Gadgets on the dual of 3.3.3.3.6 with one 9-cycle flower per vertex.

    Both vertex gadgets are a 9-cycle alternating petal triangles and
    hexagons around a filler triangle, with the filler as a center spoked
    to every third ring vertex: even gadgets circle an up triangle, odd
    gadgets a down triangle.  Even entrance pairs are the hexagon/petal
    ring edges; odd entrances are the petals opposite the spokes.  Each
    corridor is a six-vertex lobe from the even pair through the down
    triangle beside it, cut by the up triangle that carries the odd
    attachment.  A bare 9-cycle with center is never Hamiltonian, so no
    isolation pendants are needed.
    """
    ring = (
        (0, 0, _FP[1]),  # 0: petal spoked to the center
        (0, 1, _FP[4]),  # 1: pair of direction 1, petal
        (0, 1, _FH),  # 2: pair of direction 1, hexagon
        (0, 1, _FP[5]),  # 3: petal spoked to the center
        (1, 0, _FP[2]),  # 4: pair of direction 2, petal
        (1, 0, _FH),  # 5: pair of direction 2, hexagon
        (1, 0, _FP[3]),  # 6: petal spoked to the center
        (0, 0, _FP[0]),  # 7: pair of direction 0, petal
        (0, 0, _FH),  # 8: pair of direction 0, hexagon
        (0, 0, _FU),  # 9: center
    )
    ring_edges = (
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 0),
        (9, 0), (9, 3), (9, 6),
    )
    block = (
        (0, 0, _FD),  # 0: center
        (0, 1, _FP[0]),  # 1: petal spoked to the center
        (0, 1, _FH),  # 2: hexagon
        (0, 1, _FP[5]),  # 3: entrance of direction 2
        (1, 0, _FP[2]),  # 4: petal spoked to the center
        (1, 0, _FH),  # 5: hexagon
        (1, 0, _FP[1]),  # 6: entrance of direction 1
        (1, 1, _FP[4]),  # 7: petal spoked to the center
        (1, 1, _FH),  # 8: hexagon
        (1, 1, _FP[3]),  # 9: entrance of direction 0
    )
    block_edges = (
        (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 1),
        (0, 1), (0, 4), (0, 7),
    )
    corridors = (
        CorridorShape(
            pair=(8, 7),
            private=(
                (0, 0, _FP[4]), (0, -1, _FP[1]), (0, -1, _FU),
                (0, 0, _FP[5]), (1, -1, _FP[2]), (0, -1, _FD),
            ),
            odd_attach=(1, -1, _FP[3]),
            extra_doors=((1, "block", 2), (4, "block", 8)),
        ),
        CorridorShape(
            pair=(2, 1),
            private=(
                (0, 1, _FP[2]), (-1, 2, _FP[5]), (-1, 1, _FU),
                (0, 1, _FP[3]), (-1, 1, _FP[0]), (-1, 0, _FD),
            ),
            odd_attach=(-1, 1, _FP[1]),
            extra_doors=((1, "block", 8), (4, "block", 5)),
        ),
        CorridorShape(
            pair=(5, 4),
            private=(
                (1, 0, _FP[0]), (2, 0, _FP[3]), (1, 0, _FU),
                (1, 0, _FP[1]), (1, 1, _FP[4]), (0, 0, _FD),
            ),
            odd_attach=(1, 1, _FP[5]),
            extra_doors=((1, "block", 5), (4, "block", 2)),
        ),
    )
    return EmulationFamily(
        target="3.3.3.3.6",
        basis_i=(2, -3),
        basis_j=(-1, -2),
        even_offset=(0, 0),
        odd_offset=(0, -2),
        ring=ring,
        ring_pairs=((8, 7), (2, 1), (5, 4)),
        ring_edges=ring_edges,
        block=block,
        block_entrances=(9, 6, 3),
        block_edges=block_edges,
        corridors=corridors,
        corridor_edges=(
            ("a", "b"), ("a", 0), ("a", 3),
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, "b"), (2, "e"),
        ),
        canonical_anchors=((0, 0), (0, -1), (0, -1), (0, -1), (0, 0)),
    )


_FAMILIES = {
    "4.6.12": _kisrhombille_family(),
    "3.3.3.3.6": _floret_family(),
}


def hex_targets() -> tuple[str, ...]:
    """Canonical names of the lattices with an emulation family."""
    return tuple(sorted(_FAMILIES))


def hex_family(target: str) -> EmulationFamily:
    """The emulation family for `target` (canonical name or alias)."""
    canonical = builtin_lattice(target).name
    if canonical not in _FAMILIES:
        valid = ", ".join(hex_targets())
        raise ValueError(f"no emulation family for {target!r}; have: {valid}")
    return _FAMILIES[canonical]
