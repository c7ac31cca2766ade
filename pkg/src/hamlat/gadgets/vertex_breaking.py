"""Vertex gadget designs for the vertex-breaking reductions.

Each design is a finite induced patch of its target lattice together with
the wire attachment pairs on its boundary.  A breakable design realizes
exactly two spanning path-cover behaviors: the broken state, where the two
rails of every wire pair up through the patch (each wire makes a U-turn),
and the unbroken state, where strands merge the wires in rotational order
around the patch.  An unbreakable design realizes only the rotational
state, which is how fused edge gadgets emulate a rigid low-degree vertex.

The two eight-face designs are single induced face rings: every ring face
is a port, so the achievable covers are exactly the ring's two perfect
matchings, which are precisely the U-turn and rotational pairings.  A
diameter chord is harmless because using it would strand two odd arcs.
The 3.3.4.3.4 design is larger: that lattice has no eight-face ring whose
faces all keep a free outside neighbor for rail attachment, so its patch
is a 24-face region, fourfold-symmetric around a tilted square, found by
exhaustive search over symmetric patches; it admits exactly two covers.
Every port keeps at least one lattice neighbor outside the patch, so
wire rails can attach without touching the rest of the gadget.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..lattice import LatticeSpec, builtin_lattice
from . import GadgetSpec
from .families import _shift as shift

# targets whose hardness route goes through vertex breaking
TRVB_TARGETS = ("3.3.3.4.4", "3.3.4.3.4", "3.4.6.4")


@dataclass(frozen=True)
class VertexDesign:
    """Anchor-relative geometry of one vertex gadget."""

    target: str
    breakable: bool
    vertices: tuple  # (i, j, face) triples, anchor-relative
    wires: tuple  # per wire: its two port coordinates, planar cyclic order

    @property
    def lattice(self) -> LatticeSpec:
        return builtin_lattice(self.target)

    def broken_pattern(self, base: tuple[int, int] = (0, 0)) -> tuple:
        """Port pairing of the broken state: each wire's rails pair up."""
        return tuple(shift(w, base) for w in self.wires)

    def unbroken_pattern(self, base: tuple[int, int] = (0, 0)) -> tuple:
        """Port pairing of the unbroken state: wires merge rotationally."""
        k = len(self.wires)
        return tuple(
            shift((self.wires[m][1], self.wires[(m + 1) % k][0]), base)
            for m in range(k)
        )

    def gadget(self, i: int = 0, j: int = 0, name: Optional[str] = None) -> GadgetSpec:
        """The design instantiated with its anchor at lattice cell (i, j)."""
        claims = [("unbroken", self.unbroken_pattern((i, j)))]
        if self.breakable:
            claims.append(("broken", self.broken_pattern((i, j))))
        return GadgetSpec(
            name=name or f"dual-{self.target} vertex ({i},{j})",
            lattice=self.lattice,
            vertices=shift(self.vertices, (i, j)),
            kind="trvb_vertex",
            ports={"pairs": tuple(shift(w, (i, j)) for w in self.wires)},
            claimed_states=tuple(claims),
        )

    def canonical_gadget(self) -> GadgetSpec:
        """The frozen catalog instance, anchored at the origin."""
        tag = "vertex" if self.breakable else "degree-3 vertex"
        return self.gadget(0, 0, name=f"dual-{self.target} {tag}")


# face indices of the 3.4.6.4 lattice: hexagon, two triangles, three squares
_DH = 0
_DS3, _DS4, _DS5 = 3, 4, 5

# face indices of the 3.3.3.4.4 lattice: square, two triangle rows
_PS, _PT1, _PT2 = 0, 1, 2


def _deltoidal_breakable() -> VertexDesign:
    """Eight-face ring of four hexagons alternating four squares."""
    h00, h10, h11, h01 = (0, 0, _DH), (1, 0, _DH), (1, 1, _DH), (0, 1, _DH)
    ring_pairs = (
        (h00, (0, 0, _DS5)),  # square joining h00 and h10
        (h10, (1, 0, _DS4)),  # square joining h10 and h11
        (h11, (0, 1, _DS5)),  # square joining h11 and h01
        (h01, (0, 0, _DS4)),  # square joining h01 and h00
    )
    return VertexDesign(
        target="3.4.6.4",
        breakable=True,
        vertices=tuple(v for pair in ring_pairs for v in pair),
        wires=ring_pairs,
    )


def _deltoidal_degree3() -> VertexDesign:
    """Twelve-face ring of six hexagons circling a skipped center hexagon.

    The two ring faces between consecutive wire pairs have no other patch
    neighbors, so their edges are forced and exactly one cover survives:
    the rotational merge.  Three fused edge gadgets behave the same way,
    which is what lets wires emulate an unbreakable degree-3 vertex.
    """
    ring = (
        (2, 1, _DH), (2, 0, _DS4), (2, 0, _DH), (1, 0, _DS5),
        (1, 0, _DH), (0, 0, _DS3), (0, 1, _DH), (0, 1, _DS4),
        (0, 2, _DH), (0, 2, _DS5), (1, 2, _DH), (1, 1, _DS3),
    )
    return VertexDesign(
        target="3.4.6.4",
        breakable=False,
        vertices=ring,
        wires=((ring[0], ring[1]), (ring[4], ring[5]), (ring[8], ring[9])),
    )


def _prismatic_breakable() -> VertexDesign:
    """Eight-face lens ring: two squares joined by triangle arcs.

    The squares are also directly adjacent; that diameter chord cannot be
    used by any cover because it would leave two three-face odd arcs.
    """
    ring = (
        (0, 1, _PS), (0, 1, _PT1), (0, 1, _PT2), (1, 1, _PT1),
        (1, 1, _PS), (1, 0, _PT2), (1, 0, _PT1), (0, 0, _PT2),
    )
    return VertexDesign(
        target="3.3.3.4.4",
        breakable=True,
        vertices=ring,
        wires=(
            (ring[0], ring[1]), (ring[2], ring[3]),
            (ring[4], ring[5]), (ring[6], ring[7]),
        ),
    )


def _cairo_breakable() -> VertexDesign:
    """24-face patch, fourfold-symmetric around the tilted square (1,1).

    Wires attach at triangle pairs on the east, north, west, and south
    flanks.  The patch admits exactly two path covers, one per state.
    """
    vertices = (
        (0, 0, 0), (0, 0, 2), (0, 0, 4), (0, 0, 5),
        (0, 1, 0), (0, 1, 1), (0, 1, 2), (0, 1, 3), (0, 1, 4),
        (0, 2, 5),
        (1, 0, 0), (1, 0, 1), (1, 0, 3), (1, 0, 4),
        (1, 1, 0), (1, 1, 2), (1, 1, 5),
        (1, 2, 1), (1, 2, 4), (1, 2, 5),
        (2, 0, 2), (2, 0, 3),
        (2, 1, 1), (2, 1, 3),
    )
    wires = (
        ((1, 1, 5), (2, 1, 3)),  # east
        ((1, 1, 2), (0, 2, 5)),  # north
        ((0, 1, 4), (0, 0, 2)),  # west
        ((1, 0, 3), (1, 0, 4)),  # south
    )
    return VertexDesign(
        target="3.3.4.3.4", breakable=True, vertices=vertices, wires=wires
    )


_BREAKABLE = {
    "3.4.6.4": _deltoidal_breakable(),
    "3.3.3.4.4": _prismatic_breakable(),
    "3.3.4.3.4": _cairo_breakable(),
}

_UNBREAKABLE = {
    "3.4.6.4": _deltoidal_degree3(),
}


def vertex_design(target: str, degree: int = 4) -> VertexDesign:
    """The vertex design for `target`: degree 4 breakable, degree 3 emulated."""
    canonical = builtin_lattice(target).name
    table = {4: _BREAKABLE, 3: _UNBREAKABLE}.get(degree)
    if table is None:
        raise ValueError(f"no designs of degree {degree}; have 3 and 4")
    if canonical not in table:
        valid = ", ".join(sorted(table))
        raise ValueError(
            f"no degree-{degree} vertex design for {target!r}; have: {valid}"
        )
    return table[canonical]
