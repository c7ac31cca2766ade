"""Periodic lattices (tessellation duals), augmented square grids, and the
finite grid graphs induced from them.

Each built-in lattice is a static table: two translation vectors, a list of
face centroids for one fundamental cell, and adjacency rules
(face_a, face_b, (di, dj)) meaning face_a of cell (i, j) neighbors face_b of
cell (i+di, j+dj).  Stored rules include both directions of every adjacency.
The tables are validated against independently constructed tessellation
geometry in the test suite rather than trusted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Union

from .graphs import MultiGraph

Vec = tuple[float, float]
Rule = tuple[int, int, tuple[int, int]]

SQRT3 = 3.0 ** 0.5


class FaceCoord(NamedTuple):
    """One vertex of a lattice: face `face` of fundamental cell (cell_i, cell_j)."""

    cell_i: int
    cell_j: int
    face: int


@dataclass(frozen=True)
class LatticeSpec:
    name: str
    translations: tuple[Vec, Vec]
    faces_per_cell: int
    face_positions: tuple[Vec, ...]
    adjacency_rules: tuple[Rule, ...]  # closed under reversal, deduplicated

    def validate(self) -> None:
        """Check structural invariants; raises ValueError on violation."""
        (ax, ay), (bx, by) = self.translations
        if abs(ax * by - ay * bx) < 1e-9:
            raise ValueError(f"{self.name}: translations are linearly dependent")
        if self.faces_per_cell < 1:
            raise ValueError(f"{self.name}: faces_per_cell must be >= 1")
        if len(self.face_positions) != self.faces_per_cell:
            raise ValueError(f"{self.name}: need one position per face")
        seen = set()
        for rule in self.adjacency_rules:
            a, b, (di, dj) = rule
            if not (0 <= a < self.faces_per_cell and 0 <= b < self.faces_per_cell):
                raise ValueError(f"{self.name}: rule {rule} names an unknown face")
            if a == b and di == 0 and dj == 0:
                raise ValueError(f"{self.name}: rule {rule} is a self-loop")
            if rule in seen:
                raise ValueError(f"{self.name}: duplicate rule {rule}")
            seen.add(rule)
        for a, b, (di, dj) in self.adjacency_rules:
            if (b, a, (-di, -dj)) not in seen:
                raise ValueError(
                    f"{self.name}: rule {(a, b, (di, dj))} lacks its reverse"
                )

    def position(self, v: FaceCoord) -> Vec:
        """Plane coordinates of a lattice vertex (for rendering)."""
        (ax, ay), (bx, by) = self.translations
        fx, fy = self.face_positions[v.face]
        return (v.cell_i * ax + v.cell_j * bx + fx, v.cell_i * ay + v.cell_j * by + fy)


def _closure(rules: Iterable[Rule]) -> tuple[Rule, ...]:
    """Symmetric closure of adjacency rules, deduplicated and sorted."""
    out = set()
    for a, b, (di, dj) in rules:
        out.add((a, b, (di, dj)))
        out.add((b, a, (-di, -dj)))
    return tuple(sorted(out))


def _hex_cell(scale: float) -> tuple[Vec, Vec]:
    return ((scale, 0.0), (scale / 2.0, scale * SQRT3 / 2.0))


def _third(t: tuple[Vec, Vec], k: float) -> Vec:
    (ax, ay), (bx, by) = t
    return (k * (ax + bx) / 3.0, k * (ay + by) / 3.0)


def _make(name, translations, positions, rules) -> LatticeSpec:
    spec = LatticeSpec(
        name=name,
        translations=translations,
        faces_per_cell=len(positions),
        face_positions=tuple(positions),
        adjacency_rules=_closure(rules),
    )
    spec.validate()
    return spec


def _build_tables() -> dict[str, LatticeSpec]:
    tables: dict[str, LatticeSpec] = {}

    tables["square"] = _make(
        "square",
        ((1.0, 0.0), (0.0, 1.0)),
        [(0.0, 0.0)],
        [(0, 0, (1, 0)), (0, 0, (0, 1))],
    )

    tri_cell = _hex_cell(1.0)
    tables["triangular"] = _make(
        "triangular",
        tri_cell,
        [(0.0, 0.0)],
        [(0, 0, (1, 0)), (0, 0, (0, 1)), (0, 0, (1, -1))],
    )

    tables["hexagonal"] = _make(
        "hexagonal",
        tri_cell,
        [(0.0, 0.0), _third(tri_cell, 1.0)],
        [(0, 1, (0, 0)), (0, 1, (-1, 0)), (0, 1, (0, -1))],
    )

    # dual of the trihexagonal tessellation: hexagon + up/down triangles
    cell = _hex_cell(2.0)
    tables["3.6.3.6"] = _make(
        "3.6.3.6",
        cell,
        [(0.0, 0.0), _third(cell, 1.0), _third(cell, 2.0)],
        [
            (0, 1, (0, 0)), (0, 1, (-1, 0)), (0, 1, (0, -1)),
            (0, 2, (-1, 0)), (0, 2, (0, -1)), (0, 2, (-1, -1)),
        ],
    )

    # dual of the truncated square tessellation: octagons + tilted squares
    d = 1.0 + 2.0 ** 0.5
    tables["4.8.8"] = _make(
        "4.8.8",
        ((d, 0.0), (0.0, d)),
        [(0.0, 0.0), (d / 2.0, d / 2.0)],
        [
            (0, 0, (1, 0)), (0, 0, (0, 1)),
            (0, 1, (0, 0)), (0, 1, (-1, 0)), (0, 1, (0, -1)), (0, 1, (-1, -1)),
        ],
    )

    # dual of the truncated hexagonal tessellation: 12-gons + 2 triangles
    cell = _hex_cell(2.0 + SQRT3)
    tables["3.12.12"] = _make(
        "3.12.12",
        cell,
        [(0.0, 0.0), _third(cell, 1.0), _third(cell, 2.0)],
        [
            (0, 0, (1, 0)), (0, 0, (0, 1)), (0, 0, (1, -1)),
            (0, 1, (0, 0)), (0, 1, (-1, 0)), (0, 1, (0, -1)),
            (0, 2, (-1, 0)), (0, 2, (0, -1)), (0, 2, (-1, -1)),
        ],
    )

    # dual of the truncated trihexagonal tessellation:
    # 12-gon, two hexagons, three squares per cell
    def _kisrhombille_rules() -> list[Rule]:
        return [
            (0, 1, (0, 0)), (0, 1, (-1, 0)), (0, 1, (0, -1)),
            (0, 2, (-1, 0)), (0, 2, (0, -1)), (0, 2, (-1, -1)),
            (0, 3, (-1, 0)), (0, 3, (0, -1)),
            (0, 4, (0, 0)), (0, 4, (0, -1)),
            (0, 5, (0, 0)), (0, 5, (-1, 0)),
            (1, 3, (0, 0)), (1, 4, (0, 0)), (1, 5, (0, 0)),
            (2, 3, (0, 0)), (2, 4, (1, 0)), (2, 5, (0, 1)),
        ]

    def _mid_positions(t: tuple[Vec, Vec]) -> list[Vec]:
        (ax, ay), (bx, by) = t
        return [
            ((ax + bx) / 2.0, (ay + by) / 2.0),  # between cells (0,0) and (1,1)
            (bx / 2.0, by / 2.0),                # between cells (0,0) and (0,1)
            (ax / 2.0, ay / 2.0),                # between cells (0,0) and (1,0)
        ]

    cell = _hex_cell(3.0 + SQRT3)
    tables["4.6.12"] = _make(
        "4.6.12",
        cell,
        [(0.0, 0.0), _third(cell, 1.0), _third(cell, 2.0)] + _mid_positions(cell),
        _kisrhombille_rules(),
    )

    # dual of the rhombitrihexagonal tessellation: hexagon, two triangles,
    # three squares; same combinatorial frame minus hexagon-triangle contacts
    cell = _hex_cell(1.0 + SQRT3)
    tables["3.4.6.4"] = _make(
        "3.4.6.4",
        cell,
        [(0.0, 0.0), _third(cell, 1.0), _third(cell, 2.0)] + _mid_positions(cell),
        [r for r in _kisrhombille_rules() if r[1] > 2 or r[0] > 0],
    )

    # dual of the snub square tessellation: two square orientations + 4 triangles
    t1 = ((SQRT3 + 1.0) / 2.0 + 0.5, 0.5)
    t2 = (-0.5, (SQRT3 + 1.0) / 2.0 + 0.5)
    tables["3.3.4.3.4"] = _make(
        "3.3.4.3.4",
        (t1, t2),
        [
            (0.5, 0.5),                    # axis-aligned square
            (-0.183, -0.683),              # tilted square
            (-0.289, 0.5),                 # triangle west of the axis square
            (-0.577, 0.0),                 # triangle pointing east
            (0.5, -0.289),                 # triangle south of the axis square
            (1.0, -0.577),                 # triangle pointing up
        ],
        [
            (0, 2, (0, 0)), (0, 4, (0, 0)), (0, 3, (1, 0)), (0, 5, (0, 1)),
            (1, 3, (0, 0)), (1, 4, (0, 0)), (1, 2, (0, -1)), (1, 5, (-1, 0)),
            (2, 3, (0, 0)), (4, 5, (0, 0)),
        ],
    )

    # dual of the elongated triangular tessellation: square + 2 triangles
    tables["3.3.3.4.4"] = _make(
        "3.3.3.4.4",
        ((1.0, 0.0), (0.5, 1.0 + SQRT3 / 2.0)),
        [(0.5, 0.5), (0.5, 1.0 + SQRT3 / 6.0), (1.0, 1.0 + SQRT3 / 3.0)],
        [
            (0, 0, (1, 0)),
            (0, 1, (0, 0)), (0, 2, (0, -1)),
            (1, 2, (0, 0)), (1, 2, (-1, 0)),
        ],
    )

    # dual of the snub trihexagonal tessellation: hexagon + 6 petal triangles
    # (faces 1..6, outward apex at angle 30 + 60k) + 2 free triangles
    t1 = (2.0, SQRT3)
    t2 = (-0.5, 1.5 * SQRT3)
    r = 2.0 * SQRT3 / 3.0
    petal_pos = [
        (r * math.cos(math.radians(30 + 60 * k)), r * math.sin(math.radians(30 + 60 * k)))
        for k in range(6)
    ]
    tables["3.3.3.3.6"] = _make(
        "3.3.3.3.6",
        (t1, t2),
        [(0.0, 0.0)]
        + petal_pos
        + [(0.5, (t1[1] + t2[1]) / 3.0), (1.0, 2.0 * (t1[1] + t2[1]) / 3.0)],
        [
            (0, 1, (0, 0)), (0, 2, (0, 0)), (0, 3, (0, 0)),
            (0, 4, (0, 0)), (0, 5, (0, 0)), (0, 6, (0, 0)),
            (1, 4, (1, 0)), (2, 5, (0, 1)), (3, 6, (-1, 1)),
            (7, 2, (0, 0)), (7, 4, (1, 0)), (7, 6, (0, 1)),
            (8, 1, (0, 1)), (8, 3, (1, 0)), (8, 5, (1, 1)),
        ],
    )

    return tables


_TABLES = _build_tables()

ALIASES = {
    "rhombille": "3.6.3.6",
    "tetrakis": "4.8.8",
    "triakis": "3.12.12",
    "kisrhombille": "4.6.12",
    "deltoidal": "3.4.6.4",
    "cairo": "3.3.4.3.4",
    "prismatic": "3.3.3.4.4",
    "floret": "3.3.3.3.6",
}

LATTICE_NAMES = tuple(sorted(_TABLES))


def builtin_lattice(name: str) -> LatticeSpec:
    """Look up a built-in lattice by canonical name or common alias."""
    canonical = ALIASES.get(name, name)
    if canonical not in _TABLES:
        valid = ", ".join(list(LATTICE_NAMES) + sorted(ALIASES))
        raise ValueError(f"unknown lattice {name!r}; valid names: {valid}")
    return _TABLES[canonical]


def neighbors(spec: LatticeSpec, v: FaceCoord) -> list[FaceCoord]:
    """All parent-lattice neighbors of v, sorted by (cell offset, face)."""
    v = FaceCoord(*v)
    if not 0 <= v.face < spec.faces_per_cell:
        raise ValueError(f"face index {v.face} out of range for {spec.name}")
    out = []
    for a, b, (di, dj) in spec.adjacency_rules:
        if a == v.face:
            out.append((di, dj, b))
    return [FaceCoord(v.cell_i + di, v.cell_j + dj, b) for di, dj, b in sorted(out)]


def window(spec: LatticeSpec, ni: int, nj: int, origin: tuple[int, int] = (0, 0)):
    """All FaceCoords of an ni x nj block of cells; size = ni*nj*faces_per_cell."""
    if ni < 1 or nj < 1:
        raise ValueError(f"window must be non-empty, got {ni}x{nj}")
    oi, oj = origin
    return {
        FaceCoord(oi + i, oj + j, f)
        for i in range(ni)
        for j in range(nj)
        for f in range(spec.faces_per_cell)
    }


# -- augmented square grids ---------------------------------------------------

DIAG_NONE = "none"
DIAG_NE = "diag_NE"  # bottom-left to top-right
DIAG_NW = "diag_NW"  # bottom-right to top-left
DIAG_BOTH = "both"

_DIAG_VALUES = (DIAG_NONE, DIAG_NE, DIAG_NW, DIAG_BOTH)

ASSIGNMENT_RULES = ("checkerboard", "box_pleat", "powers_of_10")


def _is_power_of_10(n: int) -> bool:
    if n < 1:
        return False
    while n % 10 == 0:
        n //= 10
    return n == 1


@dataclass(frozen=True)
class AugmentedAssignment:
    """Per-pixel diagonal choices over a rectangular pixel window.

    The window is (x0, y0, nx, ny): pixels x0..x0+nx-1 by y0..y0+ny-1;
    grid vertices are the pixel corners x0..x0+nx by y0..y0+ny.
    """

    window: tuple[int, int, int, int]
    rule: str | None = None
    constant: str | None = None
    table: tuple[tuple[int, int, str], ...] | None = None

    def __post_init__(self):
        x0, y0, nx, ny = self.window
        if nx < 1 or ny < 1:
            raise ValueError(f"pixel window must be non-empty, got {nx}x{ny}")
        given = sum(x is not None for x in (self.rule, self.constant, self.table))
        if given != 1:
            raise ValueError("exactly one of rule/constant/table is required")
        if self.rule is not None and self.rule not in ASSIGNMENT_RULES:
            raise ValueError(
                f"unknown rule {self.rule!r}; valid: {', '.join(ASSIGNMENT_RULES)}"
            )
        if self.constant is not None and self.constant not in _DIAG_VALUES:
            raise ValueError(f"bad diagonal value {self.constant!r}")
        if self.table is not None:
            covered = {(x, y) for x, y, _ in self.table}
            for x, y, val in self.table:
                if val not in _DIAG_VALUES:
                    raise ValueError(f"bad diagonal value {val!r} at pixel {(x, y)}")
            need = {
                (x, y)
                for x in range(x0, x0 + nx)
                for y in range(y0, y0 + ny)
            }
            missing = need - covered
            if missing:
                raise ValueError(f"table leaves pixels unassigned: {sorted(missing)[:4]}")

    def pixel_in_window(self, x: int, y: int) -> bool:
        x0, y0, nx, ny = self.window
        return x0 <= x < x0 + nx and y0 <= y < y0 + ny

    def vertex_in_window(self, x: int, y: int) -> bool:
        x0, y0, nx, ny = self.window
        return x0 <= x <= x0 + nx and y0 <= y <= y0 + ny

    def diagonal(self, x: int, y: int) -> str:
        """Diagonal content of pixel (x, y)."""
        if not self.pixel_in_window(x, y):
            raise ValueError(f"pixel {(x, y)} outside assignment window {self.window}")
        if self.constant is not None:
            return self.constant
        if self.rule == "checkerboard":
            return DIAG_NE if (x + y) % 2 == 0 else DIAG_NW
        if self.rule == "box_pleat":
            return DIAG_BOTH if (x + y) % 2 == 0 else DIAG_NONE
        if self.rule == "powers_of_10":
            return DIAG_BOTH if _is_power_of_10(x + y) else DIAG_NONE
        return dict(((x_, y_), v) for x_, y_, v in self.table)[(x, y)]


def king_assignment(window: tuple[int, int, int, int]) -> AugmentedAssignment:
    """Both diagonals in every pixel: the king's-move grid."""
    return AugmentedAssignment(window=window, constant=DIAG_BOTH)


ParentSpec = Union[LatticeSpec, AugmentedAssignment]


@dataclass(frozen=True)
class GridGraph:
    """Finite induced subgraph of a lattice or augmented grid.

    vertices are sorted; edges are derived from the parent at construction
    and never stored independently of it.
    """

    lattice: ParentSpec
    vertices: tuple
    edge_indices: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def vertex_index(self) -> dict:
        return {v: k for k, v in enumerate(self.vertices)}

    def to_multigraph(self) -> MultiGraph:
        g = MultiGraph(self.n)
        for u, v in self.edge_indices:
            g.add_edge(u, v)
        return g

    def positions(self) -> list[Vec]:
        if isinstance(self.lattice, LatticeSpec):
            return [self.lattice.position(v) for v in self.vertices]
        return [(float(x), float(y)) for x, y in self.vertices]

    def edge_vertex_pairs(self) -> list[tuple]:
        return [(self.vertices[u], self.vertices[v]) for u, v in self.edge_indices]


def _induce_lattice(spec: LatticeSpec, vertex_set) -> GridGraph:
    verts = sorted({FaceCoord(*v) for v in vertex_set})
    for v in verts:
        if not 0 <= v.face < spec.faces_per_cell:
            raise ValueError(f"face index {v.face} out of range for {spec.name}")
    index = {v: k for k, v in enumerate(verts)}
    edges = set()
    for v in verts:
        for w in neighbors(spec, v):
            if w in index:
                a, b = index[v], index[w]
                if a != b:
                    edges.add((min(a, b), max(a, b)))
    return GridGraph(spec, tuple(verts), tuple(sorted(edges)))


def _induce_augmented(assign: AugmentedAssignment, vertex_set) -> GridGraph:
    verts = sorted({(int(x), int(y)) for x, y in vertex_set})
    for x, y in verts:
        if not assign.vertex_in_window(x, y):
            raise ValueError(
                f"vertex {(x, y)} outside assignment window {assign.window}"
            )
    index = {v: k for k, v in enumerate(verts)}
    edges = set()
    for x, y in verts:
        for dx, dy in ((1, 0), (0, 1)):
            w = (x + dx, y + dy)
            if w in index:
                edges.add((index[(x, y)], index[w]))
    x0, y0, nx, ny = assign.window
    for px in range(x0, x0 + nx):
        for py in range(y0, y0 + ny):
            diag = assign.diagonal(px, py)
            if diag in (DIAG_NE, DIAG_BOTH):
                a, b = (px, py), (px + 1, py + 1)
                if a in index and b in index:
                    edges.add((index[a], index[b]))
            if diag in (DIAG_NW, DIAG_BOTH):
                a, b = (px + 1, py), (px, py + 1)
                if a in index and b in index:
                    e = (index[a], index[b])
                    edges.add((min(e), max(e)))
    return GridGraph(assign, tuple(verts), tuple(sorted(edges)))


def induce(spec: ParentSpec, vertex_set) -> GridGraph:
    """Grid graph induced by a vertex subset of the parent lattice."""
    if isinstance(spec, LatticeSpec):
        return _induce_lattice(spec, vertex_set)
    if isinstance(spec, AugmentedAssignment):
        return _induce_augmented(spec, vertex_set)
    raise TypeError(f"cannot induce from {type(spec).__name__}")


def _parent_neighbors(spec: ParentSpec, v) -> list:
    if isinstance(spec, LatticeSpec):
        return list(neighbors(spec, v))
    x, y = v

    def _enabled(px: int, py: int, kind: str) -> bool:
        return spec.pixel_in_window(px, py) and spec.diagonal(px, py) in (
            kind,
            DIAG_BOTH,
        )

    out = [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)]
    if _enabled(x, y, DIAG_NE):
        out.append((x + 1, y + 1))
    if _enabled(x - 1, y - 1, DIAG_NE):
        out.append((x - 1, y - 1))
    if _enabled(x - 1, y, DIAG_NW):
        out.append((x - 1, y + 1))
    if _enabled(x, y - 1, DIAG_NW):
        out.append((x + 1, y - 1))
    return sorted(out)


def is_thin(spec: ParentSpec, vertex_set) -> bool:
    """True iff every selected vertex has a parent neighbor outside the set."""
    if isinstance(spec, LatticeSpec):
        sel = {FaceCoord(*v) for v in vertex_set}
    else:
        sel = {(int(x), int(y)) for x, y in vertex_set}
    for v in sel:
        if isinstance(spec, AugmentedAssignment):
            nbrs = [w for w in _parent_neighbors(spec, v) if spec.vertex_in_window(*w)]
        else:
            nbrs = _parent_neighbors(spec, v)
        if all(w in sel for w in nbrs):
            return False
    return True
