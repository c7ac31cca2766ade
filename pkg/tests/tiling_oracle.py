"""Independent geometric check data for the built-in lattice tables.

Each built-in lattice is the face-adjacency graph of a periodic tessellation.
This module rebuilds patches of those tessellations as explicit polygons,
one polygon per (cell, face), and derives adjacency purely from shared
polygon edges.  The lattice adjacency-rule tables are validated against
this construction instead of being trusted.
"""

import math

SQRT3 = 3.0 ** 0.5


def _ngon(n, radius, theta0):
    return [
        (
            radius * math.cos(math.radians(theta0 + 360.0 * k / n)),
            radius * math.sin(math.radians(theta0 + 360.0 * k / n)),
        )
        for k in range(n)
    ]


def _rotated(points, deg):
    c, s = math.cos(math.radians(deg)), math.sin(math.radians(deg))
    return [(x * c - y * s, x * s + y * c) for x, y in points]


def _at(points, center):
    cx, cy = center
    return [(x + cx, y + cy) for x, y in points]


_SQ = [(0.5, 0.5), (-0.5, 0.5), (-0.5, -0.5), (0.5, -0.5)]
_R12 = 1.0 / (2.0 * math.sin(math.pi / 12.0))
_R8 = 1.0 / (2.0 * math.sin(math.pi / 8.0))
_H3 = 1.0 / SQRT3        # circumradius of a unit triangle
_A3 = 1.0 / (2.0 * SQRT3)  # inradius of a unit triangle


def _hex_cell(scale):
    return (scale, 0.0), (scale / 2.0, scale * SQRT3 / 2.0)


def _centers(t1, t2):
    c3 = ((t1[0] + t2[0]) / 3.0, (t1[1] + t2[1]) / 3.0)
    return c3, (2.0 * c3[0], 2.0 * c3[1])


def _three_squares(t1, t2):
    """Unit squares between cell origins (0,0)-(1,1), (0,0)-(0,1), (0,0)-(1,0)."""
    return [
        _at(_rotated(_SQ, 30), ((t1[0] + t2[0]) / 2.0, (t1[1] + t2[1]) / 2.0)),
        _at(_rotated(_SQ, 60), (t2[0] / 2.0, t2[1] / 2.0)),
        _at(_SQ, (t1[0] / 2.0, t1[1] / 2.0)),
    ]


def cell_polygons(name):
    """((t1, t2), [face polygons]) of the primal tessellation, unit edges."""
    if name == "square":
        return ((1.0, 0.0), (0.0, 1.0)), [[(0, 0), (1, 0), (1, 1), (0, 1)]]

    if name == "triangular":
        return _hex_cell(SQRT3), [_ngon(6, 1.0, 30)]

    if name == "hexagonal":
        t1, t2 = _hex_cell(1.0)
        up = [(0.0, 0.0), (1.0, 0.0), (0.5, SQRT3 / 2.0)]
        down = [(1.0, 0.0), (1.5, SQRT3 / 2.0), (0.5, SQRT3 / 2.0)]
        return (t1, t2), [up, down]

    if name == "3.6.3.6":
        t1, t2 = _hex_cell(2.0)
        up = [(1.0, 0.0), (1.5, SQRT3 / 2.0), (0.5, SQRT3 / 2.0)]
        down = [(1.5, SQRT3 / 2.0), (2.5, SQRT3 / 2.0), (2.0, SQRT3)]
        return (t1, t2), [_ngon(6, 1.0, 0), up, down]

    if name == "4.8.8":
        d = 1.0 + 2.0 ** 0.5
        square = _at(_rotated(_SQ, 45), (d / 2.0, d / 2.0))
        return ((d, 0.0), (0.0, d)), [_ngon(8, _R8, 22.5), square]

    if name == "3.12.12":
        t1, t2 = _hex_cell(2.0 + SQRT3)
        c3, c6 = _centers(t1, t2)
        up = _at([(0.0, -_H3), (0.5, _A3), (-0.5, _A3)], c3)
        down = _at([(0.0, _H3), (0.5, -_A3), (-0.5, -_A3)], c6)
        return (t1, t2), [_ngon(12, _R12, 15), up, down]

    if name == "4.6.12":
        t1, t2 = _hex_cell(3.0 + SQRT3)
        c3, c6 = _centers(t1, t2)
        return (t1, t2), [
            _ngon(12, _R12, 15),
            _at(_ngon(6, 1.0, 0), c3),
            _at(_ngon(6, 1.0, 0), c6),
        ] + _three_squares(t1, t2)

    if name == "3.4.6.4":
        t1, t2 = _hex_cell(1.0 + SQRT3)
        c3, c6 = _centers(t1, t2)
        up = _at([(-0.5, -_A3), (0.5, -_A3), (0.0, _H3)], c3)
        down = _at([(-0.5, _A3), (0.5, _A3), (0.0, -_H3)], c6)
        return (t1, t2), [
            _ngon(6, 1.0, 30),
            up,
            down,
        ] + _three_squares(t1, t2)

    if name == "3.3.4.3.4":
        h = SQRT3 / 2.0
        psi = (2.0 + SQRT3) / 2.0
        polys = [
            [(0, 0), (1, 0), (1, 1), (0, 1)],
            [(0.0, 0.0), (-h, -0.5), (0.5 - h, -0.5 - h), (0.5, -h)],
            [(0.0, 0.0), (0.0, 1.0), (-h, 0.5)],
            [(0.0, 0.0), (-h, 0.5), (-h, -0.5)],
            [(0.0, 0.0), (0.5, -h), (1.0, 0.0)],
            [(0.5, -h), (1.0, 0.0), (1.5, -h)],
        ]
        return ((psi, 0.5), (-0.5, psi)), polys

    if name == "3.3.3.4.4":
        top = 1.0 + SQRT3 / 2.0
        polys = [
            [(0, 0), (1, 0), (1, 1), (0, 1)],
            [(0.0, 1.0), (1.0, 1.0), (0.5, top)],
            [(1.0, 1.0), (1.5, top), (0.5, top)],
        ]
        return ((1.0, 0.0), (0.5, top)), polys

    if name == "3.3.3.3.6":
        t1, t2 = (2.0, SQRT3), (-0.5, 1.5 * SQRT3)
        v = _ngon(6, 1.0, 0)
        petals = [
            [v[k], v[(k + 1) % 6], (v[k][0] + v[(k + 1) % 6][0], v[k][1] + v[(k + 1) % 6][1])]
            for k in range(6)
        ]
        up = [v[1], (0.0, SQRT3), (1.0, SQRT3)]
        down = [(1.5, 1.5 * SQRT3), (1.0, 2.0 * SQRT3), (0.5, 1.5 * SQRT3)]
        return (t1, t2), [v] + petals + [up, down]

    raise ValueError(f"no oracle geometry for {name!r}")


def _key(p):
    return (round(p[0], 4), round(p[1], 4))


def oracle_patch(name, ni, nj):
    """(faces, adjacency) of an ni x nj patch, from polygon geometry alone.

    faces: set of (cell_i, cell_j, face) labels; adjacency: set of frozenset
    label pairs, one per shared polygon edge.  Raises if any segment would be
    shared by three or more faces (which would mean broken geometry).
    """
    (t1, t2), polys = cell_polygons(name)
    owners = {}
    for i in range(ni):
        for j in range(nj):
            dx, dy = i * t1[0] + j * t2[0], i * t1[1] + j * t2[1]
            for f, poly in enumerate(polys):
                pts = [_key((x + dx, y + dy)) for x, y in poly]
                for k in range(len(pts)):
                    seg = tuple(sorted((pts[k], pts[(k + 1) % len(pts)])))
                    owners.setdefault(seg, []).append((i, j, f))
    adjacency = set()
    for seg, faces in owners.items():
        if len(faces) > 2:
            raise AssertionError(f"{name}: segment {seg} borders {len(faces)} faces")
        if len(faces) == 2:
            adjacency.add(frozenset(faces))
    all_faces = {
        (i, j, f) for i in range(ni) for j in range(nj) for f in range(len(polys))
    }
    return all_faces, adjacency
