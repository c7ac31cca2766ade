"""Gadget catalog and behavioral verifiers for the hardness reductions.

A gadget is a finite induced piece of a target lattice (or of an augmented
grid window) together with declared attachment vertices and, where relevant,
claimed boundary behavior.  Construction validates shape only (group counts,
sizes, membership); every graph-dependent fact — connectivity, port
adjacency, path behavior — is established by exhaustive enumeration in the
verifiers, so a mis-transcribed gadget fails its report rather than hiding
behind constructor checks.  Reports carry explicit witness and counterexample
paths: a failing design points at its own defect.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from ..graphs import MultiGraph, articulation_vertices, is_connected
from ..lattice import (
    DIAG_BOTH,
    DIAG_NE,
    DIAG_NONE,
    DIAG_NW,
    AugmentedAssignment,
    FaceCoord,
    GridGraph,
    LatticeSpec,
    ParentSpec,
    induce,
)
from ..solver import (
    BudgetExceeded,
    cover_pattern,
    enumerate_hamiltonian_paths,
    enumerate_path_covers,
    frontier_cover_patterns,
)

GADGET_KINDS = (
    "edge",
    "odd_vertex",
    "even_vertex",
    "trvb_vertex",
    "connection_case",
    "side_piece",
    "corner_piece",
)

# port roles each kind must declare, in canonical order
_KIND_ROLES = {
    "edge": ("odd_attach", "even_attach"),
    "odd_vertex": ("entrances",),
    "even_vertex": ("entrances",),
    "trvb_vertex": ("pairs",),
    "connection_case": ("ends",),
    "side_piece": ("edge_ports", "connections"),
    "corner_piece": ("connections",),
}

_CLAIM_NAMES = ("broken", "unbroken")

# vertex count above which trvb pattern checks switch to the frontier sweep
_FRONTIER_CUTOVER = 48


def _canon_vertex(parent: ParentSpec, v) -> tuple:
    """Normalize one vertex to the parent's coordinate shape."""
    t = tuple(int(c) for c in v)
    if isinstance(parent, LatticeSpec):
        if len(t) != 3:
            raise ValueError(f"lattice vertex needs 3 coordinates, got {t}")
        return FaceCoord(*t)
    if len(t) != 2:
        raise ValueError(f"grid vertex needs 2 coordinates, got {t}")
    return t


@dataclass(frozen=True)
class GadgetSpec:
    """An induced lattice region with declared ports and behavioral claims."""

    name: str
    lattice: ParentSpec
    vertices: tuple
    kind: str
    ports: tuple
    claimed_states: tuple = ()
    case: Optional[int] = None

    def __post_init__(self):
        if self.kind not in GADGET_KINDS:
            raise ValueError(
                f"unknown gadget kind {self.kind!r}; valid: {', '.join(GADGET_KINDS)}"
            )
        if not isinstance(self.lattice, (LatticeSpec, AugmentedAssignment)):
            raise ValueError("lattice must be a LatticeSpec or AugmentedAssignment")
        verts = [_canon_vertex(self.lattice, v) for v in self.vertices]
        if len(set(verts)) != len(verts):
            raise ValueError(f"gadget {self.name!r} repeats vertices")
        if not verts:
            raise ValueError(f"gadget {self.name!r} has no vertices")
        object.__setattr__(self, "vertices", tuple(sorted(verts)))

        items = self.ports.items() if isinstance(self.ports, dict) else self.ports
        ports = tuple(
            (
                str(role),
                tuple(
                    tuple(_canon_vertex(self.lattice, v) for v in grp)
                    for grp in groups
                ),
            )
            for role, groups in items
        )
        roles = [role for role, _ in ports]
        if sorted(roles) != sorted(_KIND_ROLES[self.kind]):
            raise ValueError(
                f"kind {self.kind!r} wants port roles {_KIND_ROLES[self.kind]}, "
                f"got {tuple(roles)}"
            )
        by_role = dict(ports)
        ports = tuple((role, by_role[role]) for role in _KIND_ROLES[self.kind])
        object.__setattr__(self, "ports", ports)
        vset = set(self.vertices)
        for role, groups in ports:
            for grp in groups:
                for v in grp:
                    if v not in vset:
                        raise ValueError(
                            f"port {role} names {tuple(v)} outside the gadget"
                        )

        claim_items = (
            self.claimed_states.items()
            if isinstance(self.claimed_states, dict)
            else self.claimed_states
        )
        claims = tuple(
            (
                str(nm),
                tuple(
                    sorted(
                        tuple(
                            sorted(
                                (
                                    _canon_vertex(self.lattice, a),
                                    _canon_vertex(self.lattice, b),
                                )
                            )
                        )
                        for a, b in pattern
                    )
                ),
            )
            for nm, pattern in claim_items
        )
        object.__setattr__(self, "claimed_states", tuple(sorted(claims)))
        self._validate_shape()

    def _validate_shape(self) -> None:
        """Kind-specific port/claim shape checks (graph facts stay with verifiers)."""
        kind = self.kind
        if kind != "trvb_vertex" and self.claimed_states:
            raise ValueError(f"kind {kind!r} takes no claimed states")
        if kind != "connection_case" and self.case is not None:
            raise ValueError(f"kind {kind!r} takes no case number")

        if kind == "edge":
            odd = self.groups("odd_attach")
            even = self.groups("even_attach")
            if len(odd) != 1 or len(odd[0]) != 1:
                raise ValueError("edge gadget wants exactly one odd attachment vertex")
            if len(even) != 1 or len(even[0]) != 2 or even[0][0] == even[0][1]:
                raise ValueError(
                    "edge gadget wants two distinct even attachment vertices"
                )
        elif kind in ("odd_vertex", "even_vertex"):
            groups = self.groups("entrances")
            if len(groups) != 3:
                raise ValueError("vertex gadget wants exactly 3 entrance groups")
            low = 2 if kind == "even_vertex" else 1
            for grp in groups:
                if not low <= len(grp) <= 2 or len(set(grp)) != len(grp):
                    raise ValueError(
                        f"entrance group {tuple(map(tuple, grp))} must hold "
                        f"{low}..2 distinct vertices"
                    )
        elif kind == "trvb_vertex":
            pairs = self.groups("pairs")
            if not 2 <= len(pairs) <= 4:
                raise ValueError("trvb vertex gadget wants 2 to 4 port pairs")
            flat = [v for pair in pairs for v in pair]
            if any(len(pair) != 2 for pair in pairs) or len(set(flat)) != len(flat):
                raise ValueError("trvb port pairs must be disjoint 2-vertex groups")
            names = [nm for nm, _ in self.claimed_states]
            if not names or len(set(names)) != len(names) or any(
                nm not in _CLAIM_NAMES for nm in names
            ):
                raise ValueError(
                    "trvb vertex gadget wants distinct claimed states named "
                    "broken/unbroken"
                )
            for nm, pattern in self.claimed_states:
                used = [v for pair in pattern for v in pair]
                if sorted(used) != sorted(flat) or any(a == b for a, b in pattern):
                    raise ValueError(
                        f"claimed state {nm!r} must pair every port exactly once"
                    )
        elif kind == "connection_case":
            if not isinstance(self.lattice, AugmentedAssignment):
                raise ValueError("connection case gadgets live on augmented grids")
            if self.case not in (1, 2, 3):
                raise ValueError(f"connection case must be 1, 2, or 3, got {self.case}")
            ends = self.groups("ends")
            if len(ends) != 2 or any(len(g) != 1 for g in ends) or ends[0] == ends[1]:
                raise ValueError("connection case wants two distinct end vertices")
        else:  # side_piece / corner_piece
            cons = self.groups("connections")
            if len(cons) != 2:
                raise ValueError("piece wants exactly 2 connection groups")
            flat = [v for grp in cons for v in grp]
            if any(not grp for grp in cons) or len(set(flat)) != len(flat):
                raise ValueError("connection groups must be disjoint and non-empty")
            if kind == "side_piece":
                eps = self.groups("edge_ports")
                if not 1 <= len(eps) <= 2 or any(len(g) != 1 for g in eps):
                    raise ValueError("side piece wants 1 or 2 single-vertex edge ports")
                singles = [g[0] for g in eps]
                if len(set(singles)) != len(singles) or set(singles) & set(flat):
                    raise ValueError(
                        "edge ports must be distinct and disjoint from connections"
                    )

    def groups(self, role: str) -> tuple:
        """Port groups declared under `role`."""
        for r, gs in self.ports:
            if r == role:
                return gs
        raise KeyError(role)

    def induced(self) -> GridGraph:
        """The gadget's induced grid graph."""
        return induce(self.lattice, self.vertices)

    @property
    def odd_attach(self) -> tuple:
        return self.groups("odd_attach")[0][0]

    @property
    def even_attach(self) -> tuple:
        return self.groups("even_attach")[0]

    @property
    def entrances(self) -> tuple:
        return self.groups("entrances")

    @property
    def port_pairs(self) -> tuple:
        return self.groups("pairs")


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verified gadget property."""

    name: str
    passed: bool
    exhaustive: bool = True
    witnesses: tuple = ()
    counterexamples: tuple = ()
    absent: bool = False
    detail: str = ""


@dataclass(frozen=True)
class GadgetReport:
    """Per-property verification outcomes for one gadget."""

    gadget: str
    kind: str
    checks: tuple

    def __post_init__(self):
        for c in self.checks:
            if not c.passed and c.exhaustive and not c.counterexamples and not c.absent:
                raise ValueError(
                    f"failed check {c.name!r} lacks a counterexample or absence proof"
                )

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def exhaustive(self) -> bool:
        return all(c.exhaustive for c in self.checks)

    def check(self, name: str) -> CheckResult:
        """The check named `name`; KeyError if the verifier did not run it."""
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def summary(self) -> str:
        """One line per check: PASS/FAIL, name, detail."""
        lines = [f"{self.gadget} [{self.kind}]"]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            extra = "" if c.exhaustive else " (enumeration not exhausted)"
            lines.append(f"  {mark} {c.name}: {c.detail}{extra}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# enumeration plumbing


def _enum_paths(g: MultiGraph, start: int, end: int, limit, node_budget):
    """Hamiltonian paths as index tuples; a blown budget reads as not exhausted."""
    try:
        certs, exhausted = enumerate_hamiltonian_paths(
            g, start, end, limit=limit, node_budget=node_budget
        )
    except BudgetExceeded:
        return (), False
    return tuple(c.sequence for c in certs), exhausted


def _enum_covers(g: MultiGraph, ports, node_budget):
    """Path covers with endpoints exactly at ports; budget reads as not exhausted."""
    try:
        return enumerate_path_covers(g, ports, limit=None, node_budget=node_budget)
    except BudgetExceeded:
        return (), False


def _coord_path(gg: GridGraph, path) -> tuple:
    return tuple(gg.vertices[i] for i in path)


def _coord_cover(gg: GridGraph, cover) -> tuple:
    return tuple(_coord_path(gg, p) for p in cover)


def _pattern_coords(gg: GridGraph, pattern) -> tuple:
    """Render an index-pair pattern as sorted coordinate pairs."""
    return tuple(
        sorted(tuple(sorted(gg.vertices[i] for i in pair)) for pair in pattern)
    )


def _connected_check(g: MultiGraph, gg: GridGraph) -> CheckResult:
    """Connectivity of the induced graph (a disconnected gadget can do nothing)."""
    if is_connected(g):
        return CheckResult("connected", True, detail=f"{g.n} vertices, one component")
    adj = g.simple_adjacency()
    seen: set[int] = set()
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = _component_without(adj, -1, s)
        seen |= comp
        comps.append(len(comp))
    return CheckResult(
        "connected",
        False,
        absent=True,
        detail=f"induced graph splits into {len(comps)} components {sorted(comps)}",
    )


def _component_without(adj, banned: int, start: int) -> set:
    """Vertices reachable from `start` when `banned` is removed."""
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w != banned and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _separation_check(
    name: str, gg: GridGraph, g: MultiGraph, index, src, others, what: str
) -> CheckResult:
    """Find a vertex outside src/others whose removal strands src from others."""
    banned = {index[src]} | {index[x] for x in others}
    adj = g.simple_adjacency()
    for a in articulation_vertices(g):
        if a in banned:
            continue
        comp = _component_without(adj, a, index[src])
        if all(index[x] not in comp for x in others):
            return CheckResult(
                name,
                True,
                witnesses=((gg.vertices[a],),),
                detail=f"removing {tuple(gg.vertices[a])} separates {what}",
            )
    return CheckResult(
        name, False, absent=True, detail=f"no vertex separates {what}"
    )


def _expect_kind(spec: GadgetSpec, kinds) -> None:
    if spec.kind not in kinds:
        raise ValueError(
            f"gadget {spec.name!r} has kind {spec.kind!r}, expected {'/'.join(kinds)}"
        )


def _ports_check(spec: GadgetSpec, gg: GridGraph) -> CheckResult:
    """Port arity (shape-validated) plus the adjacency facts ports promise."""
    edges = {frozenset(e) for e in gg.edge_indices}
    index = gg.vertex_index()
    problems = []
    if spec.kind == "edge":
        x1, x2 = spec.even_attach
        if frozenset((index[x1], index[x2])) not in edges:
            problems.append(
                f"even attachments {tuple(x1)} and {tuple(x2)} are not adjacent"
            )
    elif spec.kind == "even_vertex":
        for k, grp in enumerate(spec.entrances):
            p, q = grp
            if frozenset((index[p], index[q])) not in edges:
                problems.append(f"entrance pair {k} ({tuple(p)}, {tuple(q)}) not adjacent")
    if problems:
        return CheckResult("ports", False, absent=True, detail="; ".join(problems))
    return CheckResult("ports", True, detail="port arity and adjacency hold")


# ---------------------------------------------------------------------------
# verifiers


def verify_edge_gadget(
    spec: GadgetSpec, node_budget: Optional[int] = None
) -> GadgetReport:
    """Check corridor behavior: separation, traverse path, and return path."""
    _expect_kind(spec, ("edge",))
    gg = spec.induced()
    g = gg.to_multigraph()
    index = gg.vertex_index()
    o = spec.odd_attach
    x1, x2 = spec.even_attach
    checks = [_connected_check(g, gg), _ports_check(spec, gg)]

    checks.append(
        _separation_check(
            "cut_vertex", gg, g, index, o, (x1, x2),
            "the odd attachment from the even attachments",
        )
    )

    # traverse: enter at an even attachment, sweep everything, stop at the
    # odd attachment
    witness = None
    exhausted = True
    for s in (x1, x2):
        if s == o:
            continue
        paths, exh = _enum_paths(g, index[s], index[o], 1, node_budget)
        if paths:
            witness = _coord_path(gg, paths[0])
            break
        exhausted = exhausted and exh
    if witness is not None:
        checks.append(
            CheckResult(
                "traverse", True, witnesses=(witness,),
                detail=f"spanning path from {tuple(witness[0])} to the odd attachment",
            )
        )
    else:
        checks.append(
            CheckResult(
                "traverse", False, exhaustive=exhausted, absent=exhausted,
                detail="no spanning path from an even attachment to the odd attachment",
            )
        )

    # return: sweep everything except the odd attachment, even end to even end
    if o in (x1, x2):
        checks.append(
            CheckResult(
                "return", False, absent=True,
                detail="odd attachment coincides with an even attachment",
            )
        )
    else:
        rest = tuple(v for v in spec.vertices if v != o)
        sub = induce(spec.lattice, rest)
        sg = sub.to_multigraph()
        sidx = sub.vertex_index()
        paths, exh = _enum_paths(sg, sidx[x1], sidx[x2], 1, node_budget)
        if paths:
            checks.append(
                CheckResult(
                    "return", True, witnesses=(_coord_path(sub, paths[0]),),
                    detail="spanning path between the even attachments avoiding "
                    "the odd attachment",
                )
            )
        else:
            checks.append(
                CheckResult(
                    "return", False, exhaustive=exh, absent=exh,
                    detail="no spanning path between the even attachments that "
                    "avoids the odd attachment",
                )
            )
    return GadgetReport(spec.name, spec.kind, tuple(checks))


def verify_vertex_gadget(
    spec: GadgetSpec, node_budget: Optional[int] = None
) -> GadgetReport:
    """Check entrance-to-entrance spanning paths (plus pair succession when even)."""
    _expect_kind(spec, ("odd_vertex", "even_vertex"))
    gg = spec.induced()
    g = gg.to_multigraph()
    index = gg.vertex_index()
    groups = spec.entrances
    even = spec.kind == "even_vertex"
    checks = [_connected_check(g, gg), _ports_check(spec, gg)]

    for i, j in ((0, 1), (0, 2), (1, 2)):
        combos = [(a, b) for a in groups[i] for b in groups[j] if a != b]
        if not even:
            witness = None
            exhausted = True
            for a, b in combos:
                paths, exh = _enum_paths(g, index[a], index[b], 1, node_budget)
                if paths:
                    witness = _coord_path(gg, paths[0])
                    break
                exhausted = exhausted and exh
            if witness is not None:
                checks.append(
                    CheckResult(
                        f"path_{i}{j}", True, witnesses=(witness,),
                        detail=f"spanning path between entrances {i} and {j}",
                    )
                )
            else:
                checks.append(
                    CheckResult(
                        f"path_{i}{j}", False, exhaustive=exhausted, absent=exhausted,
                        detail=f"no spanning path between entrances {i} and {j}",
                    )
                )
            continue

        all_paths = []
        exhausted = True
        for a, b in combos:
            paths, exh = _enum_paths(g, index[a], index[b], None, node_budget)
            all_paths.extend(paths)
            exhausted = exhausted and exh
        if all_paths:
            checks.append(
                CheckResult(
                    f"path_{i}{j}", True, exhaustive=exhausted,
                    witnesses=(_coord_path(gg, all_paths[0]),),
                    detail=f"{len(all_paths)} spanning paths between entrances "
                    f"{i} and {j}",
                )
            )
        else:
            checks.append(
                CheckResult(
                    f"path_{i}{j}", False, exhaustive=exhausted, absent=exhausted,
                    detail=f"no spanning path between entrances {i} and {j}",
                )
            )
        bad = []
        for p in all_paths:
            pos = {v: k for k, v in enumerate(p)}
            for grp in groups:
                u, w = index[grp[0]], index[grp[1]]
                if abs(pos[u] - pos[w]) != 1:
                    bad.append(_coord_path(gg, p))
                    break
        checks.append(
            CheckResult(
                f"succession_{i}{j}", not bad, exhaustive=exhausted,
                counterexamples=tuple(bad[:8]),
                detail=(
                    "every spanning path keeps each entrance pair consecutive"
                    if not bad
                    else f"{len(bad)} of {len(all_paths)} spanning paths split "
                    "an entrance pair"
                ),
            )
        )
    return GadgetReport(spec.name, spec.kind, tuple(checks))


def verify_trvb_vertex_gadget(
    spec: GadgetSpec,
    node_budget: Optional[int] = None,
    method: str = "auto",
) -> GadgetReport:
    """Check that achievable port-pairing patterns equal the claimed states."""
    _expect_kind(spec, ("trvb_vertex",))
    gg = spec.induced()
    g = gg.to_multigraph()
    index = gg.vertex_index()
    port_idx = [index[v] for pair in spec.port_pairs for v in pair]
    claimed = {
        frozenset(frozenset((index[a], index[b])) for a, b in pattern): nm
        for nm, pattern in spec.claimed_states
    }
    checks = [_connected_check(g, gg), _ports_check(spec, gg)]

    if method == "auto":
        method = "frontier" if gg.n > _FRONTIER_CUTOVER else "enumerate"
    if method == "frontier":
        achieved = {
            p: None
            for p in frontier_cover_patterns(gg.vertices, gg.edge_indices, port_idx)
        }
        exhausted = True
    elif method == "enumerate":
        covers, exhausted = _enum_covers(g, port_idx, node_budget)
        achieved = {}
        for c in covers:
            achieved.setdefault(cover_pattern(c), c)
    else:
        raise ValueError(f"unknown method {method!r}; use auto, enumerate, or frontier")

    extras = sorted(
        (p for p in achieved if p not in claimed),
        key=lambda p: _pattern_coords(gg, p),
    )
    missing = sorted(
        (p for p in claimed if p not in achieved),
        key=lambda p: _pattern_coords(gg, p),
    )
    witnesses = tuple(
        _coord_cover(gg, achieved[p])
        for p in claimed
        if p in achieved and achieved[p] is not None
    )
    counterexamples = tuple(
        _coord_cover(gg, achieved[p]) if achieved[p] is not None
        else _pattern_coords(gg, p)
        for p in extras
    )
    parts = [f"method={method}"]
    got = sorted(claimed[p] for p in achieved if p in claimed)
    parts.append(f"achieved claimed states: {', '.join(got) if got else 'none'}")
    if extras:
        parts.append(f"{len(extras)} unclaimed patterns achievable")
    if missing:
        parts.append(
            "missing: " + ", ".join(sorted(claimed[p] for p in missing))
        )
    checks.append(
        CheckResult(
            "patterns",
            exhausted and not extras and not missing,
            exhaustive=exhausted,
            witnesses=witnesses,
            counterexamples=counterexamples,
            absent=bool(missing) and exhausted,
            detail="; ".join(parts),
        )
    )
    return GadgetReport(spec.name, spec.kind, tuple(checks))


# junction pixels whose north-east diagonals drive the three connection cases:
# d1/d2 are the outer staircase diagonals, d3 the middle one
_JUNCTION_PIXELS = {"d1": (0, 0), "d2": (1, 1), "d3": (1, 0)}

_CASE_PROFILES = {
    1: {"required": ("d3",), "forbidden": (), "optional": ("d1", "d2"),
        "settings": ((), ("d1",), ("d2",), ("d1", "d2"))},
    2: {"required": ("d1", "d2"), "forbidden": (), "optional": ("d3",),
        "settings": ((), ("d3",))},
    3: {"required": (), "forbidden": ("d3",), "optional": ("d1", "d2"),
        "settings": ((), ("d1",), ("d2",))},
}


def _has_ne(assign: AugmentedAssignment, x: int, y: int) -> bool:
    return assign.diagonal(x, y) in (DIAG_NE, DIAG_BOTH)


def _set_ne(value: str, present: bool) -> str:
    """The diagonal value with its north-east component forced on or off."""
    nw = value in (DIAG_NW, DIAG_BOTH)
    if present:
        return DIAG_BOTH if nw else DIAG_NE
    return DIAG_NW if nw else DIAG_NONE


def _variant_assignment(
    base: AugmentedAssignment, on, off
) -> AugmentedAssignment:
    """Copy of `base` with named junction diagonals forced present/absent."""
    force = {_JUNCTION_PIXELS[d]: True for d in on}
    force.update({_JUNCTION_PIXELS[d]: False for d in off})
    x0, y0, nx, ny = base.window
    rows = []
    for x in range(x0, x0 + nx):
        for y in range(y0, y0 + ny):
            val = base.diagonal(x, y)
            if (x, y) in force:
                val = _set_ne(val, force[(x, y)])
            rows.append((x, y, val))
    return AugmentedAssignment(window=base.window, table=tuple(rows))


def verify_connection_case(
    spec: GadgetSpec, case: int, node_budget: Optional[int] = None
) -> GadgetReport:
    """Check junction separation and through-paths under every optional setting."""
    _expect_kind(spec, ("connection_case",))
    if case not in _CASE_PROFILES:
        raise ValueError(f"connection case must be 1, 2, or 3, got {case}")
    if case != spec.case:
        raise ValueError(
            f"gadget {spec.name!r} declares case {spec.case}, asked to verify {case}"
        )
    base = spec.lattice
    profile = _CASE_PROFILES[case]
    for d in profile["required"]:
        if not _has_ne(base, *_JUNCTION_PIXELS[d]):
            raise ValueError(
                f"assignment inconsistent with case {case}: diagonal {d} missing"
            )
    for d in profile["forbidden"]:
        if _has_ne(base, *_JUNCTION_PIXELS[d]):
            raise ValueError(
                f"assignment inconsistent with case {case}: diagonal {d} present"
            )
    (ea,), (eb,) = spec.groups("ends")
    gg = spec.induced()
    checks = [_connected_check(gg.to_multigraph(), gg), _ports_check(spec, gg)]

    for setting in profile["settings"]:
        label = "+".join(setting) if setting else "none"
        off = tuple(d for d in profile["optional"] if d not in setting)
        assign = _variant_assignment(base, setting, off)
        sub = induce(assign, spec.vertices)
        sg = sub.to_multigraph()
        sidx = sub.vertex_index()
        cut = _separation_check(
            f"cut[{label}]", sub, sg, sidx, ea, (eb,), "the two junction ends"
        )
        checks.append(cut)
        paths, exh = _enum_paths(sg, sidx[ea], sidx[eb], 1, node_budget)
        if paths:
            checks.append(
                CheckResult(
                    f"path[{label}]", True, witnesses=(_coord_path(sub, paths[0]),),
                    detail="through-path spans the junction",
                )
            )
        else:
            checks.append(
                CheckResult(
                    f"path[{label}]", False, exhaustive=exh, absent=exh,
                    detail="no spanning path between the junction ends",
                )
            )
    return GadgetReport(spec.name, spec.kind, tuple(checks))


def verify_piece(
    spec: GadgetSpec, node_budget: Optional[int] = None
) -> GadgetReport:
    """Check port-to-connection spanning paths for every junction ownership."""
    _expect_kind(spec, ("side_piece", "corner_piece"))
    gg = spec.induced()
    checks = [_connected_check(gg.to_multigraph(), gg), _ports_check(spec, gg)]
    cons = spec.groups("connections")
    points = [grp[-1] for grp in cons]
    optionals = [grp[:-1] for grp in cons]
    checks.append(
        CheckResult(
            "connections", True,
            detail="piece meets exactly 2 junctions",
        )
    )

    if spec.kind == "side_piece":
        pairs = [
            (e, pt) for (e,) in spec.groups("edge_ports") for pt in points
        ]
    else:
        pairs = [(points[0], points[1])]

    choices = [(True, False) if opt else (True,) for opt in optionals]
    for keep in itertools.product(*choices):
        label = ",".join("full" if k else "bare" for k in keep)
        dropped = {
            v
            for k, opt in zip(keep, optionals)
            if not k
            for v in opt
        }
        kept = tuple(v for v in spec.vertices if v not in dropped)
        sub = induce(spec.lattice, kept)
        sg = sub.to_multigraph()
        sidx = sub.vertex_index()
        witnesses = []
        failed = None
        exhausted = True
        for a, b in pairs:
            paths, exh = _enum_paths(sg, sidx[a], sidx[b], 1, node_budget)
            exhausted = exhausted and exh
            if paths:
                witnesses.append(_coord_path(sub, paths[0]))
            else:
                failed = (a, b)
                break
        if failed is None:
            checks.append(
                CheckResult(
                    f"paths[{label}]", True, witnesses=tuple(witnesses),
                    detail=f"{len(pairs)} spanning paths found",
                )
            )
        else:
            checks.append(
                CheckResult(
                    f"paths[{label}]", False, exhaustive=exhausted, absent=exhausted,
                    detail=f"no spanning path {tuple(failed[0])} -> {tuple(failed[1])}",
                )
            )
    return GadgetReport(spec.name, spec.kind, tuple(checks))


def verify(spec: GadgetSpec, node_budget: Optional[int] = None) -> GadgetReport:
    """Run the verifier matching the gadget's kind."""
    if spec.kind == "edge":
        return verify_edge_gadget(spec, node_budget)
    if spec.kind in ("odd_vertex", "even_vertex"):
        return verify_vertex_gadget(spec, node_budget)
    if spec.kind == "trvb_vertex":
        return verify_trvb_vertex_gadget(spec, node_budget=node_budget)
    if spec.kind == "connection_case":
        return verify_connection_case(spec, spec.case, node_budget)
    return verify_piece(spec, node_budget)


__all__ = [
    "GADGET_KINDS",
    "GadgetSpec",
    "CheckResult",
    "GadgetReport",
    "verify",
    "verify_edge_gadget",
    "verify_vertex_gadget",
    "verify_trvb_vertex_gadget",
    "verify_connection_case",
    "verify_piece",
    "catalog",
    "catalog_entry",
    "gadget_ids",
    "format_gadget",
    "parse_gadget",
]

from .store import (  # noqa: E402
    catalog,
    catalog_entry,
    format_gadget,
    gadget_ids,
    parse_gadget,
)
