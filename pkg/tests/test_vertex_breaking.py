"""Vertex-breaking vertex designs and their frozen catalog entries."""

import pytest

from hamlat.gadgets import GadgetSpec, verify, verify_trvb_vertex_gadget
from hamlat.gadgets.store import catalog_entry, format_gadget, gadget_ids, parse_gadget
from hamlat.gadgets.vertex_breaking import TRVB_TARGETS, vertex_design
from hamlat.lattice import induce, window

ALL_DESIGNS = [(t, 4) for t in TRVB_TARGETS] + [("3.4.6.4", 3)]


def canon(pattern):
    """Claim patterns the way GadgetSpec normalizes them: sorted sorted pairs."""
    return tuple(sorted(tuple(sorted(pair)) for pair in pattern))


def test_trvb_targets():
    assert TRVB_TARGETS == ("3.3.3.4.4", "3.3.4.3.4", "3.4.6.4")


@pytest.mark.parametrize(
    "alias,target",
    [("cairo", "3.3.4.3.4"), ("prismatic", "3.3.3.4.4"), ("deltoidal", "3.4.6.4")],
)
def test_vertex_design_resolves_aliases(alias, target):
    assert vertex_design(alias).target == target


def test_vertex_design_rejects_unknown():
    with pytest.raises(ValueError, match="no degree-4 vertex design"):
        vertex_design("4.6.12")
    with pytest.raises(ValueError, match="no degree-3 vertex design"):
        vertex_design("cairo", degree=3)
    with pytest.raises(ValueError, match="no designs of degree 5"):
        vertex_design("cairo", degree=5)


@pytest.mark.parametrize("target,degree", ALL_DESIGNS)
def test_catalog_entries_match_design_constructors(target, degree):
    spec = vertex_design(target, degree).canonical_gadget()
    assert spec.name in gadget_ids()
    assert catalog_entry(spec.name) == spec


@pytest.mark.parametrize("target,degree", ALL_DESIGNS)
def test_wire_count_matches_degree(target, degree):
    design = vertex_design(target, degree)
    assert len(design.wires) == degree
    assert design.breakable == (degree == 4)
    spec = design.canonical_gadget()
    assert spec.kind == "trvb_vertex"
    assert len(spec.port_pairs) == degree


@pytest.mark.parametrize("target,degree", ALL_DESIGNS)
def test_claimed_states_are_uturn_and_rotational(target, degree):
    design = vertex_design(target, degree)
    spec = design.canonical_gadget()
    claimed = dict(spec.claimed_states)
    if design.breakable:
        assert set(claimed) == {"broken", "unbroken"}
        assert claimed["broken"] == canon(design.broken_pattern())
    else:
        assert set(claimed) == {"unbroken"}
    assert claimed["unbroken"] == canon(design.unbroken_pattern())
    # rotational state joins each wire to the next one around the patch
    k = len(design.wires)
    for m in range(k):
        pair = (design.wires[m][1], design.wires[(m + 1) % k][0])
        assert tuple(sorted(pair)) in claimed["unbroken"]


@pytest.mark.parametrize("target,degree", ALL_DESIGNS)
def test_designs_verify_on_both_engines(target, degree):
    design = vertex_design(target, degree)
    for method in ("enumerate", "frontier"):
        report = verify_trvb_vertex_gadget(
            design.gadget(1, 2), node_budget=2_000_000, method=method
        )
        assert report.passed, report.summary()
        assert report.exhaustive


@pytest.mark.parametrize("target,degree", ALL_DESIGNS)
def test_missing_claim_is_rejected(target, degree):
    # hiding an achievable state (or claiming with swapped rails) must fail
    design = vertex_design(target, degree)
    spec = design.canonical_gadget()
    tampered = GadgetSpec(
        name=spec.name,
        lattice=spec.lattice,
        vertices=spec.vertices,
        kind=spec.kind,
        ports={"pairs": spec.port_pairs},
        claimed_states=spec.claimed_states[:1],
    )
    if design.breakable:
        report = verify(tampered)
        assert not report.passed
        assert any(c.name == "patterns" and not c.passed for c in report.checks)
    else:
        (w0, w1, w2) = design.wires
        twisted = ((w0[0], w1[0]), (w0[1], w2[0]), (w1[1], w2[1]))
        report = verify(
            GadgetSpec(
                name=spec.name,
                lattice=spec.lattice,
                vertices=spec.vertices,
                kind=spec.kind,
                ports={"pairs": spec.port_pairs},
                claimed_states=(("unbroken", twisted),),
            )
        )
        assert not report.passed


@pytest.mark.parametrize("target,degree", ALL_DESIGNS)
def test_ports_keep_rail_room(target, degree):
    # wires must be attachable: every port needs a neighbor off the patch
    design = vertex_design(target, degree)
    patch = set(design.gadget(4, 4).vertices)
    ambient = induce(design.lattice, window(design.lattice, 12, 12))
    spare = {v: 0 for v in patch}
    for a, b in ambient.edge_vertex_pairs():
        if a in spare and b not in patch:
            spare[a] += 1
        if b in spare and a not in patch:
            spare[b] += 1
    for wire in design.broken_pattern((4, 4)):
        for port in wire:
            assert spare[port] > 0, port


@pytest.mark.parametrize("target,degree", ALL_DESIGNS)
def test_store_roundtrip_keeps_claims(target, degree):
    spec = vertex_design(target, degree).canonical_gadget()
    again = parse_gadget(format_gadget(spec))
    assert again == spec
    assert again.claimed_states == spec.claimed_states
