"""Graph file formats: canonical text, bit-exact round-trips, error cases."""

import pytest

from hamlat.graphs import MultiGraph
from hamlat.io import (
    FormatError,
    format_gridgraph,
    format_multigraph,
    parse_gridgraph,
    parse_multigraph,
)
from hamlat.lattice import (
    DIAG_NE,
    DIAG_NONE,
    AugmentedAssignment,
    builtin_lattice,
    induce,
    king_assignment,
    window,
)


def _sample_lattice_graph():
    spec = builtin_lattice("3.6.3.6")
    return induce(spec, window(spec, 2, 2))


def test_gridgraph_roundtrip_lattice():
    g = _sample_lattice_graph()
    text = format_gridgraph(g, {"walk": (0, 1)})
    g2, hl = parse_gridgraph(text)
    assert g2 == g
    assert hl == {"walk": (0, 1)}
    assert format_gridgraph(g2, hl) == text  # bit-exact both ways


def test_gridgraph_roundtrip_augmented_rule():
    asg = AugmentedAssignment(window=(0, 0, 2, 2), rule="checkerboard")
    g = induce(asg, [(x, y) for x in range(3) for y in range(3)])
    text = format_gridgraph(g)
    g2, hl = parse_gridgraph(text)
    assert g2 == g and hl == {}
    assert format_gridgraph(g2) == text


def test_gridgraph_roundtrip_augmented_table():
    table = ((0, 0, DIAG_NE), (1, 0, DIAG_NONE))
    asg = AugmentedAssignment(window=(0, 0, 2, 1), table=table)
    g = induce(asg, [(0, 0), (1, 0), (1, 1), (0, 1)])
    text = format_gridgraph(g)
    g2, _ = parse_gridgraph(text)
    assert g2 == g
    assert format_gridgraph(g2) == text


def test_gridgraph_header_content():
    g = _sample_lattice_graph()
    lines = format_gridgraph(g).split("\n")
    assert lines[0] == "gridgraph v1"
    assert lines[1] == "lattice 3.6.3.6"
    assert lines[2] == "vertices 12"


def test_gridgraph_edges_reinduced():
    """Files carry no edge list; edges come back from the lattice rules."""
    g = _sample_lattice_graph()
    g2, _ = parse_gridgraph(format_gridgraph(g))
    assert g2.edge_indices == g.edge_indices


def test_gridgraph_bad_magic():
    with pytest.raises(FormatError, match="expected 'gridgraph v1'"):
        parse_gridgraph("gridgraph v2\nlattice square\nvertices 0\nend\n")


def test_gridgraph_unknown_lattice():
    with pytest.raises(FormatError, match="unknown lattice"):
        parse_gridgraph("gridgraph v1\nlattice heptagonal\nvertices 0\nend\n")


def test_gridgraph_bad_highlight_index():
    g = _sample_lattice_graph()
    text = format_gridgraph(g).replace("end", "highlight walk 0 99\nend")
    with pytest.raises(FormatError, match="bad vertex index"):
        parse_gridgraph(text)
    with pytest.raises(FormatError, match="bad vertex index"):
        format_gridgraph(g, {"walk": (0, 99)})


def test_gridgraph_duplicate_highlight():
    g = _sample_lattice_graph()
    text = format_gridgraph(g).replace(
        "end", "highlight a 0\nhighlight a 1\nend"
    )
    with pytest.raises(FormatError, match="duplicate highlight"):
        parse_gridgraph(text)


def test_gridgraph_trailing_content():
    g = _sample_lattice_graph()
    with pytest.raises(FormatError, match="trailing"):
        parse_gridgraph(format_gridgraph(g) + "extra\n")


def test_gridgraph_truncated():
    g = _sample_lattice_graph()
    text = "\n".join(format_gridgraph(g).split("\n")[:4])
    with pytest.raises(FormatError):
        parse_gridgraph(text)


def test_multigraph_roundtrip():
    g = MultiGraph(4)
    g.add_edge(0, 1)
    g.add_edge(0, 1)  # parallel
    g.add_edge(2, 2)  # loop
    g.add_edge(1, 3)
    text = format_multigraph(g)
    g2 = parse_multigraph(text)
    assert g2.n == 4
    assert sorted(tuple(sorted(e)) for e in g2.edges()) == [
        (0, 1), (0, 1), (1, 3), (2, 2),
    ]
    assert format_multigraph(g2) == text


def test_multigraph_canonical_text():
    g = MultiGraph(2)
    g.add_edge(1, 0)
    assert format_multigraph(g) == "multigraph v1\nvertices 2\nedges 1\n0 1\nend\n"


def test_multigraph_rejects_unsorted_edges():
    with pytest.raises(FormatError, match="not sorted"):
        parse_multigraph("multigraph v1\nvertices 3\nedges 2\n1 2\n0 1\nend\n")
    with pytest.raises(FormatError, match="canonical order"):
        parse_multigraph("multigraph v1\nvertices 3\nedges 1\n2 1\nend\n")


def test_multigraph_rejects_range_errors():
    with pytest.raises(FormatError, match="out of range"):
        parse_multigraph("multigraph v1\nvertices 2\nedges 1\n0 5\nend\n")


def test_multigraph_empty():
    g = parse_multigraph(format_multigraph(MultiGraph(0)))
    assert g.n == 0 and g.edges() == []
