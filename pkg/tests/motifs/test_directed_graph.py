import numpy as np
import pytest

from hyperrank.motifs import DirectedGraph, IngestStats


def test_from_edge_list():
    g = DirectedGraph.from_edge_list(
        [10, 20, 30, 30, 10, 20], [20, 30, 10, 30, 20, 10]
    )

    assert g.n == 3
    assert g.m == 4
    np.testing.assert_array_equal(g.node_ids, [10, 20, 30])
    np.testing.assert_array_equal(g.arcs, [[0, 1], [1, 0], [1, 2], [2, 0]])
    assert g.stats == IngestStats(self_loops=1, duplicates=1)


def test_from_edge_list_length_mismatch():
    with pytest.raises(ValueError):
        DirectedGraph.from_edge_list([1, 2], [2])


@pytest.mark.parametrize(
    "arcs",
    [
        [(0, 0)],
        [(0, 1), (0, 1)],
        [(0, 3)],
        [(0, 1, 2)],
    ],
)
def test_invalid_arcs(arcs):
    with pytest.raises(ValueError):
        DirectedGraph(3, arcs)


def test_invalid_node_ids():
    with pytest.raises(ValueError):
        DirectedGraph(3, [(0, 1)], node_ids=[5, 6])


def test_adjacency():
    g = DirectedGraph(3, [(0, 1), (2, 1)])
    np.testing.assert_array_equal(
        g.adjacency().toarray(), [[0, 1, 0], [0, 0, 0], [0, 1, 0]]
    )


def test_has_arcs():
    g = DirectedGraph(4, [(0, 1), (1, 2), (3, 0)])
    np.testing.assert_array_equal(
        g.has_arcs([0, 1, 2, 3, 3], [1, 0, 1, 0, 3]), [True, False, False, True, False]
    )


def test_subgraph():
    g = DirectedGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)], node_ids=[7, 8, 9, 10])
    sub = g.subgraph([3, 1, 2])

    assert sub.n == 3
    np.testing.assert_array_equal(sub.node_ids, [8, 9, 10])
    np.testing.assert_array_equal(sub.arcs, [[0, 1], [1, 2]])


def test_subgraph_with_arcs():
    g = DirectedGraph(3, [(0, 1), (1, 2), (2, 0)])
    sub = g.subgraph([0, 1, 2], arcs=[(0, 1)])

    assert sub.m == 1


def test_empty_graph():
    g = DirectedGraph.from_edge_list([], [])

    assert g.n == 0
    assert g.m == 0
