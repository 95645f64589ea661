import numpy as np
import pytest

from hyperrank.config import PartitionConfig
from hyperrank.hypergraph import UniformHypergraph
from hyperrank.partition import part_labels, recursive_partition


@pytest.mark.parametrize("method", ["mlppr", "gpr"])
def test_four_cliques(four_cliques, method):
    h, labels = four_cliques
    parts = recursive_partition(h, 4, method=method)

    assert len(parts) == 4
    found = {tuple(part.tolist()) for part in parts}
    expected = {tuple(np.flatnonzero(labels == label).tolist()) for label in range(4)}
    assert found == expected


def test_parts_cover_vertices(random_hypergraph):
    h = random_hypergraph(12, k=3, m=30, seed=5)
    parts = recursive_partition(h, 3, PartitionConfig(parts=3, ordering="gpr"))

    labels = part_labels(parts, 12)
    assert np.all(labels >= 0)
    assert sum(part.shape[0] for part in parts) == 12


def test_frozen_parts():
    # after the first split no part holds a whole edge
    h = UniformHypergraph(3, 3, [(0, 1, 2)])
    parts = recursive_partition(h, 5, method="gpr")

    assert len(parts) == 2
    assert sorted(np.concatenate(parts).tolist()) == [0, 1, 2]


def test_no_edges():
    parts = recursive_partition(UniformHypergraph(5, 3, []), 3)

    assert len(parts) == 1
    np.testing.assert_array_equal(parts[0], np.arange(5))


def test_invalid_parts(two_cliques):
    h, _ = two_cliques
    with pytest.raises(ValueError):
        recursive_partition(h, 1)


def test_part_labels():
    labels = part_labels([np.array([0, 2]), np.array([1])], 4)
    np.testing.assert_array_equal(labels, [0, 1, 0, -1])
