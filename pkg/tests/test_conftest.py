"""Tests for the pytest fixtures."""

import numpy as np

from hyperrank.config import HyperRankConfiguration


def test_minimum_configuration(minimum_configuration):
    # create configuration
    HyperRankConfiguration(**minimum_configuration)


def test_toy_problem(toy_problem, toy_hypergraph, toy_solution):
    assert (toy_hypergraph.n, toy_hypergraph.k, toy_hypergraph.m) == (9, 3, 9)
    assert toy_problem.alpha == 0.2
    assert toy_problem.v.sum() == 1.0
    assert toy_solution.shape == (9,)


def test_cliques(two_cliques, four_cliques):
    h, labels = two_cliques
    assert h.m == 2 * 10 + 1
    assert np.bincount(labels).tolist() == [5, 5]

    h, labels = four_cliques
    assert h.m == 4 * 20 + 3
    assert np.bincount(labels).tolist() == [6, 6, 6, 6]


def test_random_hypergraph(random_hypergraph):
    h = random_hypergraph(12, k=4, m=8, seed=1, directed=True, weighted=True)
    assert h.n == 12 and h.k == 4 and h.directed
    assert 0 < h.m <= 8
    assert np.all(h.weights >= 0.5)
