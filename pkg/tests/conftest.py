import itertools
from typing import Callable

import numpy as np
import pytest

from hyperrank.hypergraph import UniformHypergraph
from hyperrank.solver import PageRankProblem

TOY_EDGES = [
    (1, 2, 3),
    (1, 2, 4),
    (1, 3, 4),
    (2, 3, 4),
    (4, 5, 6),
    (6, 7, 8),
    (6, 7, 9),
    (6, 8, 9),
    (7, 8, 9),
]
"""1-based edges of the 9-vertex toy hypergraph: two 4-cliques bridged by {4,5,6}."""

TOY_SOLUTION = np.array([0.4796, 0.4796, 0.0527, 0.0527, 0, 0, 0, 0, 0])
"""Known solution of the toy problem with alpha = 1/5 and v = (1/2, 1/2, 0, ...)."""


def complete_edges(vertices: list[int], k: int = 3) -> list[tuple[int, ...]]:
    """All k-subsets of `vertices`."""
    return list(itertools.combinations(vertices, k))


@pytest.fixture
def toy_hypergraph() -> UniformHypergraph:
    """Toy 3-uniform hypergraph on 9 vertices."""
    edges = [tuple(i - 1 for i in edge) for edge in TOY_EDGES]
    return UniformHypergraph(9, 3, edges)


@pytest.fixture
def toy_v() -> np.ndarray:
    """Teleportation vector concentrated on the first two vertices."""
    v = np.zeros(9)
    v[:2] = 0.5
    return v


@pytest.fixture
def toy_problem(toy_hypergraph, toy_v) -> PageRankProblem:
    """Multi-linear pseudo-PageRank problem of the toy hypergraph."""
    return PageRankProblem.from_hypergraph(toy_hypergraph, alpha=0.2, v=toy_v)


@pytest.fixture
def small_hypergraph() -> UniformHypergraph:
    """Hypergraph with edges {1, 2, 3} and {2, 3, 4}."""
    return UniformHypergraph(4, 3, [(0, 1, 2), (1, 2, 3)])


@pytest.fixture
def two_cliques() -> tuple[UniformHypergraph, np.ndarray]:
    """Two complete 3-uniform 5-cliques joined by a single bridge edge.

    Returns the hypergraph and the planted label of every vertex.
    """
    edges = complete_edges(list(range(5))) + complete_edges(list(range(5, 10)))
    edges.append((3, 4, 5))
    labels = np.repeat([0, 1], 5)
    return UniformHypergraph(10, 3, edges), labels


@pytest.fixture
def four_cliques() -> tuple[UniformHypergraph, np.ndarray]:
    """Four complete 3-uniform 6-cliques chained by one bridge edge each.

    Returns the hypergraph and the planted label of every vertex.
    """
    edges = []
    for block in range(4):
        edges += complete_edges(list(range(6 * block, 6 * block + 6)))
    edges += [(4, 5, 6), (10, 11, 12), (16, 17, 18)]
    labels = np.repeat(np.arange(4), 6)
    return UniformHypergraph(24, 3, edges), labels


@pytest.fixture
def random_hypergraph() -> Callable[..., UniformHypergraph]:
    """Factory of random hypergraphs.

    The returned function takes `n`, `k`, `m` and `seed` and returns a hypergraph with
    at most `m` distinct edges, `directed` and `weighted` switch the edge type.
    """

    def _random_hypergraph(
        n: int,
        k: int = 3,
        m: int = 10,
        seed: int = 0,
        directed: bool = False,
        weighted: bool = False,
    ) -> UniformHypergraph:
        rng = np.random.default_rng(seed)
        edges = set()
        for _ in range(m):
            vertices = rng.choice(n, size=k, replace=False)
            if directed:
                edges.add((*sorted(vertices[:-1].tolist()), int(vertices[-1])))
            else:
                edges.add(tuple(sorted(vertices.tolist())))
        edges_list = sorted(edges)
        weights = rng.uniform(0.5, 2.0, len(edges_list)) if weighted else None
        return UniformHypergraph(n, k, edges_list, weights=weights, directed=directed)

    return _random_hypergraph


@pytest.fixture
def toy_solution() -> np.ndarray:
    """Known solution of the toy problem, to four decimals."""
    return TOY_SOLUTION.copy()


@pytest.fixture
def minimum_configuration() -> dict:
    """Smallest valid configuration dictionary."""
    return {"experiment_name": "toy"}
