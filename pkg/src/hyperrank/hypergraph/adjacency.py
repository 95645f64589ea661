"""Adjacency tensors of uniform hypergraphs."""

import math

import numpy as np

from hyperrank.tensor import SparseKTensor

from .normalization import DanglingFibers, normalize_substochastic
from .uniform_hypergraph import UniformHypergraph


def adjacency_tensor(h: UniformHypergraph) -> SparseKTensor:
    """
    Adjacency tensor of a uniform hypergraph in canonical semi-symmetric storage.

    An undirected edge of weight w puts `w / (k-1)!` at every ordering of its
    vertices. A directed arc puts `w / (k-1)!` at `(head, permutation of tails)` for
    every permutation of its tails.

    Parameters
    ----------
    h : UniformHypergraph
        Hypergraph.

    Returns
    -------
    SparseKTensor
        Semi-symmetric adjacency tensor; fully symmetric for undirected input.

    Examples
    --------
    >>> from hyperrank.hypergraph import UniformHypergraph, adjacency_tensor
    >>> arc = UniformHypergraph(3, 3, [(0, 1, 2)], weights=[2.0], directed=True)
    >>> sorted(adjacency_tensor(arc).to_dict().items())
    [((2, 0, 1), 1.0), ((2, 1, 0), 1.0)]
    """
    k = h.k
    scale = 1.0 / math.factorial(k - 1)

    if h.m == 0:
        return SparseKTensor.zeros(h.n, k)

    if h.directed:
        # stored as sorted tails followed by the head
        indices = np.column_stack([h.edges[:, -1], h.edges[:, :-1]])
        values = h.weights * scale
    else:
        blocks = []
        for position in range(k):
            tail = np.delete(h.edges, position, axis=1)
            blocks.append(np.column_stack([h.edges[:, position], tail]))
        indices = np.concatenate(blocks)
        values = np.tile(h.weights * scale, k)

    return SparseKTensor(h.n, k, indices, values, semi_symmetric=True)


def transition_tensor(h: UniformHypergraph) -> tuple[SparseKTensor, DanglingFibers]:
    """
    Columnwise-substochastic transition tensor of a hypergraph.

    Parameters
    ----------
    h : UniformHypergraph
        Hypergraph.

    Returns
    -------
    tuple of (SparseKTensor, DanglingFibers)
        Normalized adjacency tensor and its dangling fibers.
    """
    return normalize_substochastic(adjacency_tensor(h))
