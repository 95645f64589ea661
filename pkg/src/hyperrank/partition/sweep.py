"""Sweep cuts minimizing a normalized-cut heuristic over prefix sets."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from hyperrank.hypergraph import UniformHypergraph


@dataclass(frozen=True)
class SweepCut:
    """
    Prefix split of a vertex ordering minimizing `h(i)`.

    Attributes
    ----------
    order : NDArray
        Vertex permutation.
    h : NDArray
        Values `h(i)` for prefix sizes `i = 1, ..., n-1` (`h[i-1]`), `+inf` when a
        side has zero volume.
    i_star : int
        Optimal prefix size, the smallest minimizer.
    """

    order: NDArray
    h: NDArray
    i_star: int

    @property
    def S(self) -> NDArray:
        """Vertices of the optimal prefix, sorted.

        Returns
        -------
        NDArray
            First `i_star` vertices of `order`.
        """
        return np.sort(self.order[: self.i_star])

    @property
    def complement(self) -> NDArray:
        """Remaining vertices, sorted.

        Returns
        -------
        NDArray
            Vertices not in `S`.
        """
        return np.sort(self.order[self.i_star :])

    @property
    def value(self) -> float:
        """Optimal `h` value.

        Returns
        -------
        float
            `h(i_star)`, or `inf` for fewer than two vertices.
        """
        if self.h.shape[0] == 0:
            return float(np.inf)
        return float(self.h[self.i_star - 1])


def vertex_volumes(h: UniformHypergraph) -> NDArray:
    """
    Adjacency tensor mass with first index at each vertex.

    An undirected edge of weight w contributes w to each of its vertices, a directed
    arc contributes w to its head.

    Parameters
    ----------
    h : UniformHypergraph
        Hypergraph.

    Returns
    -------
    NDArray
        Volumes of shape (n,).
    """
    if h.directed:
        return np.bincount(h.edges[:, -1], weights=h.weights, minlength=h.n)
    return h.vertex_degrees()


def edge_masses(h: UniformHypergraph) -> NDArray:
    """
    Total adjacency tensor mass of every edge.

    Parameters
    ----------
    h : UniformHypergraph
        Hypergraph.

    Returns
    -------
    NDArray
        `k w` for undirected edges, `w` for directed arcs.
    """
    if h.directed:
        return np.asarray(h.weights, dtype=np.float64)
    return h.k * np.asarray(h.weights, dtype=np.float64)


def _h_values(cut: NDArray, vol_s: NDArray, vol_rest: NDArray) -> NDArray:
    values = np.full(cut.shape[0], np.inf)
    both = (vol_s > 0) & (vol_rest > 0)
    values[both] = cut[both] * (1 / vol_s[both] + 1 / vol_rest[both])
    return values


def sweep_cut(h: UniformHypergraph, order: ArrayLike) -> SweepCut:
    """
    Evaluate `h(i) = cut(S_i) (1/vol(S_i) + 1/vol(complement))` on every prefix.

    `S_i` holds the first i vertices of `order`. `vol(S)` sums the adjacency tensor
    entries whose first index is in S, and `cut(S)` is the total mass minus the mass
    of entries with all indices in S or all in the complement. The whole sweep costs
    `O(k m + n)`.

    Parameters
    ----------
    h : UniformHypergraph
        Hypergraph.
    order : ArrayLike
        Permutation of the vertices.

    Returns
    -------
    SweepCut
        Values of `h` and the optimal split.

    Raises
    ------
    ValueError
        If `order` is not a permutation of the vertices.
    """
    order = np.asarray(order, dtype=np.int64)
    if order.shape != (h.n,) or not np.array_equal(np.sort(order), np.arange(h.n)):
        raise ValueError("Sweep order must be a permutation of the vertices.")

    if h.n < 2:
        return SweepCut(order=order, h=np.zeros(0), i_star=h.n)

    position = np.empty(h.n, dtype=np.int64)
    position[order] = np.arange(h.n)

    # an edge crosses prefix i exactly when first_pos < i <= last_pos
    diff = np.zeros(h.n + 1)
    if h.m > 0:
        edge_positions = position[h.edges]
        first = edge_positions.min(axis=1)
        last = edge_positions.max(axis=1)
        masses = edge_masses(h)
        np.add.at(diff, first + 1, masses)
        np.add.at(diff, last + 1, -masses)
    cut = np.cumsum(diff)[1 : h.n]

    volumes = vertex_volumes(h)[order]
    vol_s = np.cumsum(volumes)[: h.n - 1]
    vol_rest = volumes.sum() - vol_s

    values = _h_values(cut, vol_s, vol_rest)
    i_star = int(np.argmin(values)) + 1
    return SweepCut(order=order, h=values, i_star=i_star)


def evaluate_cut(
    h: UniformHypergraph, subset: Iterable[int]
) -> tuple[float, float, float]:
    """
    Cut and volumes of a vertex set, computed edge by edge.

    Parameters
    ----------
    h : UniformHypergraph
        Hypergraph.
    subset : Iterable of int
        Vertex set S.

    Returns
    -------
    tuple of float
        `cut(S)`, `vol(S)` and `vol` of the complement.
    """
    inside = np.zeros(h.n, dtype=bool)
    inside[np.fromiter(subset, dtype=np.int64)] = True

    volumes = vertex_volumes(h)
    vol_s = float(volumes[inside].sum())
    vol_rest = float(volumes[~inside].sum())

    cut = 0.0
    for edge, mass in zip(h.edges, edge_masses(h)):
        count = int(inside[edge].sum())
        if 0 < count < h.k:
            cut += float(mass)
    return cut, vol_s, vol_rest


def normalized_cut_value(h: UniformHypergraph, subset: Iterable[int]) -> float:
    """
    `h` value of a vertex set, `+inf` when a side has zero volume.

    Parameters
    ----------
    h : UniformHypergraph
        Hypergraph.
    subset : Iterable of int
        Vertex set S.

    Returns
    -------
    float
        `cut(S) (1/vol(S) + 1/vol(complement))`.
    """
    cut, vol_s, vol_rest = evaluate_cut(h, subset)
    if vol_s <= 0 or vol_rest <= 0:
        return float(np.inf)
    return cut * (1 / vol_s + 1 / vol_rest)
