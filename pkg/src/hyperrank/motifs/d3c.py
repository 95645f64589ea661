"""
Directed 3-cycle motifs.

A directed 3-cycle (D3C) is a triple of nodes `{a, b, c}` carrying the arcs
`a -> b -> c -> a` in either rotational orientation. The motif hypergraph of a network
has one unit-weight 3-edge per D3C.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np
from numpy.typing import NDArray
from scipy.sparse.csgraph import connected_components

from hyperrank.hypergraph import UniformHypergraph
from hyperrank.utils import get_logger

from .directed_graph import DirectedGraph

logger = get_logger(__name__)

ARC_CHUNK = 1 << 16


def _closing_triples(
    g: DirectedGraph, indptr: NDArray, indices: NDArray, chunk: NDArray
) -> NDArray:
    i, j = chunk[:, 0], chunk[:, 1]

    # expand the out-neighborhood of every j
    counts = indptr[j + 1] - indptr[j]
    total = int(counts.sum())
    if total == 0:
        return np.zeros((0, 3), dtype=np.int64)
    offsets = np.repeat(indptr[j] - (np.cumsum(counts) - counts), counts)
    c = indices[np.arange(total) + offsets].astype(np.int64)
    i = np.repeat(i, counts)
    j = np.repeat(j, counts)

    keep = c > i
    i, j, c = i[keep], j[keep], c[keep]
    closing = g.has_arcs(c, i)
    return np.column_stack([i[closing], j[closing], c[closing]]).astype(np.int64)


def directed_cycles(g: DirectedGraph, threads: int = 1) -> NDArray:
    """
    Every oriented 3-cycle, listed once from its smallest node.

    For each arc `i -> j` with `i < j`, the out-neighbors `c > i` of `j` that close
    the cycle with `c -> i` are collected. A triple carrying both orientations
    appears twice, once per orientation.

    Arcs are processed in chunks of `ARC_CHUNK`, spread over `threads` workers and
    concatenated in chunk order.

    Parameters
    ----------
    g : DirectedGraph
        Directed graph.
    threads : int, optional
        Number of worker threads, by default 1.

    Returns
    -------
    NDArray
        Rows `(i, j, c)` with arcs `i -> j -> c -> i` and `i` the smallest node.
    """
    adjacency = g.adjacency()
    forward = g.arcs[g.arcs[:, 0] < g.arcs[:, 1]]
    chunks = [
        forward[start : start + ARC_CHUNK]
        for start in range(0, forward.shape[0], ARC_CHUNK)
    ]

    def closing(chunk: NDArray) -> NDArray:
        return _closing_triples(g, adjacency.indptr, adjacency.indices, chunk)

    if threads <= 1 or len(chunks) < 2:
        found = [closing(chunk) for chunk in chunks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            found = list(pool.map(closing, chunks))

    if not found:
        return np.zeros((0, 3), dtype=np.int64)
    return np.concatenate(found).astype(np.int64)


def enumerate_d3c(g: DirectedGraph, threads: int = 1) -> NDArray:
    """
    Node triples forming a directed 3-cycle.

    Parameters
    ----------
    g : DirectedGraph
        Directed graph.
    threads : int, optional
        Number of worker threads, by default 1.

    Returns
    -------
    NDArray
        Sorted triples of shape (t, 3), in lexicographic order and without
        repetition.

    Examples
    --------
    >>> from hyperrank.motifs import DirectedGraph, enumerate_d3c
    >>> cycle = DirectedGraph(3, [(0, 1), (1, 2), (2, 0)])
    >>> enumerate_d3c(cycle).tolist()
    [[0, 1, 2]]
    >>> feed_forward = DirectedGraph(3, [(0, 1), (1, 2), (0, 2)])
    >>> enumerate_d3c(feed_forward).shape
    (0, 3)
    """
    cycles = directed_cycles(g, threads=threads)
    if cycles.shape[0] == 0:
        return cycles
    return np.unique(np.sort(cycles, axis=1), axis=0)


def _cycle_support(g: DirectedGraph, cycles: NDArray) -> tuple[NDArray, NDArray]:
    nodes = np.unique(cycles)
    arcs = np.concatenate([cycles[:, [0, 1]], cycles[:, [1, 2]], cycles[:, [2, 0]]])
    if arcs.shape[0] > 0:
        arcs = np.unique(arcs, axis=0)
    return nodes, arcs


def largest_strong_component(g: DirectedGraph) -> NDArray:
    """
    Nodes of the largest strongly connected component.

    Ties are broken in favor of the component holding the smallest node.

    Parameters
    ----------
    g : DirectedGraph
        Directed graph.

    Returns
    -------
    NDArray
        Sorted node indices.
    """
    if g.n == 0:
        return np.zeros(0, dtype=np.int64)
    _, labels = connected_components(g.adjacency(), directed=True, connection="strong")
    sizes = np.bincount(labels)
    largest = np.flatnonzero(sizes == sizes.max())
    first_node = [int(np.argmax(labels == label)) for label in largest]
    label = largest[int(np.argmin(first_node))]
    return np.flatnonzero(labels == label)


def filter_network(
    g: DirectedGraph, threads: int = 1
) -> tuple[DirectedGraph, NDArray]:
    """
    Keep the motif core of a network.

    Nodes and arcs that belong to no D3C are removed, then the largest strongly
    connected component of the remainder is kept. Both steps run once; D3Cs are
    enumerated again on the result.

    Parameters
    ----------
    g : DirectedGraph
        Directed graph.
    threads : int, optional
        Number of worker threads of the cycle enumeration, by default 1.

    Returns
    -------
    tuple of (DirectedGraph, NDArray)
        Filtered graph and its D3C triples.

    Raises
    ------
    ValueError
        If the graph has no D3C.
    """
    cycles = directed_cycles(g, threads=threads)
    if cycles.shape[0] == 0:
        raise ValueError("Network has no directed 3-cycle, no motif structure to use.")

    nodes, arcs = _cycle_support(g, cycles)
    pruned = g.subgraph(nodes, arcs)
    logger.info(
        f"Motif pruning: {g.n} -> {pruned.n} nodes, {g.m} -> {pruned.m} arcs."
    )

    component = largest_strong_component(pruned)
    filtered = pruned.subgraph(component)
    final_cycles = directed_cycles(filtered, threads=threads)
    d3cs = (
        np.unique(np.sort(final_cycles, axis=1), axis=0)
        if final_cycles.shape[0] > 0
        else final_cycles
    )
    if d3cs.shape[0] == 0:
        raise ValueError("Filtered network has no directed 3-cycle.")
    logger.info(
        f"Largest strongly connected component: {filtered.n} nodes, {filtered.m} "
        f"arcs, {d3cs.shape[0]} D3Cs."
    )

    final_nodes, final_arcs = _cycle_support(filtered, final_cycles)
    if final_nodes.shape[0] != filtered.n or final_arcs.shape[0] != filtered.m:
        logger.warning(
            f"Filtering is not at a fixpoint: {filtered.n - final_nodes.shape[0]} "
            f"nodes and {filtered.m - final_arcs.shape[0]} arcs belong to no D3C "
            f"after taking the strongly connected component."
        )

    return filtered, d3cs


def d3c_hypergraph(filtered: DirectedGraph, d3cs: NDArray) -> UniformHypergraph:
    """
    3-uniform motif hypergraph of a filtered network.

    Parameters
    ----------
    filtered : DirectedGraph
        Network returned by `filter_network`.
    d3cs : NDArray
        Its D3C triples.

    Returns
    -------
    UniformHypergraph
        Undirected hypergraph with one unit-weight edge per D3C.
    """
    return UniformHypergraph(filtered.n, 3, d3cs)
