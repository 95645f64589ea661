"""Simple directed graphs with external node identifiers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import sparse

from hyperrank.utils import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class IngestStats:
    """
    Arcs discarded while building a graph from a raw edge list.

    Attributes
    ----------
    self_loops : int
        Number of dropped self-loops.
    duplicates : int
        Number of dropped repeated arcs.
    """

    self_loops: int = 0
    duplicates: int = 0


class DirectedGraph:
    """
    Directed graph without self-loops or repeated arcs.

    Nodes are the dense integers `0, ..., n-1`; `node_ids` maps them back to the
    identifiers of the raw data.

    Parameters
    ----------
    n : int
        Number of nodes.
    arcs : ArrayLike
        Arc array of shape (m, 2), each row `(source, target)`.
    node_ids : ArrayLike, optional
        External identifier of every node, by default the dense ids themselves.
    stats : IngestStats, optional
        Arcs dropped while building the graph from raw data.

    Attributes
    ----------
    n : int
        Number of nodes.
    arcs : NDArray
        Arcs sorted lexicographically, shape (m, 2).
    node_ids : NDArray
        External identifiers, shape (n,).
    stats : IngestStats
        Ingestion statistics.

    Examples
    --------
    >>> from hyperrank.motifs import DirectedGraph
    >>> g = DirectedGraph.from_edge_list([10, 20, 30, 30], [20, 30, 10, 30])
    >>> g.n, g.m
    (3, 3)
    >>> g.stats.self_loops
    1
    """

    def __init__(
        self,
        n: int,
        arcs: ArrayLike,
        node_ids: Optional[ArrayLike] = None,
        stats: Optional[IngestStats] = None,
    ) -> None:
        """
        Constructor.

        Parameters
        ----------
        n : int
            Number of nodes.
        arcs : ArrayLike
            Arc array of shape (m, 2).
        node_ids : ArrayLike, optional
            External identifier of every node.
        stats : IngestStats, optional
            Ingestion statistics.

        Raises
        ------
        ValueError
            If an arc references an unknown node, is a self-loop or is repeated.
        """
        arc_array = np.asarray(arcs, dtype=np.int64)
        if arc_array.size == 0:
            arc_array = arc_array.reshape(0, 2)
        if arc_array.ndim != 2 or arc_array.shape[1] != 2:
            raise ValueError("Arcs must be given as an array of shape (m, 2).")
        if arc_array.shape[0] > 0 and (arc_array.min() < 0 or arc_array.max() >= n):
            raise ValueError(f"Arc endpoints must lie in [0, {n}).")
        if np.any(arc_array[:, 0] == arc_array[:, 1]):
            raise ValueError("Directed graph cannot contain self-loops.")

        keys = arc_array[:, 0] * n + arc_array[:, 1]
        order = np.argsort(keys, kind="stable")
        keys = keys[order]
        if np.any(keys[1:] == keys[:-1]):
            raise ValueError("Directed graph cannot contain repeated arcs.")

        ids = np.arange(n) if node_ids is None else np.asarray(node_ids)
        if ids.shape != (n,):
            raise ValueError(f"Expected {n} node identifiers (got {ids.shape[0]}).")

        self.n = int(n)
        self.arcs: NDArray = arc_array[order]
        self.node_ids: NDArray = ids
        self.stats = IngestStats() if stats is None else stats
        self._keys = keys
        self.arcs.setflags(write=False)

    @classmethod
    def from_edge_list(
        cls, sources: ArrayLike, targets: ArrayLike
    ) -> DirectedGraph:
        """
        Build a graph from raw arcs, dropping self-loops and repeated arcs.

        External identifiers are relabeled densely in increasing order.

        Parameters
        ----------
        sources : ArrayLike
            External identifiers of the arc sources.
        targets : ArrayLike
            External identifiers of the arc targets.

        Returns
        -------
        DirectedGraph
            Graph with its ingestion statistics.

        Raises
        ------
        ValueError
            If `sources` and `targets` differ in length.
        """
        sources = np.asarray(sources)
        targets = np.asarray(targets)
        if sources.shape != targets.shape:
            raise ValueError("Arc sources and targets must have the same length.")

        node_ids, dense = np.unique(
            np.concatenate([sources, targets]), return_inverse=True
        )
        dense = dense.reshape(-1)
        arcs = np.column_stack([dense[: sources.shape[0]], dense[sources.shape[0] :]])

        loops = arcs[:, 0] == arcs[:, 1]
        arcs = arcs[~loops]
        unique = np.unique(arcs, axis=0) if arcs.shape[0] > 0 else arcs
        stats = IngestStats(
            self_loops=int(loops.sum()),
            duplicates=int(arcs.shape[0] - unique.shape[0]),
        )
        if stats.self_loops or stats.duplicates:
            logger.info(
                f"Dropped {stats.self_loops} self-loops and {stats.duplicates} "
                f"repeated arcs."
            )
        return cls(node_ids.shape[0], unique, node_ids=node_ids, stats=stats)

    @property
    def m(self) -> int:
        """Number of arcs.

        Returns
        -------
        int
            Arc count.
        """
        return int(self.arcs.shape[0])

    def adjacency(self) -> sparse.csr_matrix:
        """Adjacency matrix with entry `(i, j)` set for the arc `i -> j`.

        Returns
        -------
        scipy.sparse.csr_matrix
            Binary matrix of shape (n, n).
        """
        return sparse.csr_matrix(
            (np.ones(self.m), (self.arcs[:, 0], self.arcs[:, 1])),
            shape=(self.n, self.n),
        )

    def has_arcs(self, sources: ArrayLike, targets: ArrayLike) -> NDArray:
        """
        Membership test for a batch of arcs.

        Parameters
        ----------
        sources : ArrayLike
            Arc sources.
        targets : ArrayLike
            Arc targets.

        Returns
        -------
        NDArray
            Boolean mask, True where the arc exists.
        """
        keys = np.asarray(sources, dtype=np.int64) * self.n + np.asarray(
            targets, dtype=np.int64
        )
        position = np.searchsorted(self._keys, keys)
        found = position < self._keys.shape[0]
        found[found] = self._keys[position[found]] == keys[found]
        return found

    def subgraph(
        self, nodes: ArrayLike, arcs: Optional[Union[ArrayLike, NDArray]] = None
    ) -> DirectedGraph:
        """
        Restrict the graph to a node subset, relabeling nodes densely.

        Parameters
        ----------
        nodes : ArrayLike
            Nodes to keep.
        arcs : ArrayLike, optional
            Arcs to keep, by default every arc between kept nodes. Arcs touching a
            discarded node are ignored.

        Returns
        -------
        DirectedGraph
            Subgraph carrying the original external identifiers.
        """
        nodes = np.unique(np.asarray(nodes, dtype=np.int64))
        arc_array = self.arcs if arcs is None else np.asarray(arcs, dtype=np.int64)
        if arc_array.size == 0:
            arc_array = arc_array.reshape(0, 2)

        relabel = np.full(self.n, -1, dtype=np.int64)
        relabel[nodes] = np.arange(nodes.shape[0])
        mapped = relabel[arc_array]
        mapped = mapped[np.all(mapped >= 0, axis=1)]
        return DirectedGraph(
            nodes.shape[0], mapped, node_ids=self.node_ids[nodes], stats=self.stats
        )

    def __repr__(self) -> str:
        """Short description.

        Returns
        -------
        str
            Node and arc counts.
        """
        return f"DirectedGraph(n={self.n}, m={self.m})"
