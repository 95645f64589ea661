"""Weighted k-uniform hypergraphs."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from typing import Optional, Union

import numpy as np
from numpy.typing import NDArray
from scipy import sparse


class UniformHypergraph:
    """
    Weighted k-uniform hypergraph, undirected or directed.

    Vertices are the integers `0, ..., n-1`. An undirected edge is a set of k
    distinct vertices. A directed arc is a tuple `(tail_1, ..., tail_{k-1}, head)`:
    the last vertex is the head.

    Instances are immutable.

    Parameters
    ----------
    n : int
        Number of vertices.
    k : int
        Number of vertices per edge, at least 2.
    edges : Sequence of Sequence of int or NDArray
        Edges as vertex tuples of length k.
    weights : Sequence of float or NDArray, optional
        Positive edge weights, by default all ones.
    directed : bool, optional
        Whether edges are arcs with a head in last position, by default False.

    Attributes
    ----------
    n : int
        Number of vertices.
    k : int
        Uniformity order.
    edges : NDArray
        Edge array of shape (m, k). Undirected edges are stored sorted, directed arcs
        with sorted tails followed by the head.
    weights : NDArray
        Edge weights of shape (m,).
    directed : bool
        Whether edges are arcs.

    Examples
    --------
    >>> from hyperrank.hypergraph import UniformHypergraph
    >>> h = UniformHypergraph(4, 3, [(0, 1, 2), (1, 2, 3)])
    >>> h.m
    2
    >>> h.render_edges()
    [(1, 2, 3), (2, 3, 4)]
    """

    def __init__(
        self,
        n: int,
        k: int,
        edges: Union[Sequence[Sequence[int]], NDArray],
        weights: Optional[Union[Sequence[float], NDArray]] = None,
        directed: bool = False,
    ) -> None:
        """
        Constructor.

        Parameters
        ----------
        n : int
            Number of vertices.
        k : int
            Number of vertices per edge, at least 2.
        edges : Sequence of Sequence of int or NDArray
            Edges as vertex tuples of length k.
        weights : Sequence of float or NDArray, optional
            Positive edge weights, by default all ones.
        directed : bool, optional
            Whether edges are arcs with a head in last position, by default False.

        Raises
        ------
        ValueError
            If an edge has the wrong size, repeats a vertex or references a vertex
            outside `[0, n)`, if a weight is not positive, or if an edge is given
            twice.
        """
        if k < 2:
            raise ValueError(f"Hypergraph order k must be at least 2 (got {k}).")
        if n < 0:
            raise ValueError(f"Number of vertices must be nonnegative (got {n}).")

        edge_array = np.asarray(edges, dtype=np.int64)
        if edge_array.size == 0:
            edge_array = edge_array.reshape(0, k)
        if edge_array.ndim != 2 or edge_array.shape[1] != k:
            raise ValueError(f"Every edge must contain exactly k={k} vertices.")

        m = edge_array.shape[0]
        if weights is None:
            weight_array = np.ones(m)
        else:
            weight_array = np.asarray(weights, dtype=np.float64).reshape(-1)
        if weight_array.shape[0] != m:
            raise ValueError(f"Got {m} edges but {weight_array.shape[0]} weights.")
        if np.any(~np.isfinite(weight_array)) or np.any(weight_array <= 0):
            raise ValueError("Edge weights must be finite and strictly positive.")

        if m > 0 and (edge_array.min() < 0 or edge_array.max() >= n):
            raise ValueError(f"Edge vertices must lie in [0, {n}).")

        if directed:
            canonical = np.column_stack(
                [np.sort(edge_array[:, :-1], axis=1), edge_array[:, -1]]
            )
        else:
            canonical = np.sort(edge_array, axis=1)

        if m > 0:
            vertex_sets = np.sort(canonical, axis=1)
            repeated = np.any(vertex_sets[:, 1:] == vertex_sets[:, :-1], axis=1)
            if np.any(repeated):
                bad = int(np.argmax(repeated))
                raise ValueError(
                    f"Edge {self._format(edge_array[bad])} repeats a vertex."
                )

            unique, counts = np.unique(canonical, axis=0, return_counts=True)
            if np.any(counts > 1):
                dup = unique[np.argmax(counts > 1)]
                raise ValueError(f"Duplicate edge {self._format(dup)}.")

        canonical.setflags(write=False)
        weight_array.setflags(write=False)

        self.n = int(n)
        self.k = int(k)
        self.directed = bool(directed)
        self.edges: NDArray = canonical
        self.weights: NDArray = weight_array

    @staticmethod
    def _format(edge: Iterable[int]) -> str:
        return "(" + ", ".join(str(int(v) + 1) for v in edge) + ")"

    @property
    def m(self) -> int:
        """Number of edges.

        Returns
        -------
        int
            Edge count.
        """
        return int(self.edges.shape[0])

    def render_edges(self) -> list[tuple[int, ...]]:
        """
        Edges with 1-based vertex labels.

        Returns
        -------
        list of tuple of int
            Edges in storage order.
        """
        return [tuple(int(v) + 1 for v in edge) for edge in self.edges]

    def vertex_degrees(self) -> NDArray:
        """
        Weighted number of edges containing each vertex.

        Returns
        -------
        NDArray
            Degrees of shape (n,).
        """
        return np.bincount(
            self.edges.reshape(-1),
            weights=np.repeat(self.weights, self.k),
            minlength=self.n,
        )

    def isolated_vertices(self) -> NDArray:
        """
        Vertices in no edge.

        Returns
        -------
        NDArray
            Sorted vertex indices.
        """
        covered = np.zeros(self.n, dtype=bool)
        covered[self.edges.reshape(-1)] = True
        return np.nonzero(~covered)[0]

    def induced_subhypergraph(
        self, vertices: Iterable[int]
    ) -> tuple[UniformHypergraph, NDArray]:
        """
        Sub-hypergraph on `vertices` keeping the edges entirely inside the set.

        Vertices are relabelled `0, ..., len(vertices)-1` in increasing order of
        their original index.

        Parameters
        ----------
        vertices : Iterable of int
            Vertex subset.

        Returns
        -------
        tuple of (UniformHypergraph, NDArray)
            Induced sub-hypergraph and the original index of every new vertex.
        """
        kept = np.unique(np.fromiter(vertices, dtype=np.int64))
        relabel = np.full(self.n, -1, dtype=np.int64)
        relabel[kept] = np.arange(kept.shape[0])

        mapped = relabel[self.edges] if self.m > 0 else self.edges
        inside = np.all(mapped >= 0, axis=1) if self.m > 0 else np.zeros(0, bool)
        sub = UniformHypergraph(
            int(kept.shape[0]),
            self.k,
            mapped[inside],
            self.weights[inside],
            directed=self.directed,
        )
        return sub, kept

    def clique_expansion(self) -> sparse.csr_matrix:
        """
        Weighted graph approximation of the hypergraph.

        An undirected edge of weight w adds w to both directions of every vertex pair
        it contains. A directed arc adds w on every tail-to-head arc. Entry `(i, j)`
        is the weight of the arc from `j` to `i`, matching column-oriented transition
        matrices.

        Returns
        -------
        scipy.sparse.csr_matrix
            Adjacency matrix of shape (n, n).
        """
        rows = []
        cols = []
        data = []
        if self.directed:
            for j in range(self.k - 1):
                rows.append(self.edges[:, -1])
                cols.append(self.edges[:, j])
                data.append(self.weights)
        else:
            for a in range(self.k):
                for b in range(self.k):
                    if a != b:
                        rows.append(self.edges[:, a])
                        cols.append(self.edges[:, b])
                        data.append(self.weights)

        if not data:
            return sparse.csr_matrix((self.n, self.n))

        return sparse.coo_matrix(
            (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
            shape=(self.n, self.n),
        ).tocsr()

    def __eq__(self, other: object) -> bool:
        """Structural equality.

        Parameters
        ----------
        other : object
            Object to compare with.

        Returns
        -------
        bool
            Whether both hypergraphs have the same vertices, edges and weights.
        """
        if not isinstance(other, UniformHypergraph):
            return NotImplemented
        if (self.n, self.k, self.directed, self.m) != (
            other.n,
            other.k,
            other.directed,
            other.m,
        ):
            return False
        mine = np.lexsort(self.edges.T[::-1])
        theirs = np.lexsort(other.edges.T[::-1])
        return bool(
            np.array_equal(self.edges[mine], other.edges[theirs])
            and np.allclose(self.weights[mine], other.weights[theirs])
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        """Short description.

        Returns
        -------
        str
            Representation.
        """
        kind = "directed" if self.directed else "undirected"
        return f"UniformHypergraph(n={self.n}, k={self.k}, m={self.m}, {kind})"
