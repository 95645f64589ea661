"""Coordinate-form sparse tensors of order k."""

from __future__ import annotations

import itertools
import math
from collections.abc import Mapping
from typing import Optional

import numpy as np
from numpy.typing import NDArray
from scipy import sparse

from .fiber_index import linearize_tails


def tail_multiplicity(tails: NDArray) -> NDArray:
    """
    Number of distinct permutations of each (sorted) tail tuple.

    For a sorted tail with value counts `c_1, ..., c_r`, this is the multinomial
    `(k-1)! / (c_1! ... c_r!)`.

    Parameters
    ----------
    tails : NDArray
        Row-wise sorted integer array of shape (m, k-1).

    Returns
    -------
    NDArray
        Multiplicities of shape (m,), dtype int64.
    """
    m, width = tails.shape
    denominator = np.ones(m, dtype=np.int64)
    run = np.ones(m, dtype=np.int64)
    for j in range(1, width):
        same = tails[:, j] == tails[:, j - 1]
        run = np.where(same, run + 1, 1)
        # product of running lengths is the product of the count factorials
        denominator *= run
    return math.factorial(width) // denominator


class SparseKTensor:
    """
    Sparse order-k tensor of dimension n in coordinate form.

    Two storage layouts are supported. A general tensor stores every nonzero entry
    `(i_1, ..., i_k)`. A semi-symmetric tensor, whose entries are invariant under
    permutations of the positions 2..k, stores only the canonical entries with a
    sorted tail; every canonical entry stands for `multiplicity` distinct entries.

    Instances are immutable: the index and value arrays are read-only.

    Parameters
    ----------
    n : int
        Dimension.
    k : int
        Order, at least 2.
    indices : NDArray
        Integer array of shape (nnz, k).
    values : NDArray
        Nonzero values of shape (nnz,).
    semi_symmetric : bool, optional
        Whether `indices` holds canonical entries of a semi-symmetric tensor, by
        default False.

    Attributes
    ----------
    n : int
        Dimension.
    k : int
        Order.
    indices : NDArray
        Stored index tuples, shape (nnz, k).
    values : NDArray
        Stored values, shape (nnz,).
    semi_symmetric : bool
        Storage layout flag.
    multiplicity : NDArray
        Number of full entries represented by each stored entry.
    """

    def __init__(
        self,
        n: int,
        k: int,
        indices: NDArray,
        values: NDArray,
        semi_symmetric: bool = False,
    ) -> None:
        """
        Constructor.

        Parameters
        ----------
        n : int
            Dimension.
        k : int
            Order, at least 2.
        indices : NDArray
            Integer array of shape (nnz, k).
        values : NDArray
            Nonzero values of shape (nnz,).
        semi_symmetric : bool, optional
            Whether `indices` holds canonical entries of a semi-symmetric tensor, by
            default False.

        Raises
        ------
        ValueError
            If the order or dimension is invalid, if shapes disagree, if an index is
            out of range, if a value is zero or not finite, if a canonical tail is
            not sorted, or if an index tuple is stored twice.
        """
        if k < 2:
            raise ValueError(f"Tensor order must be at least 2 (got {k}).")
        if n < 1:
            raise ValueError(f"Tensor dimension must be at least 1 (got {n}).")

        indices = np.asarray(indices, dtype=np.int64).reshape(-1, k)
        values = np.asarray(values, dtype=np.float64).reshape(-1)

        if indices.shape[0] != values.shape[0]:
            raise ValueError(
                f"Got {indices.shape[0]} index tuples but {values.shape[0]} values."
            )
        if indices.size > 0 and (indices.min() < 0 or indices.max() >= n):
            raise ValueError(f"Tensor indices must lie in [0, {n}).")
        if np.any(values == 0) or not np.all(np.isfinite(values)):
            raise ValueError("Stored tensor values must be finite and nonzero.")
        if semi_symmetric and k > 2 and np.any(np.diff(indices[:, 1:], axis=1) < 0):
            raise ValueError("Semi-symmetric storage requires sorted tail indices.")

        self.n = int(n)
        self.k = int(k)
        self.semi_symmetric = bool(semi_symmetric)

        # lexicographic order makes every reduction deterministic
        order = np.lexsort(indices.T[::-1]) if indices.shape[0] > 0 else []
        indices = indices[order]
        values = values[order]

        if indices.shape[0] > 1 and np.any(np.all(indices[1:] == indices[:-1], axis=1)):
            raise ValueError("Duplicate index tuples in sparse tensor.")

        if self.semi_symmetric:
            multiplicity = tail_multiplicity(indices[:, 1:])
        else:
            multiplicity = np.ones(indices.shape[0], dtype=np.int64)

        indices.setflags(write=False)
        values.setflags(write=False)
        multiplicity.setflags(write=False)

        self.indices: NDArray = indices
        self.values: NDArray = values
        self.multiplicity: NDArray = multiplicity

    @classmethod
    def from_dict(
        cls,
        n: int,
        k: int,
        entries: Mapping[tuple[int, ...], float],
        semi_symmetric: bool = False,
        atol: float = 0.0,
    ) -> SparseKTensor:
        """
        Create a tensor from a mapping of full index tuples to values.

        Zero values are dropped. With `semi_symmetric=True`, every permutation of the
        tail of every entry must be present with the same value; only the canonical
        entries are then kept.

        Parameters
        ----------
        n : int
            Dimension.
        k : int
            Order.
        entries : Mapping[tuple[int, ...], float]
            Full entries.
        semi_symmetric : bool, optional
            Whether to compress to canonical semi-symmetric storage, by default False.
        atol : float, optional
            Tolerance when comparing permuted entries, by default 0.0.

        Returns
        -------
        SparseKTensor
            New tensor.

        Raises
        ------
        ValueError
            If `semi_symmetric` is requested but the entries are not semi-symmetric.
        """
        items = [(tuple(key), float(val)) for key, val in entries.items() if val != 0]
        if not semi_symmetric:
            indices = np.array([key for key, _ in items], dtype=np.int64).reshape(-1, k)
            values = np.array([val for _, val in items], dtype=np.float64)
            return cls(n, k, indices, values)

        lookup = dict(items)
        canonical: dict[tuple[int, ...], float] = {}
        for key, val in items:
            head, tail = key[0], key[1:]
            for perm in set(itertools.permutations(tail)):
                other = lookup.get((head, *perm))
                if other is None or abs(other - val) > atol:
                    raise ValueError(
                        f"Entries are not semi-symmetric: {key} has no matching "
                        f"permutation {(head, *perm)}."
                    )
            canonical[(head, *sorted(tail))] = val

        indices = np.array(list(canonical.keys()), dtype=np.int64).reshape(-1, k)
        values = np.array(list(canonical.values()), dtype=np.float64)
        return cls(n, k, indices, values, semi_symmetric=True)

    @classmethod
    def zeros(cls, n: int, k: int, semi_symmetric: bool = True) -> SparseKTensor:
        """
        Create an all-zero tensor.

        Parameters
        ----------
        n : int
            Dimension.
        k : int
            Order.
        semi_symmetric : bool, optional
            Storage layout flag, by default True.

        Returns
        -------
        SparseKTensor
            Empty tensor.
        """
        return cls(
            n,
            k,
            np.empty((0, k), dtype=np.int64),
            np.empty(0, dtype=np.float64),
            semi_symmetric=semi_symmetric,
        )

    @property
    def nnz(self) -> int:
        """Number of stored entries.

        Returns
        -------
        int
            Stored entry count.
        """
        return int(self.values.shape[0])

    @property
    def nnz_expanded(self) -> int:
        """Number of nonzero entries of the full tensor.

        Returns
        -------
        int
            Full entry count.
        """
        return int(self.multiplicity.sum())

    @property
    def heads(self) -> NDArray:
        """First index of every stored entry.

        Returns
        -------
        NDArray
            Heads, shape (nnz,).
        """
        return self.indices[:, 0]

    @property
    def tails(self) -> NDArray:
        """Indices 2..k of every stored entry.

        Returns
        -------
        NDArray
            Tails, shape (nnz, k-1).
        """
        return self.indices[:, 1:]

    @property
    def work_per_apply(self) -> int:
        """Operation count of one contraction `P x^(k-1)`.

        Returns
        -------
        int
            Stored entries times order.
        """
        return self.nnz * self.k

    def with_values(self, values: NDArray) -> SparseKTensor:
        """
        Return a tensor with the same sparsity pattern and new values.

        Entries whose new value is exactly zero are dropped.

        Parameters
        ----------
        values : NDArray
            New values, aligned with `indices`.

        Returns
        -------
        SparseKTensor
            New tensor with the same layout.
        """
        values = np.asarray(values, dtype=np.float64)
        keep = values != 0
        return SparseKTensor(
            self.n,
            self.k,
            self.indices[keep],
            values[keep],
            semi_symmetric=self.semi_symmetric,
        )

    def expanded(self) -> SparseKTensor:
        """
        Return the general-layout tensor with every permutation materialized.

        Returns
        -------
        SparseKTensor
            Equivalent tensor with `semi_symmetric=False`.
        """
        if not self.semi_symmetric or self.k == 2:
            return SparseKTensor(self.n, self.k, self.indices, self.values)

        rows = []
        vals = []
        for index, value in zip(self.indices.tolist(), self.values.tolist()):
            for perm in set(itertools.permutations(index[1:])):
                rows.append((index[0], *perm))
                vals.append(value)
        return SparseKTensor(
            self.n,
            self.k,
            np.array(rows, dtype=np.int64).reshape(-1, self.k),
            np.array(vals, dtype=np.float64),
        )

    def to_dict(self) -> dict[tuple[int, ...], float]:
        """
        Return all nonzero entries of the full tensor.

        Returns
        -------
        dict
            Mapping of full index tuples to values.
        """
        full = self.expanded()
        return {
            tuple(index): value
            for index, value in zip(full.indices.tolist(), full.values.tolist())
        }

    def to_dense(self) -> NDArray:
        """
        Return the dense `n^k` array, for small tensors only.

        Returns
        -------
        NDArray
            Dense array of shape (n,) * k.
        """
        dense = np.zeros((self.n,) * self.k)
        full = self.expanded()
        if full.nnz > 0:
            dense[tuple(full.indices.T)] = full.values
        return dense

    def fiber_columns(self) -> NDArray:
        """
        0-based unfolding column of the tail of every stored entry.

        Returns
        -------
        NDArray
            Column indices, shape (nnz,).
        """
        return linearize_tails(self.tails, self.n)

    def fiber_sums(self) -> tuple[NDArray, NDArray]:
        """
        Sums of the stored fibers.

        For semi-symmetric storage one canonical fiber represents all the fibers
        sharing its tail multiset, which all have the same sum.

        Returns
        -------
        tuple of (NDArray, NDArray)
            Unique 0-based columns of stored fibers and their sums.
        """
        columns = self.fiber_columns()
        unique, inverse = np.unique(columns, return_inverse=True)
        sums = np.bincount(inverse, weights=self.values, minlength=unique.shape[0])
        return unique, sums

    def is_nonnegative(self) -> bool:
        """Whether all stored values are positive.

        Returns
        -------
        bool
            True if the tensor is nonnegative.
        """
        return bool(np.all(self.values > 0))

    def is_substochastic(self, atol: float = 1e-12) -> bool:
        """Whether the tensor is nonnegative with every fiber summing to at most 1.

        Parameters
        ----------
        atol : float, optional
            Tolerance on fiber sums, by default 1e-12.

        Returns
        -------
        bool
            True for columnwise-substochastic tensors.
        """
        if not self.is_nonnegative():
            return False
        _, sums = self.fiber_sums()
        return bool(np.all(sums <= 1 + atol))

    def apply(self, x: NDArray, threads: int = 1) -> NDArray:
        """
        Contract with `x` along modes 2..k, see `hyperrank.tensor.apply`.

        Parameters
        ----------
        x : NDArray
            Vector of length n.
        threads : int, optional
            Number of worker threads, by default 1.

        Returns
        -------
        NDArray
            Vector `P x^(k-1)`.
        """
        from .contraction import apply

        return apply(self, x, threads=threads)

    def contract_to_matrix(self, x: NDArray) -> sparse.csr_matrix:
        """
        Contract with `x` along modes 3..k, see `hyperrank.tensor.contract_to_matrix`.

        Parameters
        ----------
        x : NDArray
            Vector of length n.

        Returns
        -------
        scipy.sparse.csr_matrix
            Matrix `P x^(k-2)`.
        """
        from .contraction import contract_to_matrix

        return contract_to_matrix(self, x)

    def __repr__(self) -> str:
        """Short description.

        Returns
        -------
        str
            Representation.
        """
        layout = "semi-symmetric" if self.semi_symmetric else "general"
        return f"SparseKTensor(n={self.n}, k={self.k}, nnz={self.nnz}, {layout})"


def random_semi_symmetric(
    n: int, k: int, density: float, seed: Optional[int] = None
) -> SparseKTensor:
    """
    Random nonnegative semi-symmetric tensor, used by tests and benchmarks.

    Parameters
    ----------
    n : int
        Dimension.
    k : int
        Order.
    density : float
        Probability that a canonical entry is nonzero.
    seed : int, optional
        Random seed, by default None.

    Returns
    -------
    SparseKTensor
        Random tensor with canonical storage.
    """
    rng = np.random.default_rng(seed)
    rows = [
        (head, *tail)
        for head in range(n)
        for tail in itertools.combinations_with_replacement(range(n), k - 1)
        if rng.random() < density
    ]
    values = rng.uniform(0.1, 1.0, size=len(rows))
    return SparseKTensor(
        n, k, np.array(rows, dtype=np.int64).reshape(-1, k), values, semi_symmetric=True
    )
