"""Fiber normalization and dangling fiber analysis."""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator

import numpy as np
from numpy.typing import NDArray

from hyperrank.tensor import (
    FiberIndex,
    SparseKTensor,
    delinearize_columns,
    tail_multiplicity,
)
from hyperrank.utils import get_logger

logger = get_logger(__name__)


class DanglingFibers:
    """
    Zero mode-1 fibers of a tensor.

    The set is represented through its complement, the nonzero fibers, so that large
    tensors never materialize their `n^(k-1)` fibers. A fiber is structural when its
    tail repeats an index and sparse otherwise.

    Parameters
    ----------
    n : int
        Tensor dimension.
    k : int
        Tensor order.
    nonzero_tails : NDArray
        Tails of the stored nonzero fibers, shape (m, k-1). Canonical (sorted) tails
        when `semi_symmetric` is True.
    semi_symmetric : bool
        Whether every nonzero tail stands for all its permutations.
    """

    def __init__(
        self, n: int, k: int, nonzero_tails: NDArray, semi_symmetric: bool
    ) -> None:
        """
        Constructor.

        Parameters
        ----------
        n : int
            Tensor dimension.
        k : int
            Tensor order.
        nonzero_tails : NDArray
            Tails of the stored nonzero fibers.
        semi_symmetric : bool
            Whether every nonzero tail stands for all its permutations.
        """
        self.n = n
        self.k = k
        self.semi_symmetric = semi_symmetric
        tails = np.asarray(nonzero_tails, dtype=np.int64).reshape(-1, k - 1)
        # rows sorted lexicographically and distinct
        self.nonzero_tails: NDArray = (
            np.unique(tails, axis=0) if tails.shape[0] > 0 else tails
        )

    @property
    def total(self) -> int:
        """Number of fibers `n^(k-1)`.

        Returns
        -------
        int
            Fiber count.
        """
        return self.n ** (self.k - 1)

    def _is_nonzero(self, tail: tuple[int, ...]) -> bool:
        lo, hi = 0, self.nonzero_tails.shape[0]
        for j, index in enumerate(tail):
            column = self.nonzero_tails[lo:hi, j]
            lo, hi = (
                lo + int(np.searchsorted(column, index, side="left")),
                lo + int(np.searchsorted(column, index, side="right")),
            )
            if lo == hi:
                return False
        return True

    @property
    def nonzero_count(self) -> int:
        """Number of nonzero fibers of the full tensor.

        Returns
        -------
        int
            Non-dangling fiber count.
        """
        if self.semi_symmetric:
            return int(tail_multiplicity(self.nonzero_tails).sum())
        return int(self.nonzero_tails.shape[0])

    @property
    def count(self) -> int:
        """Number of dangling fibers.

        Returns
        -------
        int
            Dangling fiber count.
        """
        return self.total - self.nonzero_count

    @property
    def structural_count(self) -> int:
        """Number of dangling fibers whose tail repeats an index.

        Returns
        -------
        int
            Structural dangling count.
        """
        distinct_total = math.perm(self.n, self.k - 1)
        structural_total = self.total - distinct_total

        tails = self.nonzero_tails
        ordered = np.sort(tails, axis=1)
        repeated = np.any(ordered[:, 1:] == ordered[:, :-1], axis=1)
        if self.semi_symmetric:
            nonzero_structural = int(tail_multiplicity(tails[repeated]).sum())
        else:
            nonzero_structural = int(repeated.sum())
        return structural_total - nonzero_structural

    @property
    def sparse_count(self) -> int:
        """Number of dangling fibers with distinct tail indices.

        Returns
        -------
        int
            Sparse dangling count.
        """
        return self.count - self.structural_count

    def __len__(self) -> int:
        """Number of dangling fibers.

        Returns
        -------
        int
            Dangling fiber count.
        """
        return self.count

    def __contains__(self, fiber: object) -> bool:
        """Whether `fiber` is dangling.

        Parameters
        ----------
        fiber : object
            A `FiberIndex` or a tail tuple.

        Returns
        -------
        bool
            True if the fiber is zero.
        """
        if isinstance(fiber, FiberIndex):
            tail = fiber.tail
        elif isinstance(fiber, tuple):
            tail = fiber
        else:
            return False
        if self.semi_symmetric:
            tail = tuple(sorted(tail))
        if len(tail) != self.k - 1:
            return False
        return not self._is_nonzero(tail)

    def __iter__(self) -> Iterator[FiberIndex]:
        """Lazily iterate the dangling fibers by increasing column index.

        Yields
        ------
        FiberIndex
            Dangling fiber.
        """
        for reversed_tail in itertools.product(range(self.n), repeat=self.k - 1):
            tail = reversed_tail[::-1]
            if tail in self:
                yield FiberIndex(tail, self.n)

    def canonical_dangling_tails(self) -> Iterator[tuple[int, ...]]:
        """Lazily iterate sorted tails whose fibers are all dangling.

        Only meaningful for semi-symmetric tensors.

        Yields
        ------
        tuple of int
            Sorted dangling tail.
        """
        for tail in itertools.combinations_with_replacement(range(self.n), self.k - 1):
            if not self._is_nonzero(tail):
                yield tail

    def canonical_dangling_count(self) -> int:
        """Number of sorted tails whose fibers are dangling.

        Returns
        -------
        int
            Canonical dangling tail count.
        """
        return math.comb(self.n + self.k - 2, self.k - 1) - self.nonzero_tails.shape[0]

    def non_dangling(self) -> list[FiberIndex]:
        """
        Nonzero fibers of the full tensor, sorted by column index.

        Returns
        -------
        list of FiberIndex
            Non-dangling fibers.
        """
        tails: set[tuple[int, ...]] = set()
        for tail in map(tuple, self.nonzero_tails.tolist()):
            if self.semi_symmetric:
                tails.update(itertools.permutations(tail))
            else:
                tails.add(tail)
        fibers = [FiberIndex(t, self.n) for t in tails]
        return sorted(fibers, key=lambda f: f.linear)

    def __repr__(self) -> str:
        """Short description.

        Returns
        -------
        str
            Representation.
        """
        return (
            f"DanglingFibers({self.count} of {self.total}: "
            f"{self.structural_count} structural, {self.sparse_count} sparse)"
        )


def fiber_sums(p: SparseKTensor) -> tuple[NDArray, NDArray]:
    """
    Tails of the stored fibers and their sums.

    Parameters
    ----------
    p : SparseKTensor
        Tensor.

    Returns
    -------
    tuple of (NDArray, NDArray)
        Tails of shape (m, k-1) and sums of shape (m,).
    """
    columns, sums = p.fiber_sums()
    return delinearize_columns(columns, p.n, p.k), sums


def dangling_fibers(p: SparseKTensor) -> DanglingFibers:
    """
    Dangling fibers of `p`.

    Parameters
    ----------
    p : SparseKTensor
        Tensor.

    Returns
    -------
    DanglingFibers
        Zero fibers of `p`.
    """
    tails, sums = fiber_sums(p)
    return DanglingFibers(p.n, p.k, tails[sums != 0], p.semi_symmetric)


def normalize_substochastic(a: SparseKTensor) -> tuple[SparseKTensor, DanglingFibers]:
    """
    Divide every nonzero fiber of `a` by its sum.

    Zero fibers stay zero and are reported as dangling. The result is columnwise
    substochastic with every fiber summing to 0 or 1.

    Parameters
    ----------
    a : SparseKTensor
        Nonnegative tensor.

    Returns
    -------
    tuple of (SparseKTensor, DanglingFibers)
        Normalized tensor and its dangling fibers.

    Raises
    ------
    ValueError
        If `a` has a negative entry.
    """
    if np.any(a.values < 0):
        raise ValueError("Cannot normalize a tensor with negative entries.")

    if a.nnz == 0:
        return a, DanglingFibers(a.n, a.k, a.tails, a.semi_symmetric)

    # group by tail rows, never by linear column
    tails, inverse = np.unique(a.tails, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    sums = np.bincount(inverse, weights=a.values, minlength=tails.shape[0])

    # stored values are positive so every stored fiber has a positive sum
    normalized = a.with_values(a.values / sums[inverse])
    dangling = DanglingFibers(a.n, a.k, tails, a.semi_symmetric)

    logger.info(
        f"Normalized {dangling.nonzero_count} fibers, {dangling.count} of "
        f"{dangling.total} dangling ({dangling.structural_count} structural, "
        f"{dangling.sparse_count} sparse)."
    )
    return normalized, dangling
