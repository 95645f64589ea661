"""Mode-1 fiber indices and their linearization."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

_INT64_MAX = np.iinfo(np.int64).max


def check_fiber_count(n: int, k: int) -> int:
    """
    Return the number of mode-1 fibers `n^(k-1)`, checking it fits in int64.

    Parameters
    ----------
    n : int
        Tensor dimension.
    k : int
        Tensor order.

    Returns
    -------
    int
        Number of fibers.

    Raises
    ------
    OverflowError
        If `n^(k-1)` is not representable as a signed 64 bit integer.
    """
    count = n ** (k - 1)
    if count > _INT64_MAX:
        raise OverflowError(
            f"Number of fibers n^(k-1) = {n}^{k - 1} does not fit in a 64 bit index."
        )
    return count


def linearize_tails(tails: NDArray, n: int) -> NDArray:
    """
    Linearize 0-based tail tuples into 0-based column indices.

    The column of tail `(i_2, ..., i_k)` is `i_2 + i_3 n + ... + i_k n^(k-2)`, which is
    the 1-based formula `l = j_2 + (j_3 - 1) n + ... + (j_k - 1) n^(k-2)` shifted by
    one.

    Parameters
    ----------
    tails : NDArray
        Integer array of shape (m, k-1).
    n : int
        Tensor dimension.

    Returns
    -------
    NDArray
        Column indices of shape (m,), dtype int64.
    """
    tails = np.asarray(tails, dtype=np.int64)
    check_fiber_count(n, tails.shape[1] + 1)

    columns = np.zeros(tails.shape[0], dtype=np.int64)
    stride = 1
    for j in range(tails.shape[1]):
        columns += tails[:, j] * stride
        stride *= n
    return columns


def delinearize_columns(columns: NDArray, n: int, k: int) -> NDArray:
    """
    Invert `linearize_tails`.

    Parameters
    ----------
    columns : NDArray
        0-based column indices.
    n : int
        Tensor dimension.
    k : int
        Tensor order.

    Returns
    -------
    NDArray
        Tail tuples of shape (m, k-1).
    """
    columns = np.asarray(columns, dtype=np.int64).copy()
    tails = np.empty((columns.shape[0], k - 1), dtype=np.int64)
    for j in range(k - 1):
        tails[:, j] = columns % n
        columns //= n
    return tails


@dataclass(frozen=True)
class FiberIndex:
    """
    Mode-1 fiber of an order-k tensor, identified by its tail tuple.

    Attributes
    ----------
    tail : tuple of int
        0-based indices `(i_2, ..., i_k)`.
    n : int
        Tensor dimension.

    Examples
    --------
    >>> from hyperrank.tensor import FiberIndex
    >>> FiberIndex((1, 2), n=4).linear
    10
    >>> FiberIndex.from_linear(10, n=4, k=3).tail
    (1, 2)
    """

    tail: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        """Validate the tail tuple.

        Raises
        ------
        ValueError
            If an index is outside `[0, n)`.
        """
        if any(i < 0 or i >= self.n for i in self.tail):
            raise ValueError(
                f"Fiber tail {self.tail} has indices outside [0, {self.n})."
            )

    @property
    def linear(self) -> int:
        """1-based column index of the fiber in the mode-1 unfolding.

        Returns
        -------
        int
            Column index in `[1, n^(k-1)]`.
        """
        column = 0
        stride = 1
        for i in self.tail:
            column += i * stride
            stride *= self.n
        return column + 1

    @property
    def is_structural(self) -> bool:
        """Whether the tail repeats an index, which no hyperedge can fill.

        Returns
        -------
        bool
            True for repeated tail indices.
        """
        return len(set(self.tail)) < len(self.tail)

    def label(self) -> str:
        """Compact 1-based label, e.g. "23" for tail (1, 2).

        Returns
        -------
        str
            Concatenated 1-based indices, separated by commas when `n > 9`.
        """
        sep = "" if self.n <= 9 else ","
        return sep.join(str(i + 1) for i in self.tail)

    @classmethod
    def from_linear(cls, linear: int, n: int, k: int) -> FiberIndex:
        """Build a fiber index from its 1-based column index.

        Parameters
        ----------
        linear : int
            1-based column index.
        n : int
            Tensor dimension.
        k : int
            Tensor order.

        Returns
        -------
        FiberIndex
            Corresponding fiber.

        Raises
        ------
        ValueError
            If `linear` is outside `[1, n^(k-1)]`.
        """
        count = check_fiber_count(n, k)
        if linear < 1 or linear > count:
            raise ValueError(f"Column index {linear} outside [1, {count}].")

        column = linear - 1
        tail = []
        for _ in range(k - 1):
            tail.append(column % n)
            column //= n
        return cls(tuple(tail), n)
