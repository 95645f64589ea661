"""
Sparse contraction kernels.

Contractions iterate the stored entries only and never form the Kronecker power of
the input vector. Semi-symmetric tensors are handled through the multiplicity of
each canonical entry.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np
from numpy.typing import NDArray
from scipy import sparse

from .fiber_index import check_fiber_count, delinearize_columns, linearize_tails
from .sparse_tensor import SparseKTensor

EXTENDED_PRECISION_THRESHOLD = 10_000
"""Dimension above which accumulation switches to extended precision."""


def _check_vector(p: SparseKTensor, x: NDArray) -> NDArray:
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (p.n,):
        raise ValueError(
            f"Vector of shape {x.shape} does not match tensor dimension {p.n}."
        )
    return x


def _entry_weights(
    values: NDArray, multiplicity: NDArray, tails: NDArray, x: NDArray
) -> NDArray:
    return values * multiplicity * np.prod(x[tails], axis=1)


def _accumulate(heads: NDArray, weights: NDArray, n: int, extended: bool) -> NDArray:
    """Scatter-add `weights` into `heads`.

    With `extended`, the sums are carried in `numpy.longdouble`. This is plain
    summation in a wider type, not compensated summation, and equals float64 on
    platforms without an extended type.
    """
    if extended:
        out = np.zeros(n, dtype=np.longdouble)
        np.add.at(out, heads, weights.astype(np.longdouble))
        return out
    return np.bincount(heads, weights=weights, minlength=n)


def apply(
    p: SparseKTensor,
    x: NDArray,
    threads: int = 1,
    extended_precision: Optional[bool] = None,
) -> NDArray:
    """
    Contract `p` with `x` along modes 2..k.

    Returns `y` with `y_i = sum p_{i i_2 ... i_k} x_{i_2} ... x_{i_k}`. With several
    threads the stored entries are split in contiguous chunks whose partial results
    are summed in chunk order, so the result does not depend on scheduling.

    Parameters
    ----------
    p : SparseKTensor
        Tensor.
    x : NDArray
        Vector of length n.
    threads : int, optional
        Number of worker threads, by default 1.
    extended_precision : bool, optional
        Accumulate in `numpy.longdouble`. By default enabled when `n` exceeds
        `EXTENDED_PRECISION_THRESHOLD`.

    Returns
    -------
    NDArray
        Vector `p x^(k-1)`.

    Raises
    ------
    ValueError
        If `x` does not have length n.

    Examples
    --------
    >>> import numpy as np
    >>> from hyperrank.tensor import SparseKTensor, apply
    >>> matrix = SparseKTensor(2, 2, [[0, 1], [1, 0]], [1.0, 2.0])
    >>> apply(matrix, np.array([1.0, 1.0])).tolist()
    [1.0, 2.0]
    """
    x = _check_vector(p, x)
    if extended_precision is None:
        extended_precision = p.n > EXTENDED_PRECISION_THRESHOLD

    if p.nnz == 0:
        return np.zeros(p.n)

    if threads <= 1 or p.nnz < 2 * threads:
        weights = _entry_weights(p.values, p.multiplicity, p.tails, x)
        return np.asarray(
            _accumulate(p.heads, weights, p.n, extended_precision), dtype=np.float64
        )

    bounds = np.linspace(0, p.nnz, threads + 1).astype(np.int64)

    def partial(chunk: int) -> NDArray:
        lo, hi = bounds[chunk], bounds[chunk + 1]
        weights = _entry_weights(
            p.values[lo:hi], p.multiplicity[lo:hi], p.tails[lo:hi], x
        )
        return _accumulate(p.heads[lo:hi], weights, p.n, extended_precision)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        partials = list(pool.map(partial, range(threads)))

    total = partials[0]
    for part in partials[1:]:
        total = total + part
    return np.asarray(total, dtype=np.float64)


def contract_to_matrix(p: SparseKTensor, x: NDArray) -> sparse.csr_matrix:
    """
    Contract `p` with `x` along modes 3..k.

    Returns the n x n matrix `M` with
    `M_{i_1 i_2} = sum p_{i_1 ... i_k} x_{i_3} ... x_{i_k}`, so that
    `M @ x == apply(p, x)`. For k = 3 this is the 3-mode product of `p` with `x`.

    For a canonical entry with sorted tail `T`, every distinct value `a` of `T`
    appears in second position in `multiplicity * c_a / (k - 1)` of the represented
    entries, where `c_a` is the number of occurrences of `a` in `T`.

    Parameters
    ----------
    p : SparseKTensor
        Tensor of order at least 3.
    x : NDArray
        Vector of length n.

    Returns
    -------
    scipy.sparse.csr_matrix
        Contracted matrix.

    Raises
    ------
    ValueError
        If the order is 2 or `x` does not have length n.
    """
    if p.k < 3:
        raise ValueError(
            f"Contraction to a matrix requires a tensor of order at least 3 "
            f"(got {p.k})."
        )
    x = _check_vector(p, x)

    tails = p.tails
    width = p.k - 1

    if not p.semi_symmetric:
        weights = p.values * np.prod(x[tails[:, 1:]], axis=1)
        matrix = sparse.coo_matrix(
            (weights, (p.heads, tails[:, 0])), shape=(p.n, p.n)
        ).tocsr()
        matrix.eliminate_zeros()
        return matrix

    rows = []
    cols = []
    data = []
    for j in range(width):
        # one contribution per distinct tail value, taken at its first occurrence
        first = np.ones(p.nnz, dtype=bool) if j == 0 else tails[:, j] != tails[:, j - 1]
        if not np.any(first):
            continue
        sub_tails = tails[first]
        value = sub_tails[:, j]
        count = np.sum(sub_tails == value[:, None], axis=1)
        others = np.delete(sub_tails, j, axis=1)
        weights = (
            p.values[first]
            * p.multiplicity[first]
            * count
            / width
            * np.prod(x[others], axis=1)
        )
        rows.append(p.heads[first])
        cols.append(value)
        data.append(weights)

    if not data:
        return sparse.csr_matrix((p.n, p.n))

    matrix = sparse.coo_matrix(
        (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
        shape=(p.n, p.n),
    ).tocsr()
    matrix.eliminate_zeros()
    return matrix


def unfold(p: SparseKTensor) -> sparse.coo_matrix:
    """
    Mode-1 unfolding of `p` as an `n x n^(k-1)` coordinate matrix.

    Column indices follow `FiberIndex` linearization (0-based).

    Parameters
    ----------
    p : SparseKTensor
        Tensor.

    Returns
    -------
    scipy.sparse.coo_matrix
        Unfolded matrix.

    Raises
    ------
    OverflowError
        If `n^(k-1)` does not fit in a 64 bit index.
    """
    count = check_fiber_count(p.n, p.k)
    full = p.expanded()
    columns = linearize_tails(full.tails, p.n)
    return sparse.coo_matrix(
        (full.values, (full.heads, columns)), shape=(p.n, count)
    )


def refold(matrix: sparse.spmatrix, n: int, k: int) -> SparseKTensor:
    """
    Inverse of `unfold`, returning a tensor in general storage.

    Parameters
    ----------
    matrix : scipy.sparse.spmatrix
        Matrix of shape `(n, n^(k-1))`.
    n : int
        Tensor dimension.
    k : int
        Tensor order.

    Returns
    -------
    SparseKTensor
        Tensor whose unfolding is `matrix`.

    Raises
    ------
    ValueError
        If the matrix shape does not match `n` and `k`.
    """
    count = check_fiber_count(n, k)
    if matrix.shape != (n, count):
        raise ValueError(
            f"Matrix of shape {matrix.shape} is not the unfolding of an order {k} "
            f"tensor of dimension {n}."
        )
    coo = sparse.coo_matrix(matrix)
    coo.sum_duplicates()
    coo.eliminate_zeros()
    tails = delinearize_columns(coo.col.astype(np.int64), n, k)
    indices = np.column_stack([coo.row.astype(np.int64), tails])
    return SparseKTensor(n, k, indices, coo.data)


def kronecker_power(x: NDArray, power: int) -> NDArray:
    """
    Dense Kronecker power ordered like the unfolding columns, for small checks.

    Parameters
    ----------
    x : NDArray
        Vector.
    power : int
        Number of factors.

    Returns
    -------
    NDArray
        Vector of length `len(x)^power`.
    """
    result = np.ones(1)
    for _ in range(power):
        # later tail positions vary slowest
        result = np.kron(x, result)
    return result
