"""
Dangling correction of columnwise-substochastic tensors.

The corrected operator adds `v * (1 - s)` to every fiber with sum `s`, turning a
columnwise-substochastic tensor into a columnwise-stochastic one. It can be built
explicitly as a sparse tensor or applied implicitly through contractions.
"""

from __future__ import annotations

from typing import Union

import numpy as np
from numpy.typing import NDArray
from scipy import sparse
from scipy.sparse.linalg import LinearOperator

from hyperrank.config.support import SupportedCorrection
from hyperrank.tensor import SparseKTensor, TensorOperator
from hyperrank.utils import check_stochastic, get_logger, get_ram_size

from .normalization import dangling_fibers, fiber_sums

logger = get_logger(__name__)

DEFICIT_ATOL = 1e-15
"""Fiber deficits below this value are not corrected."""


class ImplicitCorrection:
    """
    Dangling-corrected operator applied without materialization.

    Computes `P x^(k-1) = P_bar x^(k-1) + v ((e^T x)^(k-1) - e^T P_bar x^(k-1))`.

    Parameters
    ----------
    p_bar : SparseKTensor
        Columnwise-substochastic tensor.
    v : NDArray
        Stochastic vector.

    Attributes
    ----------
    p_bar : SparseKTensor
        Uncorrected tensor.
    v : NDArray
        Correction distribution.
    n : int
        Dimension.
    k : int
        Order.
    """

    def __init__(self, p_bar: SparseKTensor, v: NDArray) -> None:
        """
        Constructor.

        Parameters
        ----------
        p_bar : SparseKTensor
            Columnwise-substochastic tensor.
        v : NDArray
            Stochastic vector.
        """
        self.p_bar = p_bar
        self.v = v
        self.n = p_bar.n
        self.k = p_bar.k

    @property
    def work_per_apply(self) -> int:
        """Sparse contraction work plus the three length-n correction passes.

        Returns
        -------
        int
            Operation count.
        """
        return self.p_bar.work_per_apply + 3 * self.n

    def apply(self, x: NDArray, threads: int = 1) -> NDArray:
        """
        Contract the corrected operator with `x` along modes 2..k.

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
        y = self.p_bar.apply(x, threads=threads)
        deficit = np.sum(x) ** (self.k - 1) - np.sum(y)
        return y + deficit * self.v

    def contract_to_matrix(self, x: NDArray) -> LinearOperator:
        """
        Contract the corrected operator with `x` along modes 3..k.

        The result `P_bar x^(k-2) + v (s^(k-2) e^T - e^T P_bar x^(k-2))`, with
        `s = e^T x`, is a sparse matrix plus a rank-one term and is returned as a
        linear operator.

        Parameters
        ----------
        x : NDArray
            Vector of length n.

        Returns
        -------
        scipy.sparse.linalg.LinearOperator
            Operator of shape (n, n) supporting `matvec` and `rmatvec`.
        """
        matrix = self.p_bar.contract_to_matrix(x)
        scale = float(np.sum(x)) ** (self.k - 2)
        weights = scale - np.asarray(matrix.sum(axis=0)).ravel()
        return RankOneUpdate(matrix, self.v, weights)

    def __repr__(self) -> str:
        """Short description.

        Returns
        -------
        str
            Representation.
        """
        return f"ImplicitCorrection(n={self.n}, k={self.k}, nnz={self.p_bar.nnz})"


class RankOneUpdate(LinearOperator):
    """
    Linear operator `M + u w^T` for a sparse matrix `M`.

    Parameters
    ----------
    matrix : scipy.sparse.spmatrix
        Sparse part.
    u : NDArray
        Left vector.
    w : NDArray
        Right vector.
    """

    def __init__(self, matrix: sparse.spmatrix, u: NDArray, w: NDArray) -> None:
        """
        Constructor.

        Parameters
        ----------
        matrix : scipy.sparse.spmatrix
            Sparse part.
        u : NDArray
            Left vector.
        w : NDArray
            Right vector.
        """
        super().__init__(dtype=np.float64, shape=matrix.shape)
        self.matrix = sparse.csr_matrix(matrix)
        self.u = np.asarray(u, dtype=np.float64)
        self.w = np.asarray(w, dtype=np.float64)

    def _matvec(self, x: NDArray) -> NDArray:
        x = np.ravel(x)
        return self.matrix @ x + self.u * (self.w @ x)

    def _rmatvec(self, x: NDArray) -> NDArray:
        x = np.ravel(x)
        return self.matrix.T @ x + self.w * (self.u @ x)

    def toarray(self) -> NDArray:
        """
        Dense matrix, for small problems only.

        Returns
        -------
        NDArray
            Dense array of shape (n, n).
        """
        return self.matrix.toarray() + np.outer(self.u, self.w)


def _estimate_explicit_mb(entries: int, k: int) -> float:
    # int64 indices, float64 value, int64 multiplicity per stored entry
    return entries * (8 * k + 16) / 1024**2


def explicit_correction(p_bar: SparseKTensor, v: NDArray) -> SparseKTensor:
    """
    Materialize the dangling-corrected tensor.

    Every fiber with deficit `d = 1 - s` receives `v_i * d` at every `i` in the
    support of `v`. For semi-symmetric input the correction is added on the sorted
    tails only and the result stays semi-symmetric.

    Parameters
    ----------
    p_bar : SparseKTensor
        Columnwise-substochastic tensor.
    v : NDArray
        Stochastic vector.

    Returns
    -------
    SparseKTensor
        Columnwise-stochastic tensor.

    Raises
    ------
    MemoryError
        If the estimated size of the corrected tensor exceeds the available RAM.
    """
    support = np.nonzero(v)[0]
    dangling = dangling_fibers(p_bar)

    if p_bar.semi_symmetric:
        dangling_tails = dangling.canonical_dangling_count()
    else:
        dangling_tails = dangling.count

    tails, sums = fiber_sums(p_bar)
    partial = sums < 1 - DEFICIT_ATOL
    extra = (dangling_tails + int(partial.sum())) * support.shape[0]

    needed = _estimate_explicit_mb(p_bar.nnz + extra, p_bar.k)
    available = get_ram_size()
    if needed > available:
        raise MemoryError(
            f"Explicit dangling correction needs about {needed:.0f} MB but only "
            f"{available:.0f} MB are available. Use the implicit correction instead."
        )

    logger.info(
        f"Explicit dangling correction adds {extra} entries to {p_bar.nnz} stored "
        f"entries ({needed:.1f} MB)."
    )

    blocks: list[NDArray] = []
    values: list[NDArray] = []

    if dangling_tails > 0:
        if p_bar.semi_symmetric:
            tail_iter = dangling.canonical_dangling_tails()
        else:
            tail_iter = (f.tail for f in dangling)
        zero_tails = np.array(list(tail_iter), dtype=np.int64).reshape(-1, p_bar.k - 1)
        deficits = np.ones(zero_tails.shape[0])
        blocks.append(zero_tails)
        values.append(deficits)

    if np.any(partial):
        blocks.append(tails[partial])
        values.append(1 - sums[partial])

    if not blocks:
        return p_bar

    corrected_tails = np.concatenate(blocks)
    corrected_deficits = np.concatenate(values)

    heads = np.repeat(support, corrected_tails.shape[0])
    rep_tails = np.tile(corrected_tails, (support.shape[0], 1))
    rep_values = np.repeat(v[support], corrected_tails.shape[0]) * np.tile(
        corrected_deficits, support.shape[0]
    )

    indices = np.concatenate([p_bar.indices, np.column_stack([heads, rep_tails])])
    all_values = np.concatenate([p_bar.values, rep_values])

    # partially filled fibers may already hold entries at the new positions
    unique, inverse = np.unique(indices, axis=0, return_inverse=True)
    merged = np.bincount(inverse.ravel(), weights=all_values, minlength=unique.shape[0])
    keep = merged != 0

    return SparseKTensor(
        p_bar.n,
        p_bar.k,
        unique[keep],
        merged[keep],
        semi_symmetric=p_bar.semi_symmetric,
    )


def dangling_correction(
    p_bar: SparseKTensor,
    v: NDArray,
    mode: Union[SupportedCorrection, str] = SupportedCorrection.IMPLICIT,
) -> TensorOperator:
    """
    Columnwise-stochastic operator obtained by correcting the dangling fibers.

    Parameters
    ----------
    p_bar : SparseKTensor
        Columnwise-substochastic tensor.
    v : NDArray
        Stochastic vector.
    mode : SupportedCorrection or str, optional
        "explicit" materializes the corrected tensor, "implicit" applies the
        correction on the fly, by default implicit.

    Returns
    -------
    TensorOperator
        Corrected operator.

    Raises
    ------
    ValueError
        If `v` is not a stochastic vector or `mode` is not supported.
    """
    v = check_stochastic(v, p_bar.n)
    mode = SupportedCorrection(mode)

    if mode == SupportedCorrection.EXPLICIT:
        return explicit_correction(p_bar, v)
    return ImplicitCorrection(p_bar, v)


def contract_corrected(operator: TensorOperator, x: NDArray) -> NDArray:
    """
    Dense `P x^(k-2)` of a corrected operator, for small problems and tests.

    Parameters
    ----------
    operator : TensorOperator
        Explicit or implicit corrected operator.
    x : NDArray
        Vector of length n.

    Returns
    -------
    NDArray
        Dense matrix of shape (n, n).
    """
    matrix = operator.contract_to_matrix(x)
    return as_dense(matrix)


def as_dense(matrix: Union[sparse.spmatrix, LinearOperator, NDArray]) -> NDArray:
    """
    Dense array of a sparse matrix, a linear operator or an array.

    Parameters
    ----------
    matrix : scipy.sparse.spmatrix, LinearOperator or NDArray
        Matrix-like object.

    Returns
    -------
    NDArray
        Dense array.
    """
    if isinstance(matrix, RankOneUpdate):
        return matrix.toarray()
    if sparse.issparse(matrix):
        return matrix.toarray()
    if isinstance(matrix, LinearOperator):
        return matrix @ np.eye(matrix.shape[1])
    return np.asarray(matrix)
