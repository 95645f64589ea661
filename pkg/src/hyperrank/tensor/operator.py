"""Common interface of tensors and tensor-like operators used by the solvers."""

from typing import Protocol, runtime_checkable

from numpy.typing import NDArray
from scipy import sparse


@runtime_checkable
class TensorOperator(Protocol):
    """Protocol for order-k operators acting through contractions.

    Implemented by `SparseKTensor` and by the dangling-corrected operators.
    """

    n: int
    k: int

    @property
    def work_per_apply(self) -> int:
        """
        Operation count of one call to `apply`.

        Returns
        -------
        int
            Operation count.
        """

    def apply(self, x: NDArray, threads: int = 1) -> NDArray:
        """
        Contract the operator with `x` along modes 2..k.

        Parameters
        ----------
        x : NDArray
            Vector of length n.
        threads : int, optional
            Number of worker threads, by default 1.

        Returns
        -------
        NDArray
            Vector of length n.
        """

    def contract_to_matrix(self, x: NDArray) -> sparse.spmatrix:
        """
        Contract the operator with `x` along modes 3..k.

        Parameters
        ----------
        x : NDArray
            Vector of length n.

        Returns
        -------
        scipy.sparse.spmatrix
            Matrix of shape (n, n).
        """
