"""
Spectral vertex orderings from latent Markov chains.

The latent chain of a hypergraph is built from a weighted adjacency matrix `A_hat`:
columns are normalized, zero columns teleport to `v`, and the result is damped with
`alpha` so that its stationary distribution `pi` is positive. The ordering is the
second left eigenvector of the reversible symmetrization
`(Pi P^T Pi^-1 + P) / 2`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import sparse
from scipy.sparse.linalg import LinearOperator, aslinearoperator, eigsh

from hyperrank.utils import get_logger, uniform

logger = get_logger(__name__)

EIG_TOL = 1e-10
EIG_MAX_ITER = 100_000


class LatentChain(LinearOperator):
    """
    Column-stochastic transition operator of a latent directed graph.

    Computes `P = alpha (A_hat D^+ + v z^T) + (1 - alpha) v e^T`, where `D` holds the
    column sums of `A_hat` and `z` flags its zero columns.

    Parameters
    ----------
    a_hat : scipy.sparse.spmatrix or LinearOperator
        Nonnegative weighted adjacency matrix, entry `(i, j)` weighing `j -> i`.
    alpha : float
        Damping probability in (0, 1].
    v : NDArray
        Teleportation distribution.
    """

    def __init__(
        self,
        a_hat: Union[sparse.spmatrix, LinearOperator],
        alpha: float,
        v: NDArray,
    ) -> None:
        """
        Constructor.

        Parameters
        ----------
        a_hat : scipy.sparse.spmatrix or LinearOperator
            Nonnegative weighted adjacency matrix.
        alpha : float
            Damping probability in (0, 1].
        v : NDArray
            Teleportation distribution.
        """
        self.a_hat = aslinearoperator(a_hat)
        n = self.a_hat.shape[0]
        super().__init__(dtype=np.float64, shape=(n, n))

        degrees = self.a_hat.rmatvec(np.ones(n))
        # tiny negative sums come from rounding in rank-one corrected operators
        positive = degrees > 1e-300
        self.inv_degrees = np.where(positive, 1 / np.where(positive, degrees, 1), 0.0)
        self.zero_columns = (~positive).astype(np.float64)
        self.alpha = float(alpha)
        self.v = np.asarray(v, dtype=np.float64)

    def _matvec(self, x: NDArray) -> NDArray:
        x = np.ravel(x)
        walk = self.a_hat.matvec(self.inv_degrees * x)
        teleport = self.alpha * (self.zero_columns @ x) + (1 - self.alpha) * x.sum()
        return self.alpha * walk + teleport * self.v

    def _rmatvec(self, x: NDArray) -> NDArray:
        x = np.ravel(x)
        walk = self.inv_degrees * self.a_hat.rmatvec(x)
        vx = self.v @ x
        return self.alpha * walk + (
            self.alpha * self.zero_columns + (1 - self.alpha)
        ) * vx


def stationary_distribution(
    chain: LinearOperator,
    tol: float = EIG_TOL,
    max_iter: int = EIG_MAX_ITER,
    x0: Optional[ArrayLike] = None,
) -> NDArray:
    """
    Stationary distribution of a column-stochastic operator by power iteration.

    Parameters
    ----------
    chain : LinearOperator
        Column-stochastic operator.
    tol : float, optional
        Acceptance threshold on `||P pi - pi||_1`, by default 1e-10.
    max_iter : int, optional
        Maximum number of iterations, by default 1e5.
    x0 : ArrayLike, optional
        Starting distribution, by default uniform.

    Returns
    -------
    NDArray
        Stationary distribution.

    Raises
    ------
    ValueError
        If the distribution has a zero entry or if the iteration did not reach
        `tol`.
    """
    n = chain.shape[0]
    pi = uniform(n) if x0 is None else np.asarray(x0, dtype=np.float64)
    pi = pi / pi.sum()

    residual = np.inf
    for _ in range(max_iter):
        nxt = chain.matvec(pi)
        nxt = nxt / nxt.sum()
        residual = float(np.abs(nxt - pi).sum())
        pi = nxt
        if residual <= tol:
            break

    residual = float(np.abs(chain.matvec(pi) - pi).sum())
    if residual > tol:
        raise ValueError(
            f"Stationary distribution did not converge (residual {residual:.2e})."
        )
    if np.any(pi <= 0):
        raise ValueError("Stationary distribution has zero entries.")
    return pi


class SymmetrizedChain(LinearOperator):
    """
    Symmetric form `(B + B^T) / 2` with `B = Pi^(-1/2) P Pi^(1/2)`.

    It is similar to the transpose of `(Pi P^T Pi^-1 + P) / 2`, so its eigenvector
    `u` maps to the left eigenvector `Pi^(-1/2) u` of that matrix.

    Parameters
    ----------
    chain : LinearOperator
        Column-stochastic operator.
    pi : NDArray
        Positive stationary distribution of `chain`.
    """

    def __init__(self, chain: LinearOperator, pi: NDArray) -> None:
        """
        Constructor.

        Parameters
        ----------
        chain : LinearOperator
            Column-stochastic operator.
        pi : NDArray
            Positive stationary distribution of `chain`.
        """
        super().__init__(dtype=np.float64, shape=chain.shape)
        self.chain = chain
        self.sqrt_pi = np.sqrt(pi)

    def _matvec(self, x: NDArray) -> NDArray:
        x = np.ravel(x)
        forward = self.chain.matvec(self.sqrt_pi * x) / self.sqrt_pi
        backward = self.sqrt_pi * self.chain.rmatvec(x / self.sqrt_pi)
        return 0.5 * (forward + backward)

    def _rmatvec(self, x: NDArray) -> NDArray:
        return self._matvec(x)


def second_eigenvector(
    operator: SymmetrizedChain,
    tol: float = EIG_TOL,
    max_iter: int = EIG_MAX_ITER,
    seed: int = 0,
) -> tuple[float, NDArray, float]:
    """
    Eigenpair of the second largest eigenvalue of a symmetrized chain.

    Runs power iteration on `(T + I) / 2`, whose spectrum lies in [0, 1], while
    projecting out the dominant eigenvector `sqrt(pi)`. When the iteration does not
    reach `tol`, the pair is recomputed with Lanczos (`scipy.sparse.linalg.eigsh`).

    Parameters
    ----------
    operator : SymmetrizedChain
        Symmetric operator `T`.
    tol : float, optional
        Tolerance on `||T u - lambda u||_2`, by default 1e-10.
    max_iter : int, optional
        Maximum number of power iterations, by default 1e5.
    seed : int, optional
        Seed of the random start vector, by default 0.

    Returns
    -------
    tuple of (float, NDArray, float)
        Eigenvalue, unit eigenvector of `T` and final residual.
    """
    n = operator.shape[0]
    dominant = operator.sqrt_pi / np.linalg.norm(operator.sqrt_pi)

    rng = np.random.default_rng(seed)
    u = rng.standard_normal(n)
    u -= (dominant @ u) * dominant
    u /= np.linalg.norm(u)

    eigenvalue = 0.0
    residual = np.inf
    for _ in range(max_iter):
        tu = operator.matvec(u)
        eigenvalue = float(u @ tu)
        residual = float(np.linalg.norm(tu - eigenvalue * u))
        if residual <= tol:
            break
        u = 0.5 * (tu + u)
        u -= (dominant @ u) * dominant
        u /= np.linalg.norm(u)

    if residual > tol and n > 2:
        logger.warning(
            f"Deflated power iteration stopped at residual {residual:.2e}, "
            f"recomputing the eigenpair with Lanczos."
        )
        values, vectors = eigsh(
            operator, k=2, which="LA", tol=tol, v0=rng.standard_normal(n)
        )
        index = int(np.argmin(values))
        eigenvalue = float(values[index])
        u = vectors[:, index]
        u -= (dominant @ u) * dominant
        u /= np.linalg.norm(u)
        residual = float(np.linalg.norm(operator.matvec(u) - eigenvalue * u))

    return eigenvalue, u, residual


def orient(x: NDArray, rtol: float = 1e-8) -> NDArray:
    """
    Fix the sign of an eigenvector.

    The first entry whose magnitude exceeds `rtol` times the largest one is made
    negative, so the lowest such vertex leads the ordering whatever the start vector.

    Parameters
    ----------
    x : NDArray
        Eigenvector.
    rtol : float, optional
        Relative magnitude below which entries are treated as zero, by default 1e-8.

    Returns
    -------
    NDArray
        `x` or `-x`.

    Examples
    --------
    >>> from hyperrank.partition import orient
    >>> orient(np.array([1e-12, 2.0, -1.0])).tolist()
    [-1e-12, -2.0, 1.0]
    """
    magnitude = np.abs(x)
    if magnitude.size == 0 or magnitude.max() == 0:
        return x
    first = int(np.argmax(magnitude > rtol * magnitude.max()))
    return -x if x[first] > 0 else x


@dataclass
class PartitionState:
    """
    Intermediate quantities of a spectral ordering.

    Attributes
    ----------
    a_hat : scipy.sparse.spmatrix or LinearOperator
        Latent weighted adjacency matrix.
    chain : LatentChain
        Damped column-stochastic transition operator.
    pi : NDArray
        Stationary distribution of `chain`.
    x_star : NDArray
        Second left eigenvector of the symmetrized chain.
    eigenvalue : float
        Its eigenvalue.
    residual : float
        Final eigen-residual of the symmetric form.
    """

    a_hat: Union[sparse.spmatrix, LinearOperator]
    chain: LatentChain
    pi: NDArray
    x_star: NDArray
    eigenvalue: float
    residual: float

    @property
    def order(self) -> NDArray:
        """Vertices sorted by `x_star`, ties broken by vertex index.

        Returns
        -------
        NDArray
            Vertex permutation.
        """
        return np.lexsort((np.arange(self.x_star.shape[0]), self.x_star))


def spectral_state(
    a_hat: Union[sparse.spmatrix, LinearOperator],
    alpha: float,
    v: Optional[NDArray] = None,
    tol: float = EIG_TOL,
    max_iter: int = EIG_MAX_ITER,
    seed: int = 0,
    pi0: Optional[NDArray] = None,
) -> PartitionState:
    """
    Latent chain, stationary distribution and second left eigenvector of `a_hat`.

    Parameters
    ----------
    a_hat : scipy.sparse.spmatrix or LinearOperator
        Latent weighted adjacency matrix, entry `(i, j)` weighing `j -> i`.
    alpha : float
        Damping probability.
    v : NDArray, optional
        Teleportation distribution, by default uniform.
    tol : float, optional
        Eigen-iteration tolerance, by default 1e-10.
    max_iter : int, optional
        Maximum eigen-iterations, by default 1e5.
    seed : int, optional
        Seed of the eigenvector start, by default 0.
    pi0 : NDArray, optional
        Starting point of the stationary distribution iteration.

    Returns
    -------
    PartitionState
        Spectral quantities.
    """
    n = a_hat.shape[0]
    v = uniform(n) if v is None else v
    chain = LatentChain(a_hat, alpha, v)
    pi = stationary_distribution(chain, tol=tol, max_iter=max_iter, x0=pi0)

    symmetric = SymmetrizedChain(chain, pi)
    eigenvalue, u, residual = second_eigenvector(
        symmetric, tol=tol, max_iter=max_iter, seed=seed
    )
    x_star = orient(u / symmetric.sqrt_pi)

    return PartitionState(
        a_hat=a_hat,
        chain=chain,
        pi=pi,
        x_star=x_star,
        eigenvalue=eigenvalue,
        residual=residual,
    )
