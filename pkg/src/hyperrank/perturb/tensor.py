"""Perturbations of columnwise-substochastic tensors."""

from typing import Optional, Union

import numpy as np

from hyperrank.tensor import SparseKTensor, delinearize_columns, unfold
from hyperrank.utils import get_logger

from .simplex import perturb_stochastic

logger = get_logger(__name__)


def perturb_tensor(
    p_bar: SparseKTensor,
    sigma_total: float,
    seed: Optional[Union[int, np.random.Generator]] = None,
) -> SparseKTensor:
    """
    Perturb every non-dangling fiber within its simplex.

    The budget is split equally across the non-dangling fibers of the general
    (expanded) storage, so the unfolding of the perturbation has 1-norm
    `sigma_total`. Dangling fibers are left untouched and the result stays
    columnwise substochastic.

    Parameters
    ----------
    p_bar : SparseKTensor
        Tensor whose nonzero fibers are stochastic.
    sigma_total : float
        1-norm of the perturbation of the unfolding.
    seed : int or numpy.random.Generator, optional
        Seed or generator, by default None.

    Returns
    -------
    SparseKTensor
        Perturbed tensor in general storage, or `p_bar` itself when `sigma_total`
        is zero.

    Raises
    ------
    ValueError
        If `sigma_total` is negative, if there is no non-dangling fiber, or if a
        nonzero fiber is not stochastic.
    """
    if sigma_total < 0:
        raise ValueError(
            f"Perturbation budget must be nonnegative (got {sigma_total})."
        )
    if sigma_total == 0:
        return p_bar

    general = p_bar.expanded()
    columns, fiber = np.unique(general.fiber_columns(), return_inverse=True)
    fiber = fiber.reshape(-1)
    if columns.shape[0] == 0:
        raise ValueError("Tensor has no non-dangling fiber to perturb.")

    n = p_bar.n
    dense = np.zeros((columns.shape[0], n))
    np.add.at(dense, (fiber, general.heads), general.values)

    share = sigma_total / columns.shape[0]
    logger.info(
        f"Perturbing {columns.shape[0]} non-dangling fibers with magnitude "
        f"{share:.3g} each."
    )

    rng = np.random.default_rng(seed)
    for row in range(dense.shape[0]):
        dense[row] += perturb_stochastic(dense[row], share, rng)
    # rounding may leave tiny negative entries on exhausted coordinates
    dense[dense < 0] = 0.0

    fibers, heads = np.nonzero(dense)
    tails = delinearize_columns(columns[fibers], n, p_bar.k)
    indices = np.column_stack([heads, tails]).astype(np.int64)
    return SparseKTensor(n, p_bar.k, indices, dense[fibers, heads])


def unfolded_distance(p: SparseKTensor, q: SparseKTensor) -> float:
    """
    1-norm of the difference of two unfoldings.

    Parameters
    ----------
    p : SparseKTensor
        First tensor.
    q : SparseKTensor
        Second tensor of the same shape.

    Returns
    -------
    float
        `||R(p) - R(q)||_1`, summed over all entries.

    Raises
    ------
    ValueError
        If the tensors differ in dimension or order.
    """
    if (p.n, p.k) != (q.n, q.k):
        raise ValueError("Tensors must have the same dimension and order.")
    difference = unfold(p).tocsr() - unfold(q).tocsr()
    return float(np.abs(difference).sum())
