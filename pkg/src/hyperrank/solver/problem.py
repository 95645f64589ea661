"""PageRank problems on transition tensors."""

from __future__ import annotations

from typing import Optional, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray

from hyperrank.config.support import SupportedCorrection, SupportedModel
from hyperrank.hypergraph import (
    UniformHypergraph,
    dangling_correction,
    transition_tensor,
)
from hyperrank.tensor import SparseKTensor, TensorOperator
from hyperrank.utils import check_stochastic, uniform


class PageRankProblem:
    """
    Multi-linear pseudo-PageRank or multi-linear PageRank problem.

    The problem holds the columnwise-substochastic tensor `p_bar`, the damping
    probability `alpha` and the stochastic vector `v`. Multi-linear PageRank problems
    additionally carry the dangling correction mode used to build the
    columnwise-stochastic operator.

    Parameters
    ----------
    p_bar : SparseKTensor
        Columnwise-substochastic tensor.
    alpha : float
        Probability in [0, 1).
    v : ArrayLike, optional
        Stochastic vector, by default uniform.
    model : SupportedModel or str, optional
        Problem type, by default "mlppr".
    correction : SupportedCorrection or str, optional
        Dangling correction mode of "mpr" problems, by default "implicit".

    Attributes
    ----------
    p_bar : SparseKTensor
        Columnwise-substochastic tensor.
    alpha : float
        Damping probability.
    v : NDArray
        Stochastic vector.
    model : SupportedModel
        Problem type.
    correction : SupportedCorrection
        Dangling correction mode.

    Examples
    --------
    >>> from hyperrank.hypergraph import UniformHypergraph
    >>> from hyperrank.solver import PageRankProblem
    >>> h = UniformHypergraph(3, 3, [(0, 1, 2)])
    >>> problem = PageRankProblem.from_hypergraph(h, alpha=0.2)
    >>> problem.model
    <SupportedModel.MLPPR: 'mlppr'>
    """

    def __init__(
        self,
        p_bar: SparseKTensor,
        alpha: float,
        v: Optional[ArrayLike] = None,
        model: Union[SupportedModel, str] = SupportedModel.MLPPR,
        correction: Union[SupportedCorrection, str] = SupportedCorrection.IMPLICIT,
    ) -> None:
        """
        Constructor.

        Parameters
        ----------
        p_bar : SparseKTensor
            Columnwise-substochastic tensor.
        alpha : float
            Probability in [0, 1).
        v : ArrayLike, optional
            Stochastic vector, by default uniform.
        model : SupportedModel or str, optional
            Problem type, by default "mlppr".
        correction : SupportedCorrection or str, optional
            Dangling correction mode of "mpr" problems, by default "implicit".

        Raises
        ------
        ValueError
            If `alpha` is outside [0, 1), if `v` is not stochastic or if `p_bar` is
            not columnwise substochastic.
        """
        if not 0 <= alpha < 1:
            raise ValueError(f"Alpha must be in [0, 1) (got {alpha}).")
        if not p_bar.is_substochastic():
            raise ValueError("Transition tensor must be columnwise substochastic.")

        self.p_bar = p_bar
        self.alpha = float(alpha)
        self.v: NDArray = check_stochastic(
            uniform(p_bar.n) if v is None else v, p_bar.n
        )
        self.model = SupportedModel(model)
        self.correction = SupportedCorrection(correction)
        self._operator: Optional[TensorOperator] = None

    @classmethod
    def from_hypergraph(
        cls,
        h: UniformHypergraph,
        alpha: float,
        v: Optional[ArrayLike] = None,
        model: Union[SupportedModel, str] = SupportedModel.MLPPR,
        correction: Union[SupportedCorrection, str] = SupportedCorrection.IMPLICIT,
    ) -> PageRankProblem:
        """
        Build the problem of a hypergraph from its normalized adjacency tensor.

        Parameters
        ----------
        h : UniformHypergraph
            Hypergraph.
        alpha : float
            Probability in [0, 1).
        v : ArrayLike, optional
            Stochastic vector, by default uniform.
        model : SupportedModel or str, optional
            Problem type, by default "mlppr".
        correction : SupportedCorrection or str, optional
            Dangling correction mode of "mpr" problems, by default "implicit".

        Returns
        -------
        PageRankProblem
            Problem instance.
        """
        p_bar, _ = transition_tensor(h)
        return cls(p_bar, alpha, v, model=model, correction=correction)

    @property
    def n(self) -> int:
        """Dimension.

        Returns
        -------
        int
            Number of vertices.
        """
        return self.p_bar.n

    @property
    def k(self) -> int:
        """Order.

        Returns
        -------
        int
            Tensor order.
        """
        return self.p_bar.k

    @property
    def operator(self) -> TensorOperator:
        """
        Dangling-corrected columnwise-stochastic operator, built on first access.

        Returns
        -------
        TensorOperator
            Corrected operator.
        """
        if self._operator is None:
            self._operator = dangling_correction(self.p_bar, self.v, self.correction)
        return self._operator

    def with_data(
        self,
        p_bar: Optional[SparseKTensor] = None,
        v: Optional[ArrayLike] = None,
    ) -> PageRankProblem:
        """
        Copy of the problem with a different tensor or vector.

        Parameters
        ----------
        p_bar : SparseKTensor, optional
            Replacement tensor, by default the current one.
        v : ArrayLike, optional
            Replacement vector, by default the current one.

        Returns
        -------
        PageRankProblem
            New problem.
        """
        return PageRankProblem(
            self.p_bar if p_bar is None else p_bar,
            self.alpha,
            self.v if v is None else np.asarray(v),
            model=self.model,
            correction=self.correction,
        )

    def __repr__(self) -> str:
        """Short description.

        Returns
        -------
        str
            Representation.
        """
        return (
            f"PageRankProblem(model={self.model.value}, n={self.n}, k={self.k}, "
            f"alpha={self.alpha})"
        )
