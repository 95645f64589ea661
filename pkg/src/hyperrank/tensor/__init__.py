"""Sparse tensors and contraction kernels."""

__all__ = [
    "FiberIndex",
    "SparseKTensor",
    "TensorOperator",
    "apply",
    "check_fiber_count",
    "contract_to_matrix",
    "delinearize_columns",
    "kronecker_power",
    "linearize_tails",
    "random_semi_symmetric",
    "refold",
    "tail_multiplicity",
    "unfold",
]

from .contraction import apply, contract_to_matrix, kronecker_power, refold, unfold
from .fiber_index import (
    FiberIndex,
    check_fiber_count,
    delinearize_columns,
    linearize_tails,
)
from .operator import TensorOperator
from .sparse_tensor import SparseKTensor, random_semi_symmetric, tail_multiplicity
