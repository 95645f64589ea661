"""hyperrank Pydantic configuration models.

Sub-configurations live in `*_model` modules, while `*_configuration` is reserved for
the main `HyperRankConfiguration`.
"""

__all__ = [
    "HyperRankConfiguration",
    "PartitionConfig",
    "PerturbationConfig",
    "PerturbationSpec",
    "SolverConfig",
    "SubspaceConfig",
    "configuration_factory",
    "create_solver_configuration",
    "load_configuration",
    "save_configuration",
]

from .configuration import HyperRankConfiguration
from .configuration_factories import configuration_factory, create_solver_configuration
from .configuration_io import load_configuration, save_configuration
from .partition_model import PartitionConfig
from .perturbation_model import PerturbationConfig, PerturbationSpec
from .solver_model import SolverConfig
from .subspace_model import SubspaceConfig
