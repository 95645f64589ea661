"""Multi-linear pseudo-PageRank on uniform hypergraphs."""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("hyperrank")
except PackageNotFoundError:
    __version__ = "uninstalled"

__all__ = [
    "HyperRankConfiguration",
    "PageRankProblem",
    "SolveReport",
    "UniformHypergraph",
    "bipartition",
    "configuration_factory",
    "load_configuration",
    "recursive_partition",
    "save_configuration",
    "solve",
]

from .config import (
    HyperRankConfiguration,
    configuration_factory,
    load_configuration,
    save_configuration,
)
from .hypergraph import UniformHypergraph
from .partition import bipartition, recursive_partition
from .solver import PageRankProblem, SolveReport, solve
