"""Functions relating to reading hypergraphs, networks and point sets."""

__all__ = [
    "ReadFunc",
    "get_read_func",
    "read_hypergraph",
    "read_points",
    "read_snap",
]

from .get_func import ReadFunc, get_read_func
from .hypergraph import read_hypergraph
from .points import read_points
from .snap import read_snap
