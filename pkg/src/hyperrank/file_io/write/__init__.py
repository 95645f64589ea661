"""Functions relating to writing hypergraphs, point sets and result tables."""

__all__ = [
    "SupportedWriteType",
    "WriteFunc",
    "get_write_func",
    "write_csv",
    "write_hypergraph",
    "write_json",
    "write_points",
]

from .get_func import (
    SupportedWriteType,
    WriteFunc,
    get_write_func,
)
from .hypergraph import write_hypergraph
from .points import write_points
from .tables import write_csv, write_json
