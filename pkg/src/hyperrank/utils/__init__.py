"""Utils module."""

__all__ = [
    "BaseEnum",
    "check_path_exists",
    "check_stochastic",
    "get_logger",
    "get_ram_size",
    "resolve_threads",
    "uniform",
]


from .base_enum import BaseEnum
from .distribution import check_stochastic, uniform
from .logging import get_logger
from .path_utils import check_path_exists
from .ram import get_ram_size
from .threads import resolve_threads
