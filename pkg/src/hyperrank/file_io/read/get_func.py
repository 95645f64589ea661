"""Module to get read functions."""

from pathlib import Path
from typing import Any, Protocol, Union

from hyperrank.config.support import SupportedData

from .hypergraph import read_hypergraph
from .points import read_points
from .snap import read_snap


# This is very strict, function signature has to match including arg names
class ReadFunc(Protocol):
    """Protocol for type hinting read functions."""

    def __call__(self, file_path: Path, *args, **kwargs) -> Any:
        """
        Type hinted callables must match this function signature (not including self).

        Parameters
        ----------
        file_path : pathlib.Path
            Path to file.
        *args
            Other positional arguments.
        **kwargs
            Other keyword arguments.
        """


READ_FUNCS: dict[SupportedData, ReadFunc] = {
    SupportedData.HYPERGRAPH: read_hypergraph,
    SupportedData.SNAP: read_snap,
    SupportedData.POINTS: read_points,
}


def get_read_func(data_type: Union[str, SupportedData]) -> ReadFunc:
    """
    Get the read function for the data type.

    Parameters
    ----------
    data_type : str or SupportedData
        Data type, or a file extension such as ".hg".

    Returns
    -------
    ReadFunc
        Read function.

    Raises
    ------
    NotImplementedError
        If no reader exists for the data type.
    """
    try:
        data_type_ = SupportedData(data_type)
    except ValueError as e:
        raise NotImplementedError(
            f"Data type '{data_type}' is not supported, use one of "
            f"{SupportedData.values()}."
        ) from e
    if data_type_ not in READ_FUNCS:
        raise NotImplementedError(f"Data type '{data_type}' is not supported.")
    return READ_FUNCS[data_type_]
