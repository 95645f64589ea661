"""Read SNAP directed edge lists."""

from pathlib import Path

import numpy as np

from hyperrank.config.support import SupportedData
from hyperrank.motifs import DirectedGraph
from hyperrank.utils import get_logger

logger = get_logger(__name__)


def read_snap(file_path: Path, *args: list, **kwargs: dict) -> DirectedGraph:
    """
    Read a directed network in the SNAP edge list format.

    Each line holds `from to`, separated by tabs or spaces; lines starting with `#`
    are comments. Self-loops and repeated arcs are dropped and counted.

    Parameters
    ----------
    file_path : pathlib.Path
        Path to a `.txt` or `.tsv` file.
    *args : list
        Additional arguments.
    **kwargs : dict
        Additional keyword arguments.

    Returns
    -------
    DirectedGraph
        Graph carrying the external node ids and the ingestion statistics.

    Raises
    ------
    ValueError
        If the file extension is not supported or a line is malformed.
    """
    file_path = Path(file_path)
    if file_path.suffix.lower() not in SupportedData.get_extensions(SupportedData.SNAP):
        raise ValueError(f"File {file_path} is not a valid SNAP edge list.")

    try:
        data = np.loadtxt(
            file_path, comments="#", dtype=np.int64, usecols=(0, 1), ndmin=2
        )
    except ValueError as e:
        raise ValueError(f"Malformed SNAP edge list {file_path}: {e}") from e
    if data.size == 0:
        data = data.reshape(0, 2)

    graph = DirectedGraph.from_edge_list(data[:, 0], data[:, 1])
    logger.info(
        f"Read {graph.n} nodes and {graph.m} arcs from {file_path.name} "
        f"({graph.stats.self_loops} self-loops, {graph.stats.duplicates} repeated "
        f"arcs dropped)."
    )
    return graph
