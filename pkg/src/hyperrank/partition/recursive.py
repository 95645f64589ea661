"""Recursive multiway partitioning."""

from typing import Optional, Union

import numpy as np
from numpy.typing import NDArray

from hyperrank.config import PartitionConfig
from hyperrank.config.support import SupportedOrdering
from hyperrank.hypergraph import UniformHypergraph
from hyperrank.utils import get_logger, resolve_threads

from .bipartition import bipartition

logger = get_logger(__name__)


def recursive_partition(
    h: UniformHypergraph,
    parts: int,
    config: Optional[PartitionConfig] = None,
    method: Optional[Union[SupportedOrdering, str]] = None,
) -> list[NDArray]:
    """
    Split the hypergraph into `parts` vertex sets by repeated bipartition.

    The largest splittable part is bipartitioned on its induced sub-hypergraph, the
    edges crossing earlier cuts being discarded. A part whose sub-hypergraph has no
    edge is frozen. If every part is frozen before reaching the target, fewer parts
    are returned.

    Parameters
    ----------
    h : UniformHypergraph
        Hypergraph.
    parts : int
        Target number of parts, at least 2.
    config : PartitionConfig, optional
        Bipartition parameters, by default the `PartitionConfig` defaults.
    method : SupportedOrdering or str, optional
        Ordering method overriding `config.ordering`.

    Returns
    -------
    list of NDArray
        Disjoint sorted vertex sets covering all vertices, in creation order.

    Raises
    ------
    ValueError
        If `parts < 2`.
    """
    if parts < 2:
        raise ValueError(f"Number of parts must be at least 2 (got {parts}).")
    if config is None:
        config = PartitionConfig(parts=parts)
    ordering = SupportedOrdering(method if method is not None else config.ordering)
    threads = resolve_threads(config.threads)

    current: list[NDArray] = [np.arange(h.n)]
    frozen: list[bool] = [h.m == 0 or h.n < 2]

    while len(current) < parts:
        candidates = [i for i, part in enumerate(current) if not frozen[i]]
        if not candidates:
            logger.warning(
                f"Only {len(current)} of {parts} parts reachable: every part is "
                f"frozen."
            )
            break

        # largest part first, lowest vertex on ties
        index = max(candidates, key=lambda i: (current[i].shape[0], -current[i][0]))
        part = current[index]
        sub, kept = h.induced_subhypergraph(part)

        if sub.m == 0 or sub.n < 2:
            frozen[index] = True
            logger.warning(
                f"Freezing part of {part.shape[0]} vertices: its induced "
                f"sub-hypergraph has no edge."
            )
            continue

        cut = bipartition(
            sub,
            alpha=config.alpha,
            method=ordering,
            seed=config.seed,
            eig_tol=config.eig_tol,
            eig_max_iter=config.eig_max_iter,
            threads=threads,
        )
        left = kept[cut.S]
        right = kept[cut.complement]
        logger.info(
            f"Split part of {part.shape[0]} vertices into {left.shape[0]} and "
            f"{right.shape[0]} (h = {cut.value:.4g})."
        )

        current[index] = left
        frozen[index] = False
        current.insert(index + 1, right)
        frozen.insert(index + 1, False)

    return current


def part_labels(parts: list[NDArray], n: int) -> NDArray:
    """
    Part index of every vertex.

    Parameters
    ----------
    parts : list of NDArray
        Disjoint vertex sets.
    n : int
        Number of vertices.

    Returns
    -------
    NDArray
        Labels of shape (n,), -1 for uncovered vertices.
    """
    labels = np.full(n, -1, dtype=np.int64)
    for label, part in enumerate(parts):
        labels[part] = label
    return labels
