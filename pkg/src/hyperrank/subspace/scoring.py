"""Clustering of point sets and success ratios."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from numpy.typing import ArrayLike
from scipy.optimize import linear_sum_assignment

from hyperrank.config import PartitionConfig, SubspaceConfig
from hyperrank.config.support import SupportedOrdering
from hyperrank.partition import part_labels, recursive_partition
from hyperrank.utils import get_logger

from .point_set import OUTLIER, PointSet, generate_instance
from .random_hypergraph import build_random_hypergraph

logger = get_logger(__name__)


def success_ratio(labels_true: ArrayLike, labels_pred: ArrayLike) -> float:
    """
    Fraction of non-outlier points in the part matched to their cluster.

    Parts are matched one-to-one with clusters so as to maximize the number of
    agreements; outliers may lie in any part and are not counted.

    Parameters
    ----------
    labels_true : ArrayLike
        Ground-truth cluster ids, `-1` for outliers.
    labels_pred : ArrayLike
        Part index per point.

    Returns
    -------
    float
        Ratio in [0, 1].

    Examples
    --------
    >>> from hyperrank.subspace import success_ratio
    >>> success_ratio([0, 0, 1, 1, -1], [1, 1, 0, 0, 0])
    1.0
    """
    labels_true = np.asarray(labels_true)
    labels_pred = np.asarray(labels_pred)
    inliers = labels_true != OUTLIER
    if not np.any(inliers):
        return 1.0

    clusters, true_index = np.unique(labels_true[inliers], return_inverse=True)
    parts, pred_index = np.unique(labels_pred[inliers], return_inverse=True)
    contingency = np.zeros((clusters.shape[0], parts.shape[0]), dtype=np.int64)
    np.add.at(contingency, (true_index.reshape(-1), pred_index.reshape(-1)), 1)

    rows, cols = linear_sum_assignment(contingency, maximize=True)
    return float(contingency[rows, cols].sum() / inliers.sum())


def cluster_and_score(
    ps: PointSet,
    parts: int = 4,
    seed: int = 0,
    method: Union[SupportedOrdering, str] = SupportedOrdering.MLPPR,
    config: Optional[PartitionConfig] = None,
    threads: Optional[int] = None,
) -> float:
    """
    Cluster a point set through its random hypergraph and score the result.

    Parameters
    ----------
    ps : PointSet
        Labeled points.
    parts : int, optional
        Number of parts, by default 4.
    seed : int, optional
        Seed of the hypergraph construction and of the partition, by default 0.
    method : SupportedOrdering or str, optional
        Ordering method, by default "mlppr".
    config : PartitionConfig, optional
        Partition parameters, by default the `PartitionConfig` defaults with `seed`
        and `threads`.
    threads : int, optional
        Contraction threads, by default resolved from `HYPERRANK_THREADS`.

    Returns
    -------
    float
        Success ratio in [0, 1].
    """
    h = build_random_hypergraph(ps, seed)
    if config is None:
        config = PartitionConfig(parts=parts, seed=seed, threads=threads)
    found = recursive_partition(h, parts, config=config, method=method)
    if len(found) < parts:
        logger.warning(
            f"Scoring against {len(found)} parts instead of {parts}."
        )
    return success_ratio(ps.labels, part_labels(found, ps.n))


@dataclass(frozen=True)
class SuccessRecord:
    """
    Success ratio of one clustering run.

    Attributes
    ----------
    n : int
        Instance size.
    method : str
        Ordering method.
    success_ratio : float
        Ratio in [0, 1].
    seed : int
        Instance seed.
    """

    n: int
    method: str
    success_ratio: float
    seed: int


def success_ratio_sweep(
    config: SubspaceConfig, methods: Optional[Sequence[str]] = None
) -> Iterator[SuccessRecord]:
    """
    Success ratios over instance sizes, seeds and methods.

    Parameters
    ----------
    config : SubspaceConfig
        Experiment parameters.
    methods : Sequence of str, optional
        Methods overriding `config.methods`.

    Yields
    ------
    SuccessRecord
        One record per size, seed and method, in that nesting order.
    """
    methods = config.methods if methods is None else list(methods)
    for n in config.n:
        for seed in range(config.seed, config.seed + config.repeats):
            ps = generate_instance(n, seed=seed, noise_scale=config.noise_scale)
            for method in methods:
                ratio = cluster_and_score(
                    ps,
                    parts=config.parts,
                    seed=seed,
                    method=method,
                    threads=config.threads,
                )
                logger.info(f"n={n} seed={seed} {method}: success ratio {ratio:.4f}.")
                yield SuccessRecord(n=n, method=method, success_ratio=ratio, seed=seed)
