"""Line clustering of point sets through random hypergraphs."""

__all__ = [
    "OUTLIER",
    "PointSet",
    "SuccessRecord",
    "bounding_box",
    "build_random_hypergraph",
    "candidate_triples",
    "cluster_and_score",
    "edge_budget",
    "generate_instance",
    "line_fit_cost",
    "line_fit_costs",
    "score_candidates",
    "success_ratio",
    "success_ratio_sweep",
]

from .line_fit import line_fit_cost, line_fit_costs
from .point_set import OUTLIER, PointSet, bounding_box, generate_instance
from .random_hypergraph import (
    build_random_hypergraph,
    candidate_triples,
    edge_budget,
    score_candidates,
)
from .scoring import (
    SuccessRecord,
    cluster_and_score,
    success_ratio,
    success_ratio_sweep,
)
