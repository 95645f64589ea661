"""Supported configuration options.

Used throughout the code to ensure consistency. These should be kept in sync with the
corresponding configuration options in the Pydantic models.
"""

__all__ = [
    "SupportedCorrection",
    "SupportedData",
    "SupportedModel",
    "SupportedOrdering",
    "SupportedPerturbationTarget",
]


from .supported_corrections import SupportedCorrection
from .supported_data import SupportedData
from .supported_models import SupportedModel
from .supported_orderings import SupportedOrdering
from .supported_perturbation_targets import SupportedPerturbationTarget
