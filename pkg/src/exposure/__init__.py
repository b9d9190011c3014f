"""
Differential measurement error of a binary exposure (odds-ratio scale).
"""

from src.exposure.bounds import (
    RARE_OUTCOME_CAVEAT,
    bound_true_or,
    ci_shift_threshold_or,
    explain_away_threshold_or,
    require_odds_ratio_scale,
    shift_threshold_or,
)
from src.exposure.misclassification import (
    ExposureDmeComponents,
    ExposureMisclassification,
    PopulationModel,
    dme_component_values,
    dme_components_or,
    forward_observed_or,
    joint_cells,
    observed_odds_ratio,
)

__all__ = [
    'RARE_OUTCOME_CAVEAT', 'bound_true_or', 'ci_shift_threshold_or',
    'explain_away_threshold_or', 'require_odds_ratio_scale', 'shift_threshold_or',
    'ExposureDmeComponents', 'ExposureMisclassification', 'PopulationModel',
    'dme_component_values', 'dme_components_or', 'forward_observed_or',
    'joint_cells', 'observed_odds_ratio',
]
