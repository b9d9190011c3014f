"""
Differential measurement error of a binary outcome (risk-ratio scale).
"""

from src.outcome.bounds import (
    bound_true_rr,
    ci_shift_threshold,
    explain_away_threshold,
    shift_threshold,
)
from src.outcome.misclassification import (
    OutcomeDmeComponents,
    OutcomeMisclassification,
    dme_components_rr,
    forward_observed_rr,
    observed_risk_ratio,
)

__all__ = [
    'OutcomeDmeComponents', 'OutcomeMisclassification', 'dme_components_rr',
    'forward_observed_rr', 'observed_risk_ratio', 'bound_true_rr',
    'ci_shift_threshold', 'explain_away_threshold', 'shift_threshold',
]
