"""
Corrections for differential error of continuous outcomes and exposures.
"""

from src.continuous.corrections import (
    ContinuousExposureSpec,
    ContinuousOutcomeSpec,
    OutcomeKind,
    correct_beta_outcome,
    correct_coeff_exposure,
    differential_offset,
    exposure_coefficient_correction,
    forward_beta_star_outcome,
    outcome_slope_correction,
)

__all__ = [
    'ContinuousExposureSpec', 'ContinuousOutcomeSpec', 'OutcomeKind',
    'correct_beta_outcome', 'correct_coeff_exposure', 'differential_offset',
    'forward_beta_star_outcome', 'exposure_coefficient_correction', 'outcome_slope_correction',
]
