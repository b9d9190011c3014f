"""
Exploratory Monte Carlo for the continuous-exposure correction with gamma1 != 0.

Simulates a joint-Gaussian data-generating process

    A  ~ N(0, sigma_a2)
    Y  = beta1 * A + e,        e ~ N(0, sigma_e2)
    A* = A + gamma1 * Y + U,   U ~ N(0, sigma_u2)

fits the naive slope of Y on A*, and sets it beside the closed-form moment
slope Cov(Y, A*) / Var(A*) and the slope the correction formula presumes,
lambda * beta1 + gamma1 / (sigma_a2 + sigma_u2). The two agree at gamma1 = 0
and differ otherwise, so the corrected value drifts from beta1 under this
process. No pass/fail is attached; the exact conditions under which the
correction is exact are not derivable from the formula alone.
"""

from typing import List, Sequence

import numpy as np
from pydantic import Field

from src.config import GRID_SEED, get_logger
from src.continuous.corrections import exposure_coefficient_correction
from src.domain.models import DomainModel
from src.oracle.grid import GENERATOR_ID, make_generator

logger = get_logger(__name__)

DEFAULT_GAMMA1_VALUES = (-0.5, -0.25, 0.0, 0.25, 0.5)


class ExplorationRow(DomainModel):
    """One gamma1 setting of the exploratory comparison"""
    gamma1: float
    beta1: float
    simulated_slope: float
    moment_slope: float
    formula_slope: float
    corrected: float
    discrepancy: float


class ExplorationSettings(DomainModel):
    """Data-generating constants of the exploration"""
    beta1: float = 1.0
    sigma_a2: float = Field(default=1.0, gt=0.0)
    sigma_u2: float = Field(default=1.0, ge=0.0)
    sigma_e2: float = Field(default=1.0, gt=0.0)
    sample_size: int = Field(default=200_000, ge=10)
    seed: int = Field(default=GRID_SEED, ge=0)
    generator: str = GENERATOR_ID


def moment_slope(beta1: float, gamma1: float, sigma_a2: float, sigma_u2: float, sigma_e2: float) -> float:
    """Population slope of Y on A* under the Gaussian process above"""
    var_y = beta1 ** 2 * sigma_a2 + sigma_e2
    covariance = beta1 * sigma_a2 + gamma1 * var_y
    var_a_star = sigma_a2 + gamma1 ** 2 * var_y + 2.0 * gamma1 * beta1 * sigma_a2 + sigma_u2
    return covariance / var_a_star


def formula_slope(beta1: float, gamma1: float, sigma_a2: float, sigma_u2: float) -> float:
    """Observed slope the correction formula inverts"""
    total_variance = sigma_a2 + sigma_u2
    return (sigma_a2 / total_variance) * beta1 + gamma1 / total_variance


def explore_theorem4(
    settings: ExplorationSettings = ExplorationSettings(),
    gamma1_values: Sequence[float] = DEFAULT_GAMMA1_VALUES,
) -> List[ExplorationRow]:
    """
    Compare simulated, moment and formula slopes for each gamma1.

    The same seed drives every gamma1 setting, so rows differ only through
    gamma1.
    """
    s = settings
    rows = []
    for gamma1 in gamma1_values:
        rng = make_generator(s.seed)
        a = rng.normal(0.0, np.sqrt(s.sigma_a2), s.sample_size)
        y = s.beta1 * a + rng.normal(0.0, np.sqrt(s.sigma_e2), s.sample_size)
        a_star = a + gamma1 * y + rng.normal(0.0, np.sqrt(s.sigma_u2), s.sample_size)

        simulated = float(np.polyfit(a_star, y, 1)[0])
        corrected = float(exposure_coefficient_correction(simulated, gamma1, s.sigma_a2, s.sigma_u2))
        rows.append(
            ExplorationRow(
                gamma1=gamma1,
                beta1=s.beta1,
                simulated_slope=simulated,
                moment_slope=moment_slope(s.beta1, gamma1, s.sigma_a2, s.sigma_u2, s.sigma_e2),
                formula_slope=formula_slope(s.beta1, gamma1, s.sigma_a2, s.sigma_u2),
                corrected=corrected,
                discrepancy=corrected - s.beta1,
            )
        )
    logger.info("Explored %d gamma1 values with n=%d", len(rows), s.sample_size)
    return rows
