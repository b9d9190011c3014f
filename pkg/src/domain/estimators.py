"""
Observed associations from 2x2 tables.

Provides:
- estimate_risk_ratio / estimate_odds_ratio with Wald log-scale limits
- null_direction for classifying an association against the null

Zero cells are a hard error unless the Haldane-Anscombe correction is
requested, in which case 0.5 is added to every cell of a table with a zero.
"""

import math

from scipy.stats import norm

from src.config import CONFIDENCE_LEVEL, get_logger
from src.domain.errors import EmptyMarginError, ZeroCellError
from src.domain.models import ContingencyTable, Direction, ObservedAssociation, RatioScale

logger = get_logger(__name__)

HALDANE_CORRECTION = 0.5


def wald_critical_value(level: float = CONFIDENCE_LEVEL) -> float:
    """Two-sided standard normal quantile; 1.959964 at the 95% level"""
    return float(norm.ppf(1.0 - (1.0 - level) / 2.0))


def _corrected_cells(table: ContingencyTable, haldane: bool) -> tuple[float, float, float, float]:
    # An empty arm has no data to correct
    if table.n11 + table.n10 == 0 or table.n01 + table.n00 == 0:
        raise EmptyMarginError(
            f"exposure arm with zero total in table {table.stratum_label or ''}".strip()
        )
    if not haldane:
        if table.has_zero_cell:
            raise ZeroCellError(
                f"zero cell in table {table.model_dump(exclude={'stratum_label'})}; "
                "pass haldane=True to apply the 0.5 correction"
            )
        return table.cells()

    if table.has_zero_cell:
        logger.info("Applying Haldane correction to stratum %s", table.stratum_label)
        return table.cells(HALDANE_CORRECTION)
    return table.cells()


def _wald_association(estimate: float, se: float, scale: RatioScale) -> ObservedAssociation:
    z = wald_critical_value()
    log_estimate = math.log(estimate)
    return ObservedAssociation(
        estimate=estimate,
        scale=scale,
        ci_lower=math.exp(log_estimate - z * se),
        ci_upper=math.exp(log_estimate + z * se),
    )


def estimate_risk_ratio(table: ContingencyTable, haldane: bool = False) -> ObservedAssociation:
    """
    Risk ratio of the outcome, exposed versus unexposed.

    Args:
        table: One stratum's counts
        haldane: Add 0.5 to every cell when any cell is zero

    Returns:
        ObservedAssociation on the risk-ratio scale with Wald limits

    Raises:
        EmptyMarginError: An exposure arm has no observations
        ZeroCellError: A zero cell without the correction flag
    """
    n11, n10, n01, n00 = _corrected_cells(table, haldane)
    exposed, unexposed = n11 + n10, n01 + n00

    risk_ratio = (n11 / exposed) / (n01 / unexposed)
    se = math.sqrt(1.0 / n11 - 1.0 / exposed + 1.0 / n01 - 1.0 / unexposed)
    return _wald_association(risk_ratio, se, RatioScale.RISK_RATIO)


def estimate_odds_ratio(table: ContingencyTable, haldane: bool = False) -> ObservedAssociation:
    """
    Cross-product odds ratio with Woolf standard error
    sqrt(1/n11 + 1/n10 + 1/n01 + 1/n00).

    Raises:
        EmptyMarginError: An exposure arm has no observations
        ZeroCellError: A zero cell without the correction flag
    """
    n11, n10, n01, n00 = _corrected_cells(table, haldane)

    odds_ratio = (n11 * n00) / (n10 * n01)
    se = math.sqrt(1.0 / n11 + 1.0 / n10 + 1.0 / n01 + 1.0 / n00)
    return _wald_association(odds_ratio, se, RatioScale.ODDS_RATIO)


def null_direction(assoc: ObservedAssociation) -> Direction:
    """Causative above 1, preventive below, null at exactly 1"""
    if assoc.estimate > 1.0:
        return Direction.CAUSATIVE
    if assoc.estimate < 1.0:
        return Direction.PREVENTIVE
    return Direction.NULL
