"""
Bounds and thresholds for differential error of a binary exposure.

The true odds ratio is bounded by the observed A*-Y odds ratio divided by the
maximum (causative) or minimum (preventive) of four components: the DME odds
ratios for sensitivity and false positives, r_c and r_i. The result holds
with no side condition. Only when r_c and r_i stay within the two DME odds
ratios do the thresholds read as statements about those two odds ratios
alone; reports raise an advisory otherwise.

With a rare outcome the same bound may be stated against a risk ratio; the
sensitivity parameters are still odds ratios.
"""

from src.domain.errors import DirectionError, ScaleMismatchError
from src.domain.models import Direction, ObservedAssociation, RatioScale
from src.domain.thresholds import (
    Threshold,
    ci_shift_threshold,
    explain_away_threshold,
    implied_bound,
    shift_threshold,
)
from src.exposure.misclassification import ExposureDmeComponents

RARE_OUTCOME_CAVEAT = (
    "Risk-ratio input accepted under an asserted rare outcome: the observed and "
    "true odds ratios are approximated by risk ratios, but the sensitivity "
    "parameters remain odds ratios unless the exposure is also rare."
)


def require_odds_ratio_scale(observed: ObservedAssociation, assume_rare_outcome: bool) -> None:
    """Raises ScaleMismatchError unless the input is an odds ratio, or a risk ratio under a rare outcome"""
    if observed.scale == RatioScale.ODDS_RATIO:
        return
    if assume_rare_outcome and observed.scale == RatioScale.RISK_RATIO:
        return
    raise ScaleMismatchError(
        f"expected an odds ratio, got {observed.scale.value}"
        " (a risk ratio needs assume_rare_outcome)"
    )


def bound_true_or(
    observed: ObservedAssociation,
    c: ExposureDmeComponents,
    direction: Direction,
    assume_rare_outcome: bool = False,
) -> float:
    """
    Bound on the true odds ratio from the full four-term denominator.

    Args:
        observed: Odds ratio between A* and Y
        c: Components from dme_components_or
        direction: CAUSATIVE gives a lower bound, PREVENTIVE an upper bound
        assume_rare_outcome: Accept a risk-ratio input (see RARE_OUTCOME_CAVEAT)

    Raises:
        ScaleMismatchError: Wrong scale for the input
        DirectionError: direction is NULL
    """
    require_odds_ratio_scale(observed, assume_rare_outcome)
    if direction == Direction.CAUSATIVE:
        return implied_bound(observed.estimate, c.max_dme)
    if direction == Direction.PREVENTIVE:
        return implied_bound(observed.estimate, c.min_dme)
    raise DirectionError("bound direction must be causative or preventive")


def explain_away_threshold_or(observed: ObservedAssociation, assume_rare_outcome: bool = False) -> Threshold:
    """Strength max_dme must reach for the true odds ratio to be 1"""
    require_odds_ratio_scale(observed, assume_rare_outcome)
    return explain_away_threshold(observed)


def shift_threshold_or(
    observed: ObservedAssociation,
    target: float,
    assume_rare_outcome: bool = False,
) -> Threshold:
    """Strength max_dme must reach to move the odds ratio to `target`"""
    require_odds_ratio_scale(observed, assume_rare_outcome)
    return shift_threshold(observed, target)


def ci_shift_threshold_or(observed: ObservedAssociation, assume_rare_outcome: bool = False) -> Threshold:
    """Strength needed for the odds-ratio confidence interval to include 1"""
    require_odds_ratio_scale(observed, assume_rare_outcome)
    return ci_shift_threshold(observed)
