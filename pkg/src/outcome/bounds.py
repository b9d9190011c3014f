"""
Bounds and thresholds for differential error of a binary outcome.

If the true risk ratio is at least 1 it is no smaller than the observed
ratio divided by max(s1/s0, f1/f0); if it is at most 1 it is no larger than
the observed ratio divided by min(s1/s0, f1/f0). For the truth to be null,
one of s1/s0, f1/f0 must be at least as extreme as the observed ratio.
"""

from src.domain.errors import DirectionError, ScaleMismatchError
from src.domain.models import Direction, ObservedAssociation, RatioScale
from src.domain.thresholds import (
    Threshold,
    ci_shift_threshold as _ci_shift_threshold,
    explain_away_threshold as _explain_away_threshold,
    implied_bound,
    shift_threshold as _shift_threshold,
)
from src.outcome.misclassification import OutcomeDmeComponents


def bound_true_rr(
    observed: ObservedAssociation,
    c: OutcomeDmeComponents,
    direction: Direction,
) -> float:
    """
    Bound on the true risk ratio.

    Args:
        observed: Risk ratio of A on the mismeasured outcome
        c: Direct-effect components of the misclassification
        direction: CAUSATIVE gives a lower bound, PREVENTIVE an upper bound

    Returns:
        observed / max_dme (causative) or observed / min_dme (preventive)

    Raises:
        ScaleMismatchError: observed is not a risk ratio
        DirectionError: direction is NULL
    """
    if observed.scale != RatioScale.RISK_RATIO:
        raise ScaleMismatchError(f"expected a risk ratio, got {observed.scale.value}")
    if direction == Direction.CAUSATIVE:
        return implied_bound(observed.estimate, c.max_dme)
    if direction == Direction.PREVENTIVE:
        return implied_bound(observed.estimate, c.min_dme)
    raise DirectionError("bound direction must be causative or preventive")


def explain_away_threshold(observed: ObservedAssociation) -> Threshold:
    """Strength s1/s0 or f1/f0 must reach for the true risk ratio to be 1"""
    return _explain_away_threshold(observed)


def shift_threshold(observed: ObservedAssociation, target: float) -> Threshold:
    """Strength s1/s0 or f1/f0 must reach to move the risk ratio to `target`"""
    return _shift_threshold(observed, target)


def ci_shift_threshold(observed: ObservedAssociation) -> Threshold:
    """Strength needed for the confidence interval to include 1"""
    return _ci_shift_threshold(observed)
