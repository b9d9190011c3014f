"""
Minimum strength of differential error needed to move an observed ratio.

The same arithmetic serves the risk-ratio (outcome error) and odds-ratio
(exposure error) results: to bring an observed ratio r down to a target t on
the same side of the null, the maximum direct effect of the error must reach
r/t. Preventive associations are reported as a factor >= 1 tagged
"deflating", meaning the minimum direct effect must fall to 1/factor.
"""

from enum import Enum

from pydantic import Field

from src.domain.errors import (
    AlreadyNullError,
    MissingIntervalError,
    TargetAcrossNullError,
    TargetBeyondEstimateError,
)
from src.domain.models import DomainModel, ObservedAssociation


class ThresholdKind(str, Enum):
    """Which way the differential error has to push"""
    INFLATING = "inflating"   # max direct effect must reach the value
    DEFLATING = "deflating"   # min direct effect must reach 1/value
    NONE = "none"             # no differential error required


class Threshold(DomainModel):
    """A factor >= 1 with the direction the error must act in"""
    value: float = Field(ge=1.0)
    kind: ThresholdKind

    @property
    def raw_ratio(self) -> float:
        """The threshold as a ratio on the observed side of 1"""
        return 1.0 / self.value if self.kind == ThresholdKind.DEFLATING else self.value


def implied_bound(observed_ratio, denominator):
    """Observed ratio divided by an assumed direct-effect ratio; scalars or arrays"""
    return observed_ratio / denominator


def _as_factor(ratio: float) -> Threshold:
    if ratio > 1.0:
        return Threshold(value=ratio, kind=ThresholdKind.INFLATING)
    if ratio < 1.0:
        return Threshold(value=1.0 / ratio, kind=ThresholdKind.DEFLATING)
    return Threshold(value=1.0, kind=ThresholdKind.NONE)


def explain_away_threshold(observed: ObservedAssociation) -> Threshold:
    """
    Smallest direct-effect ratio consistent with a truly null association.

    For an estimate above 1, at least one of the two direct-effect ratios must
    be at least the estimate; below 1, at least one must be at most it.

    Raises:
        AlreadyNullError: The estimate is exactly 1
    """
    if observed.estimate == 1.0:
        raise AlreadyNullError("observed association is already null")
    return _as_factor(observed.estimate)


def shift_threshold(observed: ObservedAssociation, target: float) -> Threshold:
    """
    Smallest direct-effect ratio that moves the estimate to `target`.

    The target must lie between 1 and the estimate, both ends included.

    Raises:
        TargetBeyondEstimateError: Target further from 1 than the estimate
        TargetAcrossNullError: Target on the other side of 1
    """
    if target <= 0.0:
        raise TargetAcrossNullError(f"target must be positive, got {target}")

    estimate = observed.estimate
    if estimate >= 1.0:
        if target > estimate:
            raise TargetBeyondEstimateError(f"target {target} exceeds estimate {estimate}")
        if target < 1.0:
            raise TargetAcrossNullError(f"target {target} is below 1 while estimate {estimate} is not")
    else:
        if target < estimate:
            raise TargetBeyondEstimateError(f"target {target} is below estimate {estimate}")
        if target > 1.0:
            raise TargetAcrossNullError(f"target {target} is above 1 while estimate {estimate} is below")

    return _as_factor(estimate / target)


def ci_shift_threshold(observed: ObservedAssociation) -> Threshold:
    """
    Smallest direct-effect ratio that moves the confidence interval to include 1.

    Raises:
        MissingIntervalError: Either limit is absent
    """
    if not observed.has_interval:
        raise MissingIntervalError("both confidence limits are required")
    if observed.ci_lower > 1.0:
        return Threshold(value=observed.ci_lower, kind=ThresholdKind.INFLATING)
    if observed.ci_upper < 1.0:
        return Threshold(value=1.0 / observed.ci_upper, kind=ThresholdKind.DEFLATING)
    return Threshold(value=1.0, kind=ThresholdKind.NONE)
