"""
Differential misclassification of a binary outcome.

Provides:
- OutcomeMisclassification: s_a = P(Y*=1 | Y=1, A=a), f_a = P(Y*=1 | Y=0, A=a)
- OutcomeDmeComponents: the direct-effect ratios s1/s0 and f1/f0
- forward_observed_rr: the risk ratio a study would observe with Y*

The forward model is the law of total probability,
p*_a = s_a * p_a + f_a * (1 - p_a).
"""

from pydantic import model_validator

from src.domain.models import (
    DomainModel,
    ObservedAssociation,
    OpenProbability,
    PositiveRatio,
    RatioScale,
    TrueBinaryModel,
)


class OutcomeMisclassification(DomainModel):
    """Sensitivities and false-positive probabilities of Y* by exposure arm"""
    s1: OpenProbability
    s0: OpenProbability
    f1: OpenProbability
    f0: OpenProbability

    @property
    def is_non_differential(self) -> bool:
        return self.s1 == self.s0 and self.f1 == self.f0


class OutcomeDmeComponents(DomainModel):
    """Direct effect of A on Y* not through Y, on the risk-ratio scale"""
    sensitivity_ratio: PositiveRatio
    false_positive_ratio: PositiveRatio
    max_dme: PositiveRatio
    min_dme: PositiveRatio

    @model_validator(mode="after")
    def _extremes_match_ratios(self):
        ratios = (self.sensitivity_ratio, self.false_positive_ratio)
        if self.max_dme != max(ratios) or self.min_dme != min(ratios):
            raise ValueError("max_dme/min_dme must be the extremes of the two ratios")
        return self


def dme_components_rr(m: OutcomeMisclassification) -> OutcomeDmeComponents:
    """s1/s0 and f1/f0 with their maximum and minimum"""
    sensitivity_ratio = m.s1 / m.s0
    false_positive_ratio = m.f1 / m.f0
    return OutcomeDmeComponents(
        sensitivity_ratio=sensitivity_ratio,
        false_positive_ratio=false_positive_ratio,
        max_dme=max(sensitivity_ratio, false_positive_ratio),
        min_dme=min(sensitivity_ratio, false_positive_ratio),
    )


def observed_risk_ratio(p1, p0, s1, s0, f1, f0):
    """Forward risk ratio; accepts scalars or equally shaped numpy arrays"""
    observed_p1 = s1 * p1 + f1 * (1.0 - p1)
    observed_p0 = s0 * p0 + f0 * (1.0 - p0)
    return observed_p1 / observed_p0


def forward_observed_rr(t: TrueBinaryModel, m: OutcomeMisclassification) -> ObservedAssociation:
    """
    Risk ratio of A on Y* generated by true probabilities and misclassification.

    Example:
        >>> t = TrueBinaryModel(p1=0.4, p0=0.2)
        >>> m = OutcomeMisclassification(s1=0.9, s0=0.8, f1=0.1, f0=0.05)
        >>> round(forward_observed_rr(t, m).estimate, 12)   # 0.42 / 0.20
        2.1
    """
    estimate = observed_risk_ratio(t.p1, t.p0, m.s1, m.s0, m.f1, m.f0)
    return ObservedAssociation(estimate=float(estimate), scale=RatioScale.RISK_RATIO)
