"""
Differential misclassification of a binary exposure.

Provides:
- ExposureMisclassification: s'_y = P(A*=1 | Y=y, A=1), f'_y = P(A*=1 | Y=y, A=0)
- ExposureDmeComponents: the two DME odds ratios of Y on A* plus the
  correct (r_c) and incorrect (r_i) classification ratios
- PopulationModel and forward_observed_or: the odds ratio between A* and Y
  obtained by Bayes inversion over the joint law of (A, Y, A*)
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


def _odds(p):
    return p / (1.0 - p)


class ExposureMisclassification(DomainModel):
    """Sensitivities and false-positive probabilities of A* by outcome status"""
    s1p: OpenProbability
    s0p: OpenProbability
    f1p: OpenProbability
    f0p: OpenProbability

    def swapped_outcome(self) -> "ExposureMisclassification":
        """Same classification with the labels Y=1 and Y=0 exchanged"""
        return ExposureMisclassification(s1p=self.s0p, s0p=self.s1p, f1p=self.f0p, f0p=self.f1p)


class ExposureDmeComponents(DomainModel):
    """Effect of Y on A* given A, on the odds-ratio scale, and r_c / r_i"""
    or_sensitivity: PositiveRatio
    or_false_positive: PositiveRatio
    r_correct: PositiveRatio
    r_incorrect: PositiveRatio
    max_dme: PositiveRatio
    min_dme: PositiveRatio

    @model_validator(mode="after")
    def _extremes_match_components(self):
        values = self.as_tuple()
        if self.max_dme != max(values) or self.min_dme != min(values):
            raise ValueError("max_dme/min_dme must be the extremes of the four components")
        return self

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.or_sensitivity, self.or_false_positive, self.r_correct, self.r_incorrect)

    @property
    def classification_ratios_dominate(self) -> bool:
        """
        True when r_c or r_i lies outside the range spanned by the two DME odds
        ratios, so the two odds ratios alone do not determine the bound.
        """
        low = min(self.or_sensitivity, self.or_false_positive)
        high = max(self.or_sensitivity, self.or_false_positive)
        return max(self.r_correct, self.r_incorrect) > high or min(self.r_correct, self.r_incorrect) < low


def dme_components_or(m: ExposureMisclassification) -> ExposureDmeComponents:
    """
    All four components of the exposure-error bound denominator.

    r_c = (s'1/s'0) / ((1-f'1)/(1-f'0))
    r_i = (f'1/f'0) / ((1-s'1)/(1-s'0))
    """
    components = dme_component_values(m.s1p, m.s0p, m.f1p, m.f0p)
    return ExposureDmeComponents(
        or_sensitivity=components[0],
        or_false_positive=components[1],
        r_correct=components[2],
        r_incorrect=components[3],
        max_dme=max(components),
        min_dme=min(components),
    )


def dme_component_values(s1p, s0p, f1p, f0p):
    """(or_sensitivity, or_false_positive, r_correct, r_incorrect) for scalars or arrays"""
    or_sensitivity = _odds(s1p) / _odds(s0p)
    or_false_positive = _odds(f1p) / _odds(f0p)
    r_correct = (s1p / s0p) / ((1.0 - f1p) / (1.0 - f0p))
    r_incorrect = (f1p / f0p) / ((1.0 - s1p) / (1.0 - s0p))
    return or_sensitivity, or_false_positive, r_correct, r_incorrect


class PopulationModel(DomainModel):
    """True stratum-level parameters: exposure prevalence and outcome risks"""
    prevalence: OpenProbability
    outcome: TrueBinaryModel

    @property
    def true_odds_ratio(self) -> float:
        return self.outcome.odds_ratio


def joint_cells(prevalence, p1, p0, s1p, s0p, f1p, f0p):
    """
    Joint probabilities P(Y=y, A*=a*) ordered (y1a1, y1a0, y0a1, y0a0).

    Sums P(A*=a* | Y=y, A=a) P(Y=y | A=a) P(A=a) over a. Works elementwise on
    numpy arrays.
    """
    exposed_cases = prevalence * p1
    unexposed_cases = (1.0 - prevalence) * p0
    exposed_noncases = prevalence * (1.0 - p1)
    unexposed_noncases = (1.0 - prevalence) * (1.0 - p0)

    y1a1 = s1p * exposed_cases + f1p * unexposed_cases
    y1a0 = (1.0 - s1p) * exposed_cases + (1.0 - f1p) * unexposed_cases
    y0a1 = s0p * exposed_noncases + f0p * unexposed_noncases
    y0a0 = (1.0 - s0p) * exposed_noncases + (1.0 - f0p) * unexposed_noncases
    return y1a1, y1a0, y0a1, y0a0


def observed_odds_ratio(prevalence, p1, p0, s1p, s0p, f1p, f0p):
    """Odds ratio between A* and Y implied by the joint cells"""
    y1a1, y1a0, y0a1, y0a0 = joint_cells(prevalence, p1, p0, s1p, s0p, f1p, f0p)
    return (y1a1 / y0a1) / (y1a0 / y0a0)


def forward_observed_or(p: PopulationModel, m: ExposureMisclassification) -> ObservedAssociation:
    """
    Odds ratio a study measuring A* instead of A would observe.

    Example:
        >>> p = PopulationModel(prevalence=0.5, outcome=TrueBinaryModel(p1=0.5, p0=0.25))
        >>> m = ExposureMisclassification(s1p=0.9, s0p=0.8, f1p=0.2, f0p=0.1)
        >>> round(forward_observed_or(p, m).estimate, 4)   # cells .25, .125, .2375, .3875
        3.2632
    """
    estimate = observed_odds_ratio(
        p.prevalence, p.outcome.p1, p.outcome.p0, m.s1p, m.s0p, m.f1p, m.f0p
    )
    return ObservedAssociation(estimate=float(estimate), scale=RatioScale.ODDS_RATIO)
