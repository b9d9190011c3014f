"""
Validated domain types shared by the outcome, exposure and reporting modules.

Provides:
- RatioScale and Direction enums
- ObservedAssociation (estimate plus optional confidence limits)
- TrueBinaryModel (stratum-level outcome probabilities by exposure arm)
- ContingencyTable (one 2x2 table per covariate stratum)

Every model is frozen after validation. All results are conditional on a
single stratum of the measured covariates; nothing here pools strata.
"""

from enum import Enum
from typing import Annotated, Optional

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, model_validator

# Strictly interior probability: every ratio and odds built from it stays finite
OpenProbability = Annotated[float, Field(gt=0.0, lt=1.0)]
PositiveRatio = Annotated[float, Field(gt=0.0)]


class DomainModel(BaseModel):
    """Immutable base for every validated value"""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False, extra="forbid")


class RatioScale(str, Enum):
    """Scale on which an association is expressed"""
    RISK_RATIO = "risk-ratio"
    ODDS_RATIO = "odds-ratio"


class Direction(str, Enum):
    """Side of the null an association falls on"""
    CAUSATIVE = "causative"
    PREVENTIVE = "preventive"
    NULL = "null"


class ObservedAssociation(DomainModel):
    """A point estimate on a declared ratio scale, with optional 95% limits"""
    estimate: PositiveRatio
    scale: RatioScale
    ci_lower: Optional[PositiveRatio] = None
    ci_upper: Optional[PositiveRatio] = None

    @model_validator(mode="after")
    def _limits_bracket_estimate(self):
        if self.ci_lower is not None and self.ci_lower > self.estimate:
            raise ValueError(f"ci_lower {self.ci_lower} exceeds estimate {self.estimate}")
        if self.ci_upper is not None and self.ci_upper < self.estimate:
            raise ValueError(f"ci_upper {self.ci_upper} is below estimate {self.estimate}")
        return self

    @property
    def has_interval(self) -> bool:
        return self.ci_lower is not None and self.ci_upper is not None


class TrueBinaryModel(DomainModel):
    """p_a = P(Y=1 | A=a, C=c) for the two exposure arms"""
    p1: OpenProbability
    p0: OpenProbability

    @property
    def risk_ratio(self) -> float:
        return self.p1 / self.p0

    @property
    def odds_ratio(self) -> float:
        return (self.p1 / (1.0 - self.p1)) / (self.p0 / (1.0 - self.p0))


class ContingencyTable(DomainModel):
    """
    2x2 counts indexed (exposure level, outcome level).

    n11: exposed with outcome, n10: exposed without outcome,
    n01: unexposed with outcome, n00: unexposed without outcome.
    """
    n11: NonNegativeInt
    n10: NonNegativeInt
    n01: NonNegativeInt
    n00: NonNegativeInt
    stratum_label: Optional[str] = None

    @model_validator(mode="after")
    def _non_empty(self):
        if self.total == 0:
            raise ValueError("contingency table has no observations")
        return self

    @property
    def total(self) -> int:
        return self.n11 + self.n10 + self.n01 + self.n00

    @property
    def has_zero_cell(self) -> bool:
        return min(self.n11, self.n10, self.n01, self.n00) == 0

    def cells(self, correction: float = 0.0) -> tuple[float, float, float, float]:
        """Counts as floats (n11, n10, n01, n00), each shifted by `correction`"""
        return (
            self.n11 + correction,
            self.n10 + correction,
            self.n01 + correction,
            self.n00 + correction,
        )
