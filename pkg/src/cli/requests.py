"""
Validated analysis requests, one input record per CLI mode.

Each input record carries a literal `mode` so reports can be parsed back
unambiguously from their structured form.
"""

from enum import Enum
from typing import List, Literal, Optional, Union

from pydantic import Field, model_validator

from src.continuous.corrections import ContinuousExposureSpec, ContinuousOutcomeSpec
from src.domain.models import ContingencyTable, DomainModel, ObservedAssociation, PositiveRatio
from src.exposure.misclassification import ExposureMisclassification
from src.oracle.grid import GridSpec
from src.outcome.misclassification import OutcomeMisclassification


class AnalysisMode(str, Enum):
    """CLI subcommands"""
    OUTCOME_RR = "outcome-rr"
    EXPOSURE_OR = "exposure-or"
    CONTINUOUS_OUTCOME = "continuous-outcome"
    CONTINUOUS_EXPOSURE = "continuous-exposure"
    VERIFY = "verify"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


class CurveSpec(DomainModel):
    """Assumed max-DME range for a bound curve; checked by emit_curve"""
    minimum: float
    maximum: float
    steps: int


class OutcomeInputs(DomainModel):
    """Observed risk ratio and optional outcome misclassification"""
    mode: Literal["outcome-rr"] = "outcome-rr"
    observed: ObservedAssociation
    misclassification: Optional[OutcomeMisclassification] = None
    target: Optional[PositiveRatio] = None
    table: Optional[ContingencyTable] = None
    haldane: bool = False


class ExposureInputs(DomainModel):
    """Observed odds ratio (or rare-outcome risk ratio) and optional exposure misclassification"""
    mode: Literal["exposure-or"] = "exposure-or"
    observed: ObservedAssociation
    misclassification: Optional[ExposureMisclassification] = None
    target: Optional[PositiveRatio] = None
    assume_rare_outcome: bool = False
    table: Optional[ContingencyTable] = None
    haldane: bool = False


class ContinuousOutcomeInputs(DomainModel):
    mode: Literal["continuous-outcome"] = "continuous-outcome"
    spec: ContinuousOutcomeSpec


class ContinuousExposureInputs(DomainModel):
    mode: Literal["continuous-exposure"] = "continuous-exposure"
    spec: ContinuousExposureSpec


class VerifyInputs(DomainModel):
    """Which certificates to run and on what grid"""
    mode: Literal["verify"] = "verify"
    grid: GridSpec = GridSpec()
    theorems: List[Literal["1", "2", "3", "4"]] = Field(default_factory=lambda: ["1", "2", "3", "4"])
    properties: bool = False
    explore: bool = False


AnalysisInputs = Union[
    OutcomeInputs,
    ExposureInputs,
    ContinuousOutcomeInputs,
    ContinuousExposureInputs,
    VerifyInputs,
]


class AnalysisRequest(DomainModel):
    """One CLI invocation, validated before dispatch"""
    mode: AnalysisMode
    inputs: AnalysisInputs = Field(discriminator="mode")
    output_format: OutputFormat = OutputFormat.TEXT
    curve: Optional[CurveSpec] = None

    @model_validator(mode="after")
    def _inputs_match_mode(self):
        if self.inputs.mode != self.mode.value:
            raise ValueError(f"inputs for {self.inputs.mode} given to mode {self.mode.value}")
        if self.curve is not None and self.mode not in (AnalysisMode.OUTCOME_RR, AnalysisMode.EXPOSURE_OR):
            raise ValueError("bound curves are available for outcome-rr and exposure-or only")
        return self
