"""
Report assembly for every CLI mode.

run() takes a validated AnalysisRequest, dispatches it to the outcome,
exposure, continuous or verification code and returns a DmeBoundReport that
echoes the inputs next to the results, so a report can be reproduced from
itself.
"""

from enum import Enum
from typing import List, Literal, Optional, Union

import numpy as np
from pydantic import Field

from src.cli.requests import (
    AnalysisInputs,
    AnalysisMode,
    AnalysisRequest,
    ContinuousExposureInputs,
    ContinuousOutcomeInputs,
    CurveSpec,
    ExposureInputs,
    OutcomeInputs,
    VerifyInputs,
)
from src.config import get_logger
from src.continuous.corrections import correct_beta_outcome, correct_coeff_exposure, differential_offset
from src.domain.errors import CurveRangeError, ScaleMismatchError
from src.domain.estimators import null_direction
from src.domain.models import ContingencyTable, Direction, DomainModel, ObservedAssociation, RatioScale
from src.domain.thresholds import Threshold, implied_bound
from src.exposure.bounds import (
    RARE_OUTCOME_CAVEAT,
    bound_true_or,
    ci_shift_threshold_or,
    explain_away_threshold_or,
    require_odds_ratio_scale,
    shift_threshold_or,
)
from src.exposure.misclassification import ExposureDmeComponents, dme_components_or
from src.oracle.certificates import (
    CERTIFICATES,
    VerificationReport,
    verify_nondifferential_attenuation,
    verify_null_contrapositive,
)
from src.oracle.explore import ExplorationRow, ExplorationSettings, explore_theorem4
from src.outcome.bounds import bound_true_rr, ci_shift_threshold, explain_away_threshold, shift_threshold
from src.outcome.misclassification import OutcomeDmeComponents, dme_components_rr

logger = get_logger(__name__)

NULL_ESTIMATE_WARNING = "Observed association is exactly 1: no bound direction and nothing to explain away."
ADVISORY_WARNING = (
    "r_c or r_i falls outside the range of the two DME odds ratios: the bound is "
    "driven by the classification ratios, not by the DME odds ratios alone."
)
APPROXIMATE_WARNING = (
    "Coefficient from a logistic model for a rare binary outcome: the correction is approximate."
)
EXPLORATION_WARNING = "Exploration rows are descriptive only and carry no pass/fail."


class BoundSide(str, Enum):
    LOWER = "lower"
    UPPER = "upper"


class CurvePoint(DomainModel):
    assumed_max_dme: float
    implied_bound: float


class BoundResults(DomainModel):
    """Headline numbers for a binary outcome or exposure"""
    kind: Literal["bound"] = "bound"
    stratum: Optional[str] = None
    observed: ObservedAssociation
    direction: Direction
    components: Optional[Union[OutcomeDmeComponents, ExposureDmeComponents]] = None
    bound: Optional[float] = None
    bound_side: Optional[BoundSide] = None
    explain_away: Optional[Threshold] = None
    shift: Optional[Threshold] = None
    ci_shift: Optional[Threshold] = None
    classification_ratio_advisory: Optional[bool] = None
    curve: Optional[List[CurvePoint]] = None


class CorrectionResults(DomainModel):
    """Corrected coefficient for a continuous outcome or exposure"""
    kind: Literal["correction"] = "correction"
    corrected: float
    approximate: bool = False
    attenuation: Optional[float] = None
    differential_offset: Optional[float] = None


class VerificationResults(DomainModel):
    kind: Literal["verification"] = "verification"
    reports: List[VerificationReport]
    exploration: Optional[List[ExplorationRow]] = None


class DmeBoundReport(DomainModel):
    """Structured report: top-level mode, inputs, results, warnings"""
    mode: AnalysisMode
    inputs: AnalysisInputs = Field(discriminator="mode")
    results: Union[BoundResults, CorrectionResults, VerificationResults] = Field(discriminator="kind")
    warnings: List[str] = Field(default_factory=list)


def emit_curve(observed: ObservedAssociation, curve: CurveSpec) -> List[CurvePoint]:
    """
    Tabulate the implied bound against an assumed direct-effect factor.

    Causative estimates give estimate / k (non-increasing); preventive ones
    give the upper bound estimate * k (non-decreasing).

    Raises:
        CurveRangeError: minimum below 1, no steps, inverted range, or a
            single step over a range wider than one point
    """
    if curve.minimum < 1.0:
        raise CurveRangeError(f"curve minimum must be at least 1, got {curve.minimum}")
    if curve.steps < 1:
        raise CurveRangeError("curve needs at least one step")
    if curve.maximum < curve.minimum:
        raise CurveRangeError(f"inverted curve range [{curve.minimum}, {curve.maximum}]")
    if curve.steps == 1 and curve.maximum != curve.minimum:
        raise CurveRangeError("a single step needs minimum == maximum")

    assumed = np.linspace(curve.minimum, curve.maximum, curve.steps)
    if null_direction(observed) == Direction.PREVENTIVE:
        bounds = implied_bound(observed.estimate, 1.0 / assumed)
    else:
        bounds = implied_bound(observed.estimate, assumed)
    return [
        CurvePoint(assumed_max_dme=float(k), implied_bound=float(b))
        for k, b in zip(assumed, bounds)
    ]


def _side(direction: Direction) -> BoundSide:
    return BoundSide.LOWER if direction == Direction.CAUSATIVE else BoundSide.UPPER


def _stratum(table: Optional[ContingencyTable]) -> Optional[str]:
    return table.stratum_label if table is not None else None


def _outcome_results(inputs: OutcomeInputs, curve: Optional[CurveSpec]):
    observed = inputs.observed
    if observed.scale != RatioScale.RISK_RATIO:
        raise ScaleMismatchError(f"outcome-rr needs a risk ratio, got {observed.scale.value}")

    direction = null_direction(observed)
    warnings = []
    components = dme_components_rr(inputs.misclassification) if inputs.misclassification else None

    bound = side = explain_away = None
    if direction == Direction.NULL:
        warnings.append(NULL_ESTIMATE_WARNING)
    else:
        explain_away = explain_away_threshold(observed)
        if components is not None:
            bound = bound_true_rr(observed, components, direction)
            side = _side(direction)

    results = BoundResults(
        stratum=_stratum(inputs.table),
        observed=observed,
        direction=direction,
        components=components,
        bound=bound,
        bound_side=side,
        explain_away=explain_away,
        shift=shift_threshold(observed, inputs.target) if inputs.target is not None else None,
        ci_shift=ci_shift_threshold(observed) if observed.has_interval else None,
        curve=emit_curve(observed, curve) if curve is not None else None,
    )
    return results, warnings


def _exposure_results(inputs: ExposureInputs, curve: Optional[CurveSpec]):
    observed = inputs.observed
    rare = inputs.assume_rare_outcome
    require_odds_ratio_scale(observed, rare)

    direction = null_direction(observed)
    warnings = [RARE_OUTCOME_CAVEAT] if rare else []
    components = dme_components_or(inputs.misclassification) if inputs.misclassification else None

    advisory = None
    if components is not None:
        advisory = components.classification_ratios_dominate
        if advisory:
            logger.info("Classification-ratio advisory raised: %s", components.as_tuple())
            warnings.append(ADVISORY_WARNING)

    bound = side = explain_away = None
    if direction == Direction.NULL:
        warnings.append(NULL_ESTIMATE_WARNING)
    else:
        explain_away = explain_away_threshold_or(observed, rare)
        if components is not None:
            bound = bound_true_or(observed, components, direction, rare)
            side = _side(direction)

    results = BoundResults(
        stratum=_stratum(inputs.table),
        observed=observed,
        direction=direction,
        components=components,
        bound=bound,
        bound_side=side,
        explain_away=explain_away,
        shift=shift_threshold_or(observed, inputs.target, rare) if inputs.target is not None else None,
        ci_shift=ci_shift_threshold_or(observed, rare) if observed.has_interval else None,
        classification_ratio_advisory=advisory,
        curve=emit_curve(observed, curve) if curve is not None else None,
    )
    return results, warnings


def _continuous_outcome_results(inputs: ContinuousOutcomeInputs):
    return CorrectionResults(corrected=correct_beta_outcome(inputs.spec)), []


def _continuous_exposure_results(inputs: ContinuousExposureInputs):
    spec = inputs.spec
    results = CorrectionResults(
        corrected=correct_coeff_exposure(spec),
        approximate=spec.is_approximate,
        attenuation=spec.attenuation,
        differential_offset=differential_offset(spec),
    )
    return results, [APPROXIMATE_WARNING] if spec.is_approximate else []


def _verification_results(inputs: VerifyInputs):
    grid = inputs.grid
    reports = [CERTIFICATES[theorem](grid) for theorem in inputs.theorems]
    if inputs.properties:
        reports.extend(verify_null_contrapositive(grid))
        reports.extend(verify_nondifferential_attenuation(grid))

    exploration = None
    warnings = []
    if inputs.explore:
        exploration = explore_theorem4(ExplorationSettings(seed=grid.seed))
        warnings.append(EXPLORATION_WARNING)
    return VerificationResults(reports=reports, exploration=exploration), warnings


def run(request: AnalysisRequest) -> DmeBoundReport:
    """
    Dispatch one validated request.

    Raises:
        DmeInputError: Inputs the calculators reject (scale, target, range)
        VerificationFailure: A certificate found a counterexample
    """
    mode = request.mode
    inputs = request.inputs
    logger.info("Running %s", mode.value)

    if mode == AnalysisMode.OUTCOME_RR:
        results, warnings = _outcome_results(inputs, request.curve)
    elif mode == AnalysisMode.EXPOSURE_OR:
        results, warnings = _exposure_results(inputs, request.curve)
    elif mode == AnalysisMode.CONTINUOUS_OUTCOME:
        results, warnings = _continuous_outcome_results(inputs)
    elif mode == AnalysisMode.CONTINUOUS_EXPOSURE:
        results, warnings = _continuous_exposure_results(inputs)
    else:
        results, warnings = _verification_results(inputs)

    return DmeBoundReport(mode=mode, inputs=inputs, results=results, warnings=warnings)
