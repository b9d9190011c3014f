"""
Numerical certificates for every implemented inequality and round trip.

Each certificate evaluates the forward model on a GridSpec (grid plus seeded
draws), compares the bounded quantity with the bound, and returns a
VerificationReport. Any violation beyond the relative tolerance raises
VerificationFailure carrying the first counterexample in enumeration order.

Certificates:
- theorem1: outcome error, risk ratio, denominators max/min(s1/s0, f1/f0)
- theorem2: exposure error, odds ratio, four-term denominators, sweeping
  exposure prevalence
- theorem3: continuous outcome correction inverts the forward slope
- theorem4-nondifferential: continuous exposure correction with gamma1 = 0
  undoes classical attenuation
- theorem1-null / theorem2-null: forward ratio inside [min_dme, max_dme]
  when p1 = p0
- nondifferential-attenuation-rr / -or: forward ratio no further from 1
  than the truth when error is non-differential and p1 >= p0
"""

from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import Field

from src.config import RELATIVE_TOLERANCE, get_logger
from src.continuous.corrections import (
    exposure_coefficient_correction,
    forward_beta_star_outcome,
    outcome_slope_correction,
)
from src.domain.errors import VerificationFailure
from src.domain.models import DomainModel
from src.domain.thresholds import implied_bound
from src.exposure.misclassification import dme_component_values, observed_odds_ratio
from src.oracle.grid import (
    GENERATOR_ID,
    GridRestriction,
    GridSpec,
    lattice,
    make_generator,
    sample_probabilities,
)
from src.outcome.misclassification import observed_risk_ratio

logger = get_logger(__name__)

THEOREM1_AXES = ("p1", "p0", "s1", "s0", "f1", "f0")
THEOREM2_AXES = ("prevalence", "p1", "p0", "s1p", "s0p", "f1p", "f0p")

# Continuous grids: slopes in [-2, 2], |gamma2| in [1e-3, 4], variances log-spaced
SLOPE_RANGE = (-2.0, 2.0)
GAMMA2_RANGE = (1e-3, 4.0)
SIGMA_A2_RANGE = (0.1, 10.0)
SIGMA_U2_RANGE = (0.01, 10.0)

# (observed, max_dme, min_dme) -> (causative lower bound, preventive upper bound)
BoundPair = Callable[[np.ndarray, np.ndarray, np.ndarray], Tuple[np.ndarray, np.ndarray]]


def paired_bounds(observed, max_dme, min_dme):
    return implied_bound(observed, max_dme), implied_bound(observed, min_dme)


class VerificationReport(DomainModel):
    """Outcome of one certificate run"""
    theorem_id: str
    restriction: GridRestriction = GridRestriction.FULL
    cases_checked: int = Field(ge=0)
    grid_cases: int = Field(ge=0)
    random_draws: int = Field(ge=0)
    violations: int = Field(ge=0)
    # Smallest (greater - lesser) / max(|greater|, |lesser|); tolerance minus residual for round trips
    worst_slack: float
    max_abs_residual: Optional[float] = None
    tolerance: float
    generator: str = GENERATOR_ID
    seed: int
    counterexample: Optional[Dict[str, float]] = None

    @property
    def passed(self) -> bool:
        return self.violations == 0


class _Check:
    """Rows where `greater >= lesser` must hold, indexed into the case table"""

    def __init__(self, rows: np.ndarray, greater: np.ndarray, lesser: np.ndarray):
        self.rows = rows
        self.greater = greater
        self.lesser = lesser

    @classmethod
    def where(cls, mask: np.ndarray, greater: np.ndarray, lesser: np.ndarray) -> "_Check":
        return cls(np.flatnonzero(mask), greater[mask], lesser[mask])


def _ties(restriction: GridRestriction, null_ties: Dict[str, str], nd_ties: Dict[str, str]) -> Dict[str, str]:
    if restriction == GridRestriction.NULL_EFFECT:
        return null_ties
    if restriction == GridRestriction.NON_DIFFERENTIAL:
        return nd_ties
    return {}


def _counterexample(columns: Dict[str, np.ndarray], row: int) -> Dict[str, float]:
    return {name: float(values[row]) for name, values in columns.items()}


def _finish(report: VerificationReport) -> VerificationReport:
    logger.info(
        "%s: %d cases, %d violations, worst slack %.3e",
        report.theorem_id, report.cases_checked, report.violations, report.worst_slack,
    )
    if not report.passed:
        raise VerificationFailure(
            f"{report.theorem_id}: {report.violations} violation(s); first at {report.counterexample}",
            report=report,
            counterexample=report.counterexample,
        )
    return report


def _certify_inequalities(
    theorem_id: str,
    spec: GridSpec,
    columns: Dict[str, np.ndarray],
    grid_cases: int,
    checks: Sequence[_Check],
) -> VerificationReport:
    cases = len(next(iter(columns.values())))
    logger.info("Certifying %s over %d cases (%s, seed %d)", theorem_id, cases, GENERATOR_ID, spec.seed)

    worst = np.inf
    violations = 0
    first_row = None
    for check in checks:
        if check.rows.size == 0:
            continue
        # Slack relative to the larger side, comparable with the tolerance
        scale = np.maximum(np.abs(check.greater), np.abs(check.lesser))
        slack = (check.greater - check.lesser) / scale
        violated = slack < -RELATIVE_TOLERANCE
        worst = min(worst, float(slack.min()))
        if violated.any():
            violations += int(violated.sum())
            row = int(check.rows[violated].min())
            first_row = row if first_row is None else min(first_row, row)

    report = VerificationReport(
        theorem_id=theorem_id,
        restriction=spec.restriction,
        cases_checked=cases,
        grid_cases=grid_cases,
        random_draws=cases - grid_cases,
        violations=violations,
        worst_slack=worst if np.isfinite(worst) else 0.0,
        tolerance=RELATIVE_TOLERANCE,
        seed=spec.seed,
        counterexample=None if first_row is None else _counterexample(columns, first_row),
    )
    return _finish(report)


def _certify_round_trip(
    theorem_id: str,
    spec: GridSpec,
    columns: Dict[str, np.ndarray],
    grid_cases: int,
    truth: np.ndarray,
    recovered: np.ndarray,
) -> VerificationReport:
    cases = len(truth)
    logger.info("Certifying %s over %d cases (%s, seed %d)", theorem_id, cases, GENERATOR_ID, spec.seed)

    residual = np.abs(recovered - truth)
    allowed = RELATIVE_TOLERANCE * np.maximum(1.0, np.abs(truth))
    violated = residual > allowed
    first_row = int(np.flatnonzero(violated)[0]) if violated.any() else None

    report = VerificationReport(
        theorem_id=theorem_id,
        restriction=spec.restriction,
        cases_checked=cases,
        grid_cases=grid_cases,
        random_draws=cases - grid_cases,
        violations=int(violated.sum()),
        worst_slack=float((allowed - residual).min()),
        max_abs_residual=float(residual.max()),
        tolerance=RELATIVE_TOLERANCE,
        seed=spec.seed,
        counterexample=None if first_row is None else _counterexample(columns, first_row),
    )
    return _finish(report)


def _theorem1_cases(spec: GridSpec):
    ties = _ties(spec.restriction, {"p0": "p1"}, {"s0": "s1", "f0": "f1"})
    columns, grid_cases = sample_probabilities(spec, THEOREM1_AXES, ties)
    c = columns
    observed = observed_risk_ratio(c["p1"], c["p0"], c["s1"], c["s0"], c["f1"], c["f0"])
    ratios = (c["s1"] / c["s0"], c["f1"] / c["f0"])
    return columns, grid_cases, observed, np.maximum(*ratios), np.minimum(*ratios)


def _theorem2_cases(spec: GridSpec):
    ties = _ties(spec.restriction, {"p0": "p1"}, {"s0p": "s1p", "f0p": "f1p"})
    columns, grid_cases = sample_probabilities(spec, THEOREM2_AXES, ties)
    c = columns
    observed = observed_odds_ratio(
        c["prevalence"], c["p1"], c["p0"], c["s1p"], c["s0p"], c["f1p"], c["f0p"]
    )
    components = np.vstack(dme_component_values(c["s1p"], c["s0p"], c["f1p"], c["f0p"]))
    return columns, grid_cases, observed, components.max(axis=0), components.min(axis=0)


def _odds_ratio(p1: np.ndarray, p0: np.ndarray) -> np.ndarray:
    return (p1 / (1.0 - p1)) / (p0 / (1.0 - p0))


def _bound_checks(true_ratio, observed, max_dme, min_dme, p1, p0, bounds: BoundPair) -> List[_Check]:
    lower, upper = bounds(observed, max_dme, min_dme)
    return [
        _Check.where(p1 >= p0, true_ratio, lower),
        _Check.where(p1 <= p0, upper, true_ratio),
    ]


def verify_theorem1(spec: Optional[GridSpec] = None, bounds: BoundPair = paired_bounds) -> VerificationReport:
    """
    Outcome-error risk-ratio bound against the total-probability forward model.

    For p1 >= p0 checks p1/p0 >= observed / max_dme; for p1 <= p0 checks
    p1/p0 <= observed / min_dme.

    Args:
        spec: Grid; defaults to GridSpec()
        bounds: Replacement bound computation, for exercising the harness

    Raises:
        VerificationFailure: With the first counterexample
    """
    spec = spec or GridSpec()
    columns, grid_cases, observed, max_dme, min_dme = _theorem1_cases(spec)
    p1, p0 = columns["p1"], columns["p0"]
    checks = _bound_checks(p1 / p0, observed, max_dme, min_dme, p1, p0, bounds)
    return _certify_inequalities("theorem1", spec, columns, grid_cases, checks)


def verify_theorem2(spec: Optional[GridSpec] = None, bounds: BoundPair = paired_bounds) -> VerificationReport:
    """
    Exposure-error odds-ratio bound against the Bayes forward model.

    Sweeps exposure prevalence along with the six other parameters; with the
    default 7 points per axis the full 7^7 grid is below the cell cap.

    Raises:
        VerificationFailure: With the first counterexample
    """
    spec = spec or GridSpec()
    columns, grid_cases, observed, max_dme, min_dme = _theorem2_cases(spec)
    p1, p0 = columns["p1"], columns["p0"]
    checks = _bound_checks(_odds_ratio(p1, p0), observed, max_dme, min_dme, p1, p0, bounds)
    return _certify_inequalities("theorem2", spec, columns, grid_cases, checks)


def verify_null_contrapositive(spec: Optional[GridSpec] = None) -> List[VerificationReport]:
    """
    On p1 = p0, both forward ratios lie within [min_dme, max_dme].

    Returns:
        [theorem1-null report, theorem2-null report]
    """
    spec = (spec or GridSpec()).restricted(GridRestriction.NULL_EFFECT)
    reports = []
    for theorem_id, cases in (("theorem1-null", _theorem1_cases), ("theorem2-null", _theorem2_cases)):
        columns, grid_cases, observed, max_dme, min_dme = cases(spec)
        everywhere = np.ones_like(observed, dtype=bool)
        checks = [
            _Check.where(everywhere, max_dme, observed),
            _Check.where(everywhere, observed, min_dme),
        ]
        reports.append(_certify_inequalities(theorem_id, spec, columns, grid_cases, checks))
    return reports


def verify_nondifferential_attenuation(spec: Optional[GridSpec] = None) -> List[VerificationReport]:
    """
    With non-differential error and p1 >= p0 the observed ratio never exceeds
    the true one, for both the risk-ratio and odds-ratio forward models.
    """
    spec = (spec or GridSpec()).restricted(GridRestriction.NON_DIFFERENTIAL)

    columns, grid_cases, observed, _, _ = _theorem1_cases(spec)
    p1, p0 = columns["p1"], columns["p0"]
    rr_report = _certify_inequalities(
        "nondifferential-attenuation-rr", spec, columns, grid_cases,
        [_Check.where(p1 >= p0, p1 / p0, observed)],
    )

    columns, grid_cases, observed, _, _ = _theorem2_cases(spec)
    p1, p0 = columns["p1"], columns["p0"]
    or_report = _certify_inequalities(
        "nondifferential-attenuation-or", spec, columns, grid_cases,
        [_Check.where(p1 >= p0, _odds_ratio(p1, p0), observed)],
    )
    return [rr_report, or_report]


def _log_uniform(rng: np.random.Generator, low: float, high: float, size: int) -> np.ndarray:
    return np.exp(rng.uniform(np.log(low), np.log(high), size=size))


def verify_theorem3(spec: Optional[GridSpec] = None) -> VerificationReport:
    """
    correct_beta_outcome inverts forward_beta_star_outcome over signed grids of
    (beta1, gamma1) in [-2, 2] and gamma2 in +/-[1e-3, 4].
    """
    spec = spec or GridSpec()
    n = spec.points_per_axis
    slopes = np.linspace(*SLOPE_RANGE, n)
    magnitudes = np.geomspace(*GAMMA2_RANGE, n)
    gamma2_axis = np.concatenate([-magnitudes[::-1], magnitudes])

    # gamma2 has twice the points of the slope axes, so enumerate it outermost
    inner = lattice([slopes, slopes], spec.cell_cap)
    grid = np.vstack([np.column_stack([inner, np.full(len(inner), g2)]) for g2 in gamma2_axis])

    rng = make_generator(spec.seed)
    k = spec.random_draws
    draws = np.column_stack([
        rng.uniform(*SLOPE_RANGE, size=k),
        rng.uniform(*SLOPE_RANGE, size=k),
        rng.choice([-1.0, 1.0], size=k) * _log_uniform(rng, *GAMMA2_RANGE, k),
    ])

    matrix = np.vstack([grid, draws])
    columns = {"beta1": matrix[:, 0], "gamma1": matrix[:, 1], "gamma2": matrix[:, 2]}
    beta1_star = forward_beta_star_outcome(columns["beta1"], columns["gamma1"], columns["gamma2"])
    recovered = outcome_slope_correction(beta1_star, columns["gamma1"], columns["gamma2"])
    return _certify_round_trip("theorem3", spec, columns, len(grid), columns["beta1"], recovered)


def verify_theorem4_nondifferential(spec: Optional[GridSpec] = None) -> VerificationReport:
    """
    With gamma1 = 0, correcting the attenuated slope beta1 * lambda recovers
    beta1 across a (beta1, sigma_a^2, sigma_u^2) grid including sigma_u^2 = 0.
    """
    spec = spec or GridSpec()
    n = spec.points_per_axis
    slopes = np.linspace(*SLOPE_RANGE, n)
    sigma_a2_axis = np.geomspace(*SIGMA_A2_RANGE, n)
    sigma_u2_axis = np.concatenate([[0.0], np.geomspace(*SIGMA_U2_RANGE, n - 1)])
    grid = lattice([slopes, sigma_a2_axis, sigma_u2_axis], spec.cell_cap)

    rng = make_generator(spec.seed)
    k = spec.random_draws
    draws = np.column_stack([
        rng.uniform(*SLOPE_RANGE, size=k),
        _log_uniform(rng, *SIGMA_A2_RANGE, k),
        _log_uniform(rng, *SIGMA_U2_RANGE, k),
    ])

    matrix = np.vstack([grid, draws])
    columns = {"beta1": matrix[:, 0], "sigma_a2": matrix[:, 1], "sigma_u2": matrix[:, 2]}
    attenuation = columns["sigma_a2"] / (columns["sigma_a2"] + columns["sigma_u2"])
    coeff_star = columns["beta1"] * attenuation
    recovered = exposure_coefficient_correction(
        coeff_star, np.zeros_like(coeff_star), columns["sigma_a2"], columns["sigma_u2"]
    )
    return _certify_round_trip(
        "theorem4-nondifferential", spec, columns, len(grid), columns["beta1"], recovered
    )


CERTIFICATES = {
    "1": verify_theorem1,
    "2": verify_theorem2,
    "3": verify_theorem3,
    "4": verify_theorem4_nondifferential,
}


def verify_all(spec: Optional[GridSpec] = None, properties: bool = False) -> List[VerificationReport]:
    """
    The four theorem certificates in order, plus the null-contrapositive and
    attenuation certificates when `properties` is set.

    Stops at the first VerificationFailure.
    """
    spec = spec or GridSpec()
    reports = [certify(spec) for certify in CERTIFICATES.values()]
    if properties:
        reports.extend(verify_null_contrapositive(spec))
        reports.extend(verify_nondifferential_attenuation(spec))
    return reports
