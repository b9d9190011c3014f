"""
Test Suite for Exposure Misclassification (odds-ratio scale)

Covers:
- The four denominator components and the classification-ratio advisory
- Bayes forward model over (A, Y, A*) with exposure prevalence
- Bounds, thresholds and the rare-outcome risk-ratio restatement
- Label-swap symmetry and the bound on random parameters
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.domain import Direction, ObservedAssociation, ScaleMismatchError, TrueBinaryModel
from src.exposure import (
    ExposureMisclassification,
    PopulationModel,
    bound_true_or,
    ci_shift_threshold_or,
    dme_components_or,
    explain_away_threshold_or,
    forward_observed_or,
    joint_cells,
    shift_threshold_or,
)

DIFFERENTIAL = ExposureMisclassification(s1p=0.9, s0p=0.8, f1p=0.2, f0p=0.1)
WORKED_POPULATION = PopulationModel(prevalence=0.5, outcome=TrueBinaryModel(p1=0.5, p0=0.25))
SOCIAL_SUPPORT = ObservedAssociation(estimate=1.51, scale="odds-ratio", ci_lower=1.03, ci_upper=2.22)


def test_components():
    print("=== Test Exposure DME Components ===")

    c = dme_components_or(DIFFERENTIAL)
    assert c.or_sensitivity == pytest.approx(2.25)
    assert c.or_false_positive == pytest.approx(2.25)
    assert c.r_correct == pytest.approx(1.265625)
    assert c.r_incorrect == pytest.approx(4.0)
    assert c.max_dme == pytest.approx(4.0)
    assert c.classification_ratios_dominate
    print(f"✅ Components {c.as_tuple()}")


def test_components_non_differential():
    c = dme_components_or(ExposureMisclassification(s1p=0.85, s0p=0.85, f1p=0.15, f0p=0.15))
    assert c.as_tuple() == (1.0, 1.0, 1.0, 1.0)
    assert not c.classification_ratios_dominate


def test_components_label_swap_gives_reciprocals():
    original = dme_components_or(DIFFERENTIAL)
    swapped = dme_components_or(DIFFERENTIAL.swapped_outcome())

    for a, b in zip(original.as_tuple(), swapped.as_tuple()):
        assert a * b == pytest.approx(1.0)
    assert swapped.min_dme == pytest.approx(0.25)


def test_joint_cells_worked_example():
    cells = joint_cells(0.5, 0.5, 0.25, 0.9, 0.8, 0.2, 0.1)
    assert cells == pytest.approx((0.25, 0.125, 0.2375, 0.3875))
    assert sum(cells) == pytest.approx(1.0)


def test_forward_model_and_bound():
    """Observed 3.2632 from a true OR of 3.0; bound 0.8158 stays below the truth"""
    print("=== Test Exposure Forward Model ===")

    observed = forward_observed_or(WORKED_POPULATION, DIFFERENTIAL)
    assert observed.estimate == pytest.approx(3.2632, abs=1e-4)
    assert WORKED_POPULATION.true_odds_ratio == pytest.approx(3.0)

    bound = bound_true_or(observed, dme_components_or(DIFFERENTIAL), Direction.CAUSATIVE)
    assert bound == pytest.approx(0.8158, abs=1e-4)
    assert WORKED_POPULATION.true_odds_ratio >= bound
    print(f"✅ Observed {observed.estimate:.4f}, bound {bound:.4f}")


def test_forward_model_near_perfect_measurement():
    eps = 1e-9
    perfect = ExposureMisclassification(s1p=1 - eps, s0p=1 - eps, f1p=eps, f0p=eps)
    observed = forward_observed_or(WORKED_POPULATION, perfect)
    assert observed.estimate == pytest.approx(3.0, abs=1e-6)


def test_null_effect_stays_within_components():
    m = ExposureMisclassification(s1p=0.9, s0p=0.6, f1p=0.1, f0p=0.1)
    population = PopulationModel(prevalence=0.4, outcome=TrueBinaryModel(p1=0.3, p0=0.3))

    observed = forward_observed_or(population, m)
    c = dme_components_or(m)
    assert observed.estimate > 1.0
    assert c.min_dme <= observed.estimate <= c.max_dme


def test_label_swap_inverts_observed_odds_ratio():
    swapped_population = PopulationModel(prevalence=0.5, outcome=TrueBinaryModel(p1=0.5, p0=0.75))
    original = forward_observed_or(WORKED_POPULATION, DIFFERENTIAL).estimate
    swapped = forward_observed_or(swapped_population, DIFFERENTIAL.swapped_outcome()).estimate
    assert original * swapped == pytest.approx(1.0)


def test_bound_examples():
    c = dme_components_or(ExposureMisclassification(s1p=0.85, s0p=0.85, f1p=0.15, f0p=0.15))
    assert bound_true_or(SOCIAL_SUPPORT, c, Direction.CAUSATIVE) == pytest.approx(1.51)

    preventive = ObservedAssociation(estimate=0.5, scale="odds-ratio")
    swapped = dme_components_or(DIFFERENTIAL.swapped_outcome())
    assert bound_true_or(preventive, swapped, Direction.PREVENTIVE) == pytest.approx(2.0)


def test_social_support_thresholds():
    print("=== Test Social Support Example ===")

    assert explain_away_threshold_or(SOCIAL_SUPPORT).value == pytest.approx(1.51)
    assert shift_threshold_or(SOCIAL_SUPPORT, 1.1).value == pytest.approx(1.3727, abs=1e-4)
    assert ci_shift_threshold_or(SOCIAL_SUPPORT).value == pytest.approx(1.03)
    print("✅ 1.51 / 1.37 / 1.03")


def test_rare_outcome_restatement():
    rr = ObservedAssociation(estimate=1.51, scale="risk-ratio", ci_lower=1.03, ci_upper=2.22)
    c = dme_components_or(DIFFERENTIAL)

    with pytest.raises(ScaleMismatchError):
        bound_true_or(rr, c, Direction.CAUSATIVE)
    with pytest.raises(ScaleMismatchError):
        explain_away_threshold_or(rr)

    assert bound_true_or(rr, c, Direction.CAUSATIVE, assume_rare_outcome=True) == pytest.approx(1.51 / 4.0)
    assert ci_shift_threshold_or(rr, assume_rare_outcome=True).value == pytest.approx(1.03)


probability = st.floats(min_value=0.01, max_value=0.99)


@settings(max_examples=300, deadline=None)
@given(probability, probability, probability, probability, probability, probability, probability)
def test_bound_holds_for_random_parameters(prevalence, p1, p0, s1p, s0p, f1p, f0p):
    population = PopulationModel(prevalence=prevalence, outcome=TrueBinaryModel(p1=p1, p0=p0))
    m = ExposureMisclassification(s1p=s1p, s0p=s0p, f1p=f1p, f0p=f0p)
    observed = forward_observed_or(population, m)
    c = dme_components_or(m)
    true_or = population.true_odds_ratio

    if p1 >= p0:
        assert true_or >= bound_true_or(observed, c, Direction.CAUSATIVE) * (1 - 1e-9)
    if p1 <= p0:
        assert true_or <= bound_true_or(observed, c, Direction.PREVENTIVE) * (1 + 1e-9)
