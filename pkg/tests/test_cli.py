"""
Test Suite for the `dme` Command Line

Covers:
- The social-support worked example in text and JSON
- Scenario files as option defaults
- Table input, strata, Haldane correction, rare-outcome restatement
- Bounds, advisory flag and preventive direction through the CLI
- Continuous corrections and the verify command
- Structured output round trip, bound curves, exit codes
"""

import json
from pathlib import Path

import pandas as pd
import pytest
from click.testing import CliRunner

from src.cli import (
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VALIDATION,
    EXIT_VERIFICATION,
    CurveSpec,
    cli,
    emit_curve,
    list_scenarios,
    load_scenario,
    main,
    parse_reports,
    render_json,
)
from src.domain import CurveRangeError, ObservedAssociation
from src.oracle import CERTIFICATES, verify_theorem1

DATA_DIR = Path(__file__).parent.parent / "data"
EXAMPLE_TABLE = str(DATA_DIR / "tables" / "example_table.csv")
STRATIFIED_TABLE = str(DATA_DIR / "tables" / "stratified_table.csv")
SOCIAL_SUPPORT = str(DATA_DIR / "scenarios" / "social_support.yaml")
WORKED_EXAMPLE = ["exposure-or", "--estimate", "1.51", "--ci", "1.03,2.22", "--target", "1.1"]
SMALL_VERIFY = ["verify", "--all", "--seed", "42", "--points", "3", "--draws", "200", "--format", "json"]

runner = CliRunner()


def invoke(*args):
    result = runner.invoke(cli, list(args))
    assert result.exit_code == 0, result.output
    return result


def invoke_json(*args):
    return json.loads(invoke(*args, "--format", "json").stdout)


def test_help_lists_subcommands():
    output = invoke("--help").stdout
    for command in ("outcome-rr", "exposure-or", "continuous-outcome", "continuous-exposure", "verify"):
        assert command in output


def test_worked_example_text():
    """Thresholds 1.51, 1.37 and 1.03, rounded for display"""
    print("=== Test Worked Example (text) ===")

    output = invoke(*WORKED_EXAMPLE).stdout
    assert "Explain-away threshold" in output
    assert "1.51" in output
    assert "1.37" in output
    assert "1.03" in output
    print(output)


def test_worked_example_json():
    report = invoke_json(*WORKED_EXAMPLE)

    assert report["mode"] == "exposure-or"
    assert set(report) == {"mode", "inputs", "results", "warnings"}
    results = report["results"]
    assert results["direction"] == "causative"
    assert results["explain_away"]["value"] == pytest.approx(1.51)
    assert results["shift"]["value"] == pytest.approx(1.51 / 1.1)
    assert results["ci_shift"]["value"] == pytest.approx(1.03)
    assert results["bound"] is None
    # Full precision in structured output, inputs echoed
    assert results["shift"]["value"] != round(results["shift"]["value"], 2)
    assert report["inputs"]["observed"]["ci_lower"] == 1.03
    assert report["inputs"]["target"] == 1.1
    assert report["warnings"] == []


def test_scenario_supplies_defaults():
    print("=== Test Scenario ===")

    report = invoke_json("--scenario", SOCIAL_SUPPORT, "exposure-or")
    assert report["results"]["shift"]["value"] == pytest.approx(1.3727, abs=1e-4)
    assert report["results"]["ci_shift"]["value"] == pytest.approx(1.03)

    overridden = invoke_json("--scenario", SOCIAL_SUPPORT, "exposure-or", "--target", "1.2")
    assert overridden["results"]["shift"]["value"] == pytest.approx(1.51 / 1.2)


def test_scenario_lookup_by_name():
    scenarios_dir = str(DATA_DIR / "scenarios")
    assert "social_support" in list_scenarios(scenarios_dir)

    scenario = load_scenario("social_support", scenarios_dir)
    assert scenario["exposure-or"]["estimate"] == 1.51

    continuous = load_scenario("continuous_exposure", scenarios_dir)
    assert continuous["continuous-exposure"]["coeff_star"] == 0.6

    with pytest.raises(FileNotFoundError):
        load_scenario("no_such_scenario", scenarios_dir)


def test_continuous_scenario():
    scenario = str(DATA_DIR / "scenarios" / "continuous_exposure.yaml")
    report = invoke_json("--scenario", scenario, "continuous-exposure")
    assert report["results"]["corrected"] == pytest.approx(1.05)


def test_outcome_rr_from_table():
    """30/70/20/80: observed risk ratio 1.5, explain-away 1.5"""
    report = invoke_json("outcome-rr", "--table", EXAMPLE_TABLE)

    results = report["results"]
    assert results["observed"]["estimate"] == pytest.approx(1.5)
    assert results["observed"]["scale"] == "risk-ratio"
    assert results["explain_away"]["value"] == pytest.approx(1.5)
    assert results["ci_shift"]["kind"] == "none"
    assert results["stratum"] == "all"
    assert report["inputs"]["table"]["n11"] == 30


def test_stratified_table_gives_array():
    reports = invoke_json("outcome-rr", "--table", STRATIFIED_TABLE)
    assert isinstance(reports, list)
    assert [r["results"]["stratum"] for r in reports] == ["under_65", "65_plus"]

    text = invoke("outcome-rr", "--table", STRATIFIED_TABLE).stdout
    assert "stratum under_65" in text
    assert "stratum 65_plus" in text


def test_exposure_or_from_table():
    odds = invoke_json("exposure-or", "--table", EXAMPLE_TABLE)
    assert odds["results"]["observed"]["estimate"] == pytest.approx(1.7143, abs=1e-4)
    assert odds["results"]["observed"]["scale"] == "odds-ratio"

    rare = invoke_json("exposure-or", "--table", EXAMPLE_TABLE, "--assume-rare-outcome")
    assert rare["results"]["observed"]["estimate"] == pytest.approx(1.5)
    assert rare["results"]["observed"]["scale"] == "risk-ratio"
    assert any("rare outcome" in w for w in rare["warnings"])


def test_haldane_flag(tmp_path):
    table = tmp_path / "zero.csv"
    table.write_text("exposure,outcome,count\n1,1,0\n1,0,10\n0,1,5\n0,0,5\n")

    assert main(["outcome-rr", "--table", str(table)]) == EXIT_VALIDATION
    report = invoke_json("exposure-or", "--table", str(table), "--haldane")
    assert report["results"]["observed"]["estimate"] == pytest.approx(0.5 / 10.5)
    assert report["results"]["direction"] == "preventive"


def test_outcome_bound_with_misclassification():
    report = invoke_json(
        "outcome-rr", "--estimate", "2.1",
        "--s1", "0.9", "--s0", "0.8", "--f1", "0.1", "--f0", "0.05",
    )
    results = report["results"]
    assert results["components"]["max_dme"] == pytest.approx(2.0)
    assert results["bound"] == pytest.approx(1.05)
    assert results["bound_side"] == "lower"


def test_preventive_bound():
    report = invoke_json(
        "outcome-rr", "--estimate", "0.7",
        "--s1", "0.8", "--s0", "0.9", "--f1", "0.05", "--f0", "0.1",
    )
    results = report["results"]
    assert results["direction"] == "preventive"
    assert results["bound"] == pytest.approx(1.4)
    assert results["bound_side"] == "upper"
    assert results["explain_away"]["kind"] == "deflating"
    assert results["explain_away"]["value"] == pytest.approx(1 / 0.7)


def test_exposure_advisory_and_all_components():
    print("=== Test Classification-Ratio Advisory ===")

    args = ["exposure-or", "--estimate", "3.2632", "--s1p", "0.9", "--s0p", "0.8", "--f1p", "0.2", "--f0p", "0.1"]
    report = invoke_json(*args)
    results = report["results"]
    assert results["classification_ratio_advisory"] is True
    assert set(results["components"]) == {
        "or_sensitivity", "or_false_positive", "r_correct", "r_incorrect", "max_dme", "min_dme",
    }
    assert results["bound"] == pytest.approx(0.8158, abs=1e-4)
    assert any("r_c or r_i" in w for w in report["warnings"])

    text = invoke(*args).stdout
    assert "r_i (incorrect classification)" in text
    assert "4.00" in text


def test_null_estimate_warns():
    report = invoke_json("outcome-rr", "--estimate", "1.0", "--s1", "0.9", "--s0", "0.8", "--f1", "0.1", "--f0", "0.05")
    assert report["results"]["direction"] == "null"
    assert report["results"]["explain_away"] is None
    assert report["results"]["bound"] is None
    assert report["warnings"]


def test_continuous_commands():
    outcome = invoke_json("continuous-outcome", "--beta1-star", "0.7", "--gamma1", "0.2", "--gamma2", "1.0")
    assert outcome["results"]["corrected"] == pytest.approx(0.5)
    assert outcome["results"]["approximate"] is False

    exposure = invoke_json(
        "continuous-exposure", "--coeff-star", "0.6", "--gamma1", "0.3",
        "--sigma-a2", "2", "--sigma-u2", "2", "--outcome-kind", "rare-binary-logistic",
    )
    assert exposure["results"]["corrected"] == pytest.approx(1.05)
    assert exposure["results"]["attenuation"] == pytest.approx(0.5)
    assert exposure["results"]["approximate"] is True
    assert exposure["warnings"]


def test_verify_is_deterministic():
    print("=== Test Verify Determinism ===")

    first = invoke(*SMALL_VERIFY).stdout
    second = invoke(*SMALL_VERIFY).stdout
    assert first == second

    report = json.loads(first)
    certificates = report["results"]["reports"]
    assert [c["theorem_id"] for c in certificates] == ["theorem1", "theorem2", "theorem3", "theorem4-nondifferential"]
    assert all(c["violations"] == 0 for c in certificates)
    assert all(c["generator"] == "numpy.random.Generator(PCG64)" for c in certificates)


def test_verify_selection_and_extras():
    only_three = json.loads(invoke("verify", "--theorem", "3", "--points", "3", "--draws", "10", "--format", "json").stdout)
    assert [c["theorem_id"] for c in only_three["results"]["reports"]] == ["theorem3"]

    extras = json.loads(
        invoke(*SMALL_VERIFY, "--properties", "--explore").stdout
    )
    assert len(extras["results"]["reports"]) == 8
    assert len(extras["results"]["exploration"]) == 5
    assert extras["warnings"]

    text = invoke("verify", "--theorem", "1", "--points", "3", "--draws", "10", "--explore").stdout
    assert "exploratory" in text


def test_json_round_trip():
    for args in (WORKED_EXAMPLE, ["outcome-rr", "--table", STRATIFIED_TABLE], SMALL_VERIFY[:-2]):
        text = invoke(*args, "--format", "json").stdout.rstrip("\n")
        assert render_json(parse_reports(text)) == text


def test_report_written_to_file(tmp_path):
    out = tmp_path / "report.json"
    result = invoke(*WORKED_EXAMPLE, "--format", "json", "--out", str(out))
    assert result.stdout == ""
    (report,) = parse_reports(out.read_text())
    assert report.results.explain_away.value == pytest.approx(1.51)


def test_curve_csv(tmp_path):
    print("=== Test Bound Curve ===")

    out = tmp_path / "curve.csv"
    invoke("outcome-rr", "--estimate", "1.51", "--curve", "1,2,3", "--curve-out", str(out))
    frame = pd.read_csv(out)

    assert list(frame.columns) == ["assumed_max_dme", "implied_bound"]
    assert frame["assumed_max_dme"].tolist() == pytest.approx([1.0, 1.5, 2.0])
    assert frame["implied_bound"].tolist() == pytest.approx([1.51, 1.0067, 0.755], abs=1e-4)
    assert frame["implied_bound"].is_monotonic_decreasing


def test_curve_rows():
    observed = ObservedAssociation(estimate=1.51, scale="odds-ratio")

    (single,) = emit_curve(observed, CurveSpec(minimum=1, maximum=1, steps=1))
    assert single.implied_bound == pytest.approx(1.51)

    at_estimate = emit_curve(observed, CurveSpec(minimum=1.51, maximum=1.51, steps=1))
    assert at_estimate[0].implied_bound == pytest.approx(1.0)

    preventive = emit_curve(ObservedAssociation(estimate=0.5, scale="risk-ratio"), CurveSpec(minimum=1, maximum=2, steps=5))
    bounds = [p.implied_bound for p in preventive]
    assert bounds == sorted(bounds)
    assert bounds[-1] == pytest.approx(1.0)


@pytest.mark.parametrize(
    "curve",
    [CurveSpec(minimum=2, maximum=1, steps=3), CurveSpec(minimum=0.5, maximum=2, steps=3),
     CurveSpec(minimum=1, maximum=2, steps=0), CurveSpec(minimum=1, maximum=2, steps=1)],
)
def test_curve_range_errors(curve):
    with pytest.raises(CurveRangeError):
        emit_curve(ObservedAssociation(estimate=1.51, scale="odds-ratio"), curve)


@pytest.mark.parametrize(
    "argv, code",
    [
        (WORKED_EXAMPLE, EXIT_OK),
        (["outcome-rr"], EXIT_USAGE),
        (["outcome-rr", "--estimate", "1.5", "--table", EXAMPLE_TABLE], EXIT_USAGE),
        (["outcome-rr", "--estimate", "1.5", "--s1", "0.9"], EXIT_USAGE),
        (["outcome-rr", "--estimate", "1.5", "--ci", "oops"], EXIT_USAGE),
        (["outcome-rr", "--estimate", "1.51", "--curve", "2,1,3"], EXIT_USAGE),
        (["no-such-command"], EXIT_USAGE),
        (["outcome-rr", "--estimate", "-1"], EXIT_VALIDATION),
        (["outcome-rr", "--estimate", "1.5", "--ci", "1.6,2.0"], EXIT_VALIDATION),
        (["exposure-or", "--estimate", "1.51", "--target", "2.0"], EXIT_VALIDATION),
        (["exposure-or", "--estimate", "1.51", "--target", "0.9"], EXIT_VALIDATION),
        (["outcome-rr", "--estimate", "1.5", "--s1", "1.2", "--s0", "0.8", "--f1", "0.1", "--f0", "0.1"], EXIT_VALIDATION),
        (["outcome-rr", "--table", "no/such/table.csv"], EXIT_VALIDATION),
        (["continuous-outcome", "--beta1-star", "0.7", "--gamma1", "0.2", "--gamma2", "0"], EXIT_VALIDATION),
        (["verify", "--points", "1"], EXIT_VALIDATION),
    ],
)
def test_exit_codes(argv, code, capsys):
    assert main(argv) == code
    if code != EXIT_OK:
        assert capsys.readouterr().err


def test_verification_failure_exit_code(monkeypatch, capsys):
    def corrupted(spec):
        return verify_theorem1(spec, bounds=lambda o, mx, mn: (o / mn, o / mx))

    monkeypatch.setitem(CERTIFICATES, "1", corrupted)
    assert main(["verify", "--theorem", "1", "--points", "3", "--draws", "10"]) == EXIT_VERIFICATION
    err = capsys.readouterr().err
    assert "Verification failed" in err
    assert "counterexample" in err


def test_empty_arm_fails_even_with_haldane(tmp_path, capsys):
    table = tmp_path / "empty_arm.csv"
    table.write_text("exposure,outcome,count\n1,1,0\n1,0,0\n0,1,5\n0,0,5\n")

    assert main(["outcome-rr", "--table", str(table), "--haldane"]) == EXIT_VALIDATION
    assert "zero total" in capsys.readouterr().err


def test_display_rounds_half_up():
    """2.25 / 2.0 = 1.125 exactly; text shows 1.13"""
    output = invoke("outcome-rr", "--estimate", "2.25", "--target", "2.0").stdout
    assert "1.13 (max DME must reach this)" in output
    assert "1.12 (max DME" not in output


def test_json_shaped_format_alias():
    report = json.loads(invoke(*WORKED_EXAMPLE, "--format", "json-shaped").stdout)
    assert report["results"]["explain_away"]["value"] == pytest.approx(1.51)
    assert json.loads(invoke(*WORKED_EXAMPLE, "--format", "json").stdout) == report
