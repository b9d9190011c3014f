"""
The `dme` command group.

Subcommands: outcome-rr, exposure-or, continuous-outcome,
continuous-exposure, verify, scenarios. Options may be preset from a YAML
scenario with --scenario; explicit flags win.

Exit codes: 0 success, 1 usage, 2 invalid input, 3 verification failure.
"""

import logging
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple

import click
import yaml
from pydantic import ValidationError

from src.cli.reports import DmeBoundReport, run
from src.cli.render import render_json, render_text, write_curve_csv
from src.cli.requests import (
    AnalysisMode,
    AnalysisRequest,
    ContinuousExposureInputs,
    ContinuousOutcomeInputs,
    CurveSpec,
    ExposureInputs,
    OutcomeInputs,
    OutputFormat,
    VerifyInputs,
)
from src.cli.scenarios import list_scenarios, load_scenario
from src.config import GRID_POINTS_PER_AXIS, GRID_RANDOM_DRAWS, GRID_SEED, SCENARIOS_DIR, get_logger
from src.continuous.corrections import ContinuousExposureSpec, ContinuousOutcomeSpec, OutcomeKind
from src.domain.errors import CurveRangeError, DmeInputError, VerificationFailure
from src.domain.estimators import estimate_odds_ratio, estimate_risk_ratio
from src.domain.ingestion import load_tables
from src.domain.models import ContingencyTable, ObservedAssociation, RatioScale
from src.exposure.misclassification import ExposureMisclassification
from src.oracle.grid import GridSpec
from src.outcome.misclassification import OutcomeMisclassification

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_VERIFICATION = 3

THEOREMS = ("1", "2", "3", "4")


def _split_numbers(value, count: int, param_hint: str) -> Tuple[float, ...]:
    parts = value if isinstance(value, (list, tuple)) else str(value).split(",")
    if len(parts) != count:
        raise click.BadParameter(f"expected {count} comma-separated numbers, got {value!r}", param_hint=param_hint)
    try:
        return tuple(float(part) for part in parts)
    except (TypeError, ValueError):
        raise click.BadParameter(f"not a number in {value!r}", param_hint=param_hint)


def _parse_ci(ctx, param, value) -> Optional[Tuple[float, float]]:
    if value is None:
        return None
    return _split_numbers(value, 2, "--ci")


def _parse_curve(ctx, param, value) -> Optional[CurveSpec]:
    if value is None:
        return None
    minimum, maximum, steps = _split_numbers(value, 3, "--curve")
    if steps != int(steps):
        raise click.BadParameter(f"STEPS must be a whole number, got {steps}", param_hint="--curve")
    return CurveSpec(minimum=minimum, maximum=maximum, steps=int(steps))


FORMAT_ALIASES = {"json-shaped": OutputFormat.JSON.value}


def _parse_format(ctx, param, value) -> str:
    return FORMAT_ALIASES.get(value, value)


def _format_option(f: Callable) -> Callable:
    f = click.option("--out", type=click.Path(dir_okay=False), help="Write the report here instead of stdout")(f)
    f = click.option(
        "--format", "output_format",
        type=click.Choice([fmt.value for fmt in OutputFormat] + list(FORMAT_ALIASES)),
        callback=_parse_format,
        default=OutputFormat.TEXT.value,
        show_default=True,
        help="Fixed-width text or structured JSON (json-shaped is an alias of json)",
    )(f)
    return f


def _association_options(f: Callable) -> Callable:
    """Options shared by the two binary modes"""
    options = [
        click.option("--estimate", type=float, help="Observed ratio"),
        click.option("--ci", callback=_parse_ci, metavar="L,U", help="Confidence limits of the observed ratio"),
        click.option("--target", type=float, help="Report the strength needed to move the ratio to this value"),
        click.option("--table", "table_path", help="Long-format CSV (exposure,outcome,count[,stratum])"),
        click.option("--haldane", is_flag=True, help="Add 0.5 to every cell of tables with a zero cell"),
        click.option("--curve", callback=_parse_curve, metavar="MIN,MAX,STEPS", help="Tabulate the bound over assumed DME factors"),
        click.option("--curve-out", help="CSV file for the curve ('-' for stdout)"),
    ]
    for option in reversed(options):
        f = option(f)
    return _format_option(f)


def _all_or_none(model, **values):
    given = {name: value for name, value in values.items() if value is not None}
    if not given:
        return None
    if len(given) != len(values):
        flags = ", ".join(f"--{name.replace('_', '-')}" for name in values)
        raise click.UsageError(f"give all of {flags} or none of them")
    return model(**given)


def _observations(
    estimate: Optional[float],
    ci: Optional[Tuple[float, float]],
    table_path: Optional[str],
    haldane: bool,
    scale: RatioScale,
) -> List[Tuple[ObservedAssociation, Optional[ContingencyTable]]]:
    """One observed association per stratum, or the single one given by flags"""
    if (estimate is None) == (table_path is None):
        raise click.UsageError("give exactly one of --estimate or --table")

    if table_path is not None:
        if ci is not None:
            raise click.UsageError("--ci cannot be combined with --table; limits come from the table")
        estimator = estimate_risk_ratio if scale == RatioScale.RISK_RATIO else estimate_odds_ratio
        return [(estimator(table, haldane=haldane), table) for table in load_tables(table_path)]

    if haldane:
        raise click.UsageError("--haldane applies to --table input only")
    lower, upper = ci if ci is not None else (None, None)
    observed = ObservedAssociation(estimate=estimate, scale=scale, ci_lower=lower, ci_upper=upper)
    return [(observed, None)]


def _emit(reports: Sequence[DmeBoundReport], output_format: str, out: Optional[str]) -> None:
    if output_format == OutputFormat.JSON.value:
        text = render_json(reports)
    else:
        text = render_text(reports)

    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
        logger.info("Report written to %s", out)
    else:
        click.echo(text)


def _emit_curves(reports: Sequence[DmeBoundReport], curve_out: Optional[str]) -> None:
    if curve_out is None:
        return
    if len(reports) != 1:
        raise click.UsageError("--curve-out needs a single stratum")
    write_curve_csv(reports[0].results.curve, curve_out)


@click.group()
@click.option("--scenario", help=f"YAML option defaults, by path or by name in {SCENARIOS_DIR}")
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    help="Diagnostics on stderr",
)
@click.pass_context
def cli(ctx: click.Context, scenario: Optional[str], log_level: Optional[str]):
    """Sensitivity analysis for differential measurement error."""
    if log_level:
        logging.getLogger("src").setLevel(log_level.upper())
    if scenario:
        try:
            ctx.default_map = load_scenario(scenario)
        except (ValueError, yaml.YAMLError) as e:
            raise click.BadParameter(str(e), param_hint="--scenario")


@cli.command("outcome-rr")
@_association_options
@click.option("--s1", type=float, help="P(Y*=1 | Y=1, A=1)")
@click.option("--s0", type=float, help="P(Y*=1 | Y=1, A=0)")
@click.option("--f1", type=float, help="P(Y*=1 | Y=0, A=1)")
@click.option("--f0", type=float, help="P(Y*=1 | Y=0, A=0)")
def outcome_rr(estimate, ci, target, table_path, haldane, curve, curve_out, output_format, out, s1, s0, f1, f0):
    """Risk ratio with a misclassified binary outcome."""
    if curve_out is not None and curve is None:
        raise click.UsageError("--curve-out needs --curve")
    misclassification = _all_or_none(OutcomeMisclassification, s1=s1, s0=s0, f1=f1, f0=f0)

    reports = []
    for observed, table in _observations(estimate, ci, table_path, haldane, RatioScale.RISK_RATIO):
        inputs = OutcomeInputs(
            observed=observed,
            misclassification=misclassification,
            target=target,
            table=table,
            haldane=haldane,
        )
        request = AnalysisRequest(
            mode=AnalysisMode.OUTCOME_RR, inputs=inputs, output_format=output_format, curve=curve
        )
        reports.append(run(request))

    _emit(reports, output_format, out)
    _emit_curves(reports, curve_out)


@cli.command("exposure-or")
@_association_options
@click.option("--s1p", type=float, help="P(A*=1 | A=1, Y=1)")
@click.option("--s0p", type=float, help="P(A*=1 | A=1, Y=0)")
@click.option("--f1p", type=float, help="P(A*=1 | A=0, Y=1)")
@click.option("--f0p", type=float, help="P(A*=1 | A=0, Y=0)")
@click.option(
    "--assume-rare-outcome", is_flag=True,
    help="Treat the input as a risk ratio standing in for an odds ratio",
)
def exposure_or(
    estimate, ci, target, table_path, haldane, curve, curve_out, output_format, out,
    s1p, s0p, f1p, f0p, assume_rare_outcome,
):
    """Odds ratio with a misclassified binary exposure."""
    if curve_out is not None and curve is None:
        raise click.UsageError("--curve-out needs --curve")
    misclassification = _all_or_none(ExposureMisclassification, s1p=s1p, s0p=s0p, f1p=f1p, f0p=f0p)
    scale = RatioScale.RISK_RATIO if assume_rare_outcome else RatioScale.ODDS_RATIO

    reports = []
    for observed, table in _observations(estimate, ci, table_path, haldane, scale):
        inputs = ExposureInputs(
            observed=observed,
            misclassification=misclassification,
            target=target,
            assume_rare_outcome=assume_rare_outcome,
            table=table,
            haldane=haldane,
        )
        request = AnalysisRequest(
            mode=AnalysisMode.EXPOSURE_OR, inputs=inputs, output_format=output_format, curve=curve
        )
        reports.append(run(request))

    _emit(reports, output_format, out)
    _emit_curves(reports, curve_out)


@cli.command("continuous-outcome")
@click.option("--beta1-star", type=float, required=True, help="Slope of Y* on A")
@click.option("--gamma1", type=float, required=True, help="Direct effect of A on Y*")
@click.option("--gamma2", type=float, required=True, help="Scale of Y in Y*")
@_format_option
def continuous_outcome(beta1_star, gamma1, gamma2, output_format, out):
    """Corrected slope for a mismeasured continuous outcome."""
    spec = ContinuousOutcomeSpec(beta1_star=beta1_star, gamma1=gamma1, gamma2=gamma2)
    request = AnalysisRequest(
        mode=AnalysisMode.CONTINUOUS_OUTCOME,
        inputs=ContinuousOutcomeInputs(spec=spec),
        output_format=output_format,
    )
    _emit([run(request)], output_format, out)


@cli.command("continuous-exposure")
@click.option("--coeff-star", type=float, required=True, help="Coefficient of A* for Y")
@click.option("--gamma1", type=float, required=True, help="Direct effect of Y on A*")
@click.option("--sigma-a2", type=float, required=True, help="Var(A | C)")
@click.option("--sigma-u2", type=float, required=True, help="Error variance of A*")
@click.option(
    "--outcome-kind",
    type=click.Choice([kind.value for kind in OutcomeKind]),
    default=OutcomeKind.LINEAR.value,
    show_default=True,
)
@_format_option
def continuous_exposure(coeff_star, gamma1, sigma_a2, sigma_u2, outcome_kind, output_format, out):
    """Corrected coefficient for a mismeasured continuous exposure."""
    spec = ContinuousExposureSpec(
        coeff_star=coeff_star,
        gamma1=gamma1,
        sigma_a2=sigma_a2,
        sigma_u2=sigma_u2,
        outcome_kind=outcome_kind,
    )
    request = AnalysisRequest(
        mode=AnalysisMode.CONTINUOUS_EXPOSURE,
        inputs=ContinuousExposureInputs(spec=spec),
        output_format=output_format,
    )
    _emit([run(request)], output_format, out)


@cli.command("verify")
@click.option("--all", "run_all", is_flag=True, help="All four certificates (the default)")
@click.option("--theorem", "theorems", multiple=True, type=click.Choice(THEOREMS), help="Certificate to run; repeatable")
@click.option("--properties", is_flag=True, help="Add the null-slice and attenuation certificates")
@click.option("--explore", is_flag=True, help="Add the exploratory gamma1 != 0 simulation")
@click.option("--seed", type=int, default=GRID_SEED, show_default=True)
@click.option("--points", type=int, default=GRID_POINTS_PER_AXIS, show_default=True, help="Grid points per axis")
@click.option("--draws", type=int, default=GRID_RANDOM_DRAWS, show_default=True, help="Seeded random draws")
@_format_option
def verify(run_all, theorems, properties, explore, seed, points, draws, output_format, out):
    """Numerically certify every bound and correction."""
    selected = list(THEOREMS) if run_all or not theorems else sorted(set(theorems))
    inputs = VerifyInputs(
        grid=GridSpec(points_per_axis=points, random_draws=draws, seed=seed),
        theorems=selected,
        properties=properties,
        explore=explore,
    )
    request = AnalysisRequest(mode=AnalysisMode.VERIFY, inputs=inputs, output_format=output_format)
    _emit([run(request)], output_format, out)


@cli.command("scenarios")
def scenarios():
    """List scenario files."""
    for name in list_scenarios():
        click.echo(name)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the CLI and map failures to exit codes.

    Returns:
        EXIT_OK, EXIT_USAGE, EXIT_VALIDATION or EXIT_VERIFICATION
    """
    args = list(argv) if argv is not None else None
    try:
        cli.main(args=args, prog_name="dme", standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return EXIT_USAGE
    except CurveRangeError as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_USAGE
    except VerificationFailure as e:
        click.echo(f"Verification failed: {e}", err=True)
        if e.report is not None:
            click.echo(e.report.model_dump_json(indent=2), err=True)
        return EXIT_VERIFICATION
    except (ValidationError, DmeInputError, FileNotFoundError) as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_VALIDATION
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_USAGE
    return EXIT_OK
