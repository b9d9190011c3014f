"""
Text and structured rendering of reports, and CSV output for bound curves.

Text output rounds to DISPLAY_DECIMALS; structured output keeps full
precision and parses back into identical reports.
"""

from decimal import ROUND_HALF_UP, Decimal
from io import StringIO
from typing import List, Optional, Sequence

import click
import pandas as pd
from pydantic import TypeAdapter
from rich import box
from rich.console import Console
from rich.table import Table

from src.cli.reports import (
    BoundResults,
    CorrectionResults,
    CurvePoint,
    DmeBoundReport,
    VerificationResults,
)
from src.config import DISPLAY_DECIMALS
from src.domain.models import RatioScale
from src.domain.thresholds import Threshold, ThresholdKind
from src.exposure.misclassification import ExposureDmeComponents

RENDER_WIDTH = 100
CURVE_COLUMNS = ["assumed_max_dme", "implied_bound"]

E_VALUE_NOTE = (
    "Note: the explain-away threshold for differential error equals the observed "
    "ratio itself, lower than the E-value for unmeasured confounding of the same ratio."
)

_REPORT_LIST = TypeAdapter(List[DmeBoundReport])
_DISPLAY_QUANTUM = Decimal(1).scaleb(-DISPLAY_DECIMALS)


def _fmt(value: Optional[float]) -> str:
    """Half-up rounding of the shortest decimal repr, so 1.125 shows as 1.13"""
    if value is None:
        return "-"
    return str(Decimal(repr(float(value))).quantize(_DISPLAY_QUANTUM, rounding=ROUND_HALF_UP))


def _threshold(threshold: Threshold) -> str:
    if threshold.kind == ThresholdKind.INFLATING:
        return f"{_fmt(threshold.value)} (max DME must reach this)"
    if threshold.kind == ThresholdKind.DEFLATING:
        return f"{_fmt(threshold.value)} (min DME must fall to {_fmt(threshold.raw_ratio)})"
    return f"{_fmt(threshold.value)} (no differential error needed)"


def _print_to_text(*renderables) -> str:
    buffer = StringIO()
    console = Console(
        file=buffer, width=RENDER_WIDTH, no_color=True, highlight=False, markup=False, force_terminal=False
    )
    for renderable in renderables:
        console.print(renderable)
    return buffer.getvalue()


def _quantity_table(title: str) -> Table:
    table = Table(title=title, box=box.SIMPLE_HEAD, show_header=True)
    table.add_column("Quantity")
    table.add_column("Value", justify="right")
    return table


def _bound_tables(report: DmeBoundReport) -> list:
    r: BoundResults = report.results
    title = report.mode.value if r.stratum is None else f"{report.mode.value} (stratum {r.stratum})"
    table = _quantity_table(title)

    observed = r.observed
    table.add_row(f"Observed {observed.scale.value}", _fmt(observed.estimate))
    if observed.has_interval:
        table.add_row("Confidence interval", f"{_fmt(observed.ci_lower)} to {_fmt(observed.ci_upper)}")
    table.add_row("Direction", r.direction.value)

    c = r.components
    if isinstance(c, ExposureDmeComponents):
        table.add_row("DME odds ratio, sensitivity", _fmt(c.or_sensitivity))
        table.add_row("DME odds ratio, false positives", _fmt(c.or_false_positive))
        table.add_row("r_c (correct classification)", _fmt(c.r_correct))
        table.add_row("r_i (incorrect classification)", _fmt(c.r_incorrect))
    elif c is not None:
        table.add_row("s1/s0", _fmt(c.sensitivity_ratio))
        table.add_row("f1/f0", _fmt(c.false_positive_ratio))
    if c is not None:
        table.add_row("Max DME", _fmt(c.max_dme))
        table.add_row("Min DME", _fmt(c.min_dme))
    if r.bound is not None:
        table.add_row(f"{r.bound_side.value.capitalize()} bound on the truth", _fmt(r.bound))

    if r.explain_away is not None:
        table.add_row("Explain-away threshold", _threshold(r.explain_away))
    if r.shift is not None:
        table.add_row(f"Shift to {_fmt(report.inputs.target)}", _threshold(r.shift))
    if r.ci_shift is not None:
        table.add_row("CI-shift threshold", _threshold(r.ci_shift))
    if r.classification_ratio_advisory is not None:
        table.add_row("Classification-ratio advisory", "yes" if r.classification_ratio_advisory else "no")

    tables = [table]
    if r.curve:
        curve = Table(title="Bound curve", box=box.SIMPLE_HEAD)
        curve.add_column("Assumed DME factor", justify="right")
        curve.add_column("Implied bound", justify="right")
        for point in r.curve:
            curve.add_row(_fmt(point.assumed_max_dme), _fmt(point.implied_bound))
        tables.append(curve)
    if observed.scale == RatioScale.RISK_RATIO and r.explain_away is not None:
        tables.append(E_VALUE_NOTE)
    return tables


def _correction_tables(report: DmeBoundReport) -> list:
    r: CorrectionResults = report.results
    table = _quantity_table(report.mode.value)
    table.add_row("Corrected coefficient", _fmt(r.corrected))
    if r.attenuation is not None:
        table.add_row("Attenuation (lambda)", _fmt(r.attenuation))
    if r.differential_offset is not None:
        table.add_row("Differential offset", _fmt(r.differential_offset))
    table.add_row("Approximate", "yes" if r.approximate else "no")
    return [table]


def _verification_tables(report: DmeBoundReport) -> list:
    r: VerificationResults = report.results
    table = Table(title="Certificates", box=box.SIMPLE_HEAD)
    for column in ("Certificate", "Restriction", "Cases", "Violations", "Worst slack", "Max residual"):
        table.add_column(column)
    for v in r.reports:
        table.add_row(
            v.theorem_id,
            v.restriction.value,
            str(v.cases_checked),
            str(v.violations),
            f"{v.worst_slack:.3e}",
            "-" if v.max_abs_residual is None else f"{v.max_abs_residual:.3e}",
        )
    tables = [table]

    if r.exploration:
        explore = Table(title="Continuous exposure, gamma1 != 0 (exploratory)", box=box.SIMPLE_HEAD)
        for column in ("gamma1", "Simulated", "Moment", "Formula", "Corrected", "Discrepancy"):
            explore.add_column(column, justify="right")
        for row in r.exploration:
            explore.add_row(
                f"{row.gamma1:+.2f}",
                f"{row.simulated_slope:.4f}",
                f"{row.moment_slope:.4f}",
                f"{row.formula_slope:.4f}",
                f"{row.corrected:.4f}",
                f"{row.discrepancy:+.4f}",
            )
        tables.append(explore)
    return tables


def render_text(reports: Sequence[DmeBoundReport]) -> str:
    """Fixed-width tables, one block per report, warnings last"""
    renderables = []
    for report in reports:
        if isinstance(report.results, BoundResults):
            renderables.extend(_bound_tables(report))
        elif isinstance(report.results, CorrectionResults):
            renderables.extend(_correction_tables(report))
        else:
            renderables.extend(_verification_tables(report))
        renderables.extend(f"Warning: {warning}" for warning in report.warnings)
    return _print_to_text(*renderables)


def render_json(reports: Sequence[DmeBoundReport]) -> str:
    """A single report as an object; several (one per stratum) as an array"""
    if len(reports) == 1:
        return reports[0].model_dump_json(indent=2)
    return _REPORT_LIST.dump_json(list(reports), indent=2).decode()


def parse_reports(text: str) -> List[DmeBoundReport]:
    """Inverse of render_json"""
    if text.lstrip().startswith("["):
        return _REPORT_LIST.validate_json(text)
    return [DmeBoundReport.model_validate_json(text)]


def curve_frame(points: Sequence[CurvePoint]) -> pd.DataFrame:
    return pd.DataFrame([point.model_dump() for point in points], columns=CURVE_COLUMNS)


def write_curve_csv(points: Sequence[CurvePoint], path: Optional[str] = None) -> None:
    """CSV with columns assumed_max_dme, implied_bound; stdout when path is None or '-'"""
    frame = curve_frame(points)
    if path is None or path == "-":
        click.echo(frame.to_csv(index=False), nl=False)
    else:
        frame.to_csv(path, index=False)
