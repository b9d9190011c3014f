"""
Command-line surface: requests, report assembly, rendering and the `dme` group.
"""

from src.cli.commands import EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_VERIFICATION, cli, main
from src.cli.reports import DmeBoundReport, emit_curve, run
from src.cli.render import parse_reports, render_json, render_text, write_curve_csv
from src.cli.requests import AnalysisMode, AnalysisRequest, CurveSpec, OutputFormat
from src.cli.scenarios import list_scenarios, load_scenario

__all__ = [
    'EXIT_OK', 'EXIT_USAGE', 'EXIT_VALIDATION', 'EXIT_VERIFICATION', 'cli', 'main',
    'DmeBoundReport', 'emit_curve', 'run',
    'parse_reports', 'render_json', 'render_text', 'write_curve_csv',
    'AnalysisMode', 'AnalysisRequest', 'CurveSpec', 'OutputFormat',
    'list_scenarios', 'load_scenario',
]
