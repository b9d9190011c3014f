"""
Differential Measurement Error Sensitivity Analysis - Main Entry Point

Usage:
    python -m src.main exposure-or --estimate 1.51 --ci 1.03,2.22 --target 1.1
    python -m src.main outcome-rr --table data/tables/example_table.csv
    python -m src.main verify --all --seed 42
"""

import sys

from src.cli.commands import main as run_cli


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
