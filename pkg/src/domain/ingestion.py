"""
Contingency-table ingestion from long-format CSV.

Expected header: exposure,outcome,count[,stratum]
- exposure and outcome coded 0/1
- count a non-negative integer; repeated (exposure, outcome) rows are summed
- one ContingencyTable per distinct stratum, in first-seen order; without a
  stratum column everything belongs to stratum "all"
"""

from pathlib import Path
from typing import List, Union

import pandas as pd

from src.config import get_logger
from src.domain.errors import TableFormatError
from src.domain.models import ContingencyTable

logger = get_logger(__name__)

REQUIRED_COLUMNS = ("exposure", "outcome", "count")
DEFAULT_STRATUM = "all"


def _validate_frame(frame: pd.DataFrame, source: str) -> pd.DataFrame:
    missing = [c for c in REQUIRED_COLUMNS if c not in frame.columns]
    if missing:
        raise TableFormatError(f"{source}: missing column(s) {', '.join(missing)}")
    if frame.empty:
        raise TableFormatError(f"{source}: no rows")

    for column in ("exposure", "outcome"):
        codes = pd.to_numeric(frame[column], errors="coerce")
        if codes.isna().any() or not codes.isin([0, 1]).all():
            raise TableFormatError(f"{source}: column '{column}' must be coded 0/1")
        frame[column] = codes.astype(int)

    counts = pd.to_numeric(frame["count"], errors="coerce")
    if counts.isna().any() or (counts < 0).any() or (counts % 1 != 0).any():
        raise TableFormatError(f"{source}: column 'count' must hold non-negative integers")
    frame["count"] = counts.astype(int)

    if "stratum" not in frame.columns:
        frame["stratum"] = DEFAULT_STRATUM
    frame["stratum"] = frame["stratum"].fillna(DEFAULT_STRATUM).astype(str)
    return frame


def tables_from_frame(frame: pd.DataFrame, source: str = "<frame>") -> List[ContingencyTable]:
    """
    Build one ContingencyTable per stratum from a long-format frame.

    Raises:
        TableFormatError: Missing columns, bad codes or counts
        pydantic.ValidationError: A stratum with no observations
    """
    frame = _validate_frame(frame.copy(), source)

    tables = []
    for stratum in frame["stratum"].unique():
        rows = frame[frame["stratum"] == stratum]
        cells = rows.groupby(["exposure", "outcome"])["count"].sum()
        tables.append(
            ContingencyTable(
                n11=int(cells.get((1, 1), 0)),
                n10=int(cells.get((1, 0), 0)),
                n01=int(cells.get((0, 1), 0)),
                n00=int(cells.get((0, 0), 0)),
                stratum_label=stratum,
            )
        )
    return tables


def load_tables(path: Union[str, Path]) -> List[ContingencyTable]:
    """
    Read a long-format CSV into per-stratum tables.

    Raises:
        FileNotFoundError: If the file doesn't exist
        TableFormatError: If the file does not follow the long format
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Table file not found: {path}")

    try:
        frame = pd.read_csv(path, dtype=str, skipinitialspace=True)
    except (pd.errors.EmptyDataError, pd.errors.ParserError) as e:
        raise TableFormatError(f"{path}: {e}") from e

    tables = tables_from_frame(frame, source=str(path))
    logger.info("Loaded %d stratum table(s) from %s", len(tables), path)
    return tables
