"""
Shared domain types, 2x2 estimators and threshold arithmetic.
"""

from src.domain.errors import (
    AlreadyNullError,
    CurveRangeError,
    DirectionError,
    DmeError,
    DmeInputError,
    EmptyMarginError,
    MissingIntervalError,
    ScaleMismatchError,
    TableFormatError,
    TargetAcrossNullError,
    TargetBeyondEstimateError,
    VerificationFailure,
    ZeroCellError,
)
from src.domain.estimators import (
    estimate_odds_ratio,
    estimate_risk_ratio,
    null_direction,
    wald_critical_value,
)
from src.domain.ingestion import load_tables, tables_from_frame
from src.domain.models import (
    ContingencyTable,
    Direction,
    ObservedAssociation,
    RatioScale,
    TrueBinaryModel,
)
from src.domain.thresholds import (
    Threshold,
    ThresholdKind,
    ci_shift_threshold,
    explain_away_threshold,
    implied_bound,
    shift_threshold,
)

__all__ = [
    'AlreadyNullError', 'CurveRangeError', 'DirectionError', 'DmeError', 'DmeInputError',
    'EmptyMarginError', 'MissingIntervalError', 'ScaleMismatchError', 'TableFormatError',
    'TargetAcrossNullError', 'TargetBeyondEstimateError', 'VerificationFailure', 'ZeroCellError',
    'estimate_odds_ratio', 'estimate_risk_ratio', 'null_direction', 'wald_critical_value',
    'load_tables', 'tables_from_frame',
    'ContingencyTable', 'Direction', 'ObservedAssociation', 'RatioScale', 'TrueBinaryModel',
    'Threshold', 'ThresholdKind', 'ci_shift_threshold', 'explain_away_threshold', 'implied_bound', 'shift_threshold',
]
