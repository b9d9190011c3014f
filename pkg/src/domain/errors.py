"""
Error hierarchy shared by every module.

Type invariants are enforced by the pydantic models themselves and surface as
pydantic.ValidationError. The classes here cover the failures of operations
on already-valid values.
"""

from typing import Optional


class DmeError(Exception):
    """Base class for all library errors"""


class DmeInputError(DmeError, ValueError):
    """An operation received valid values it cannot work with"""


class ZeroCellError(DmeInputError):
    """A contingency table has a zero cell and no correction was requested"""


class EmptyMarginError(DmeInputError):
    """An exposure arm of a contingency table has no observations"""


class ScaleMismatchError(DmeInputError):
    """The observed association is on the wrong ratio scale"""


class AlreadyNullError(DmeInputError):
    """The observed association is exactly 1; nothing to explain away"""


class TargetBeyondEstimateError(DmeInputError):
    """Shift target is further from the null than the observed estimate"""


class TargetAcrossNullError(DmeInputError):
    """Shift target lies on the other side of 1 from the observed estimate"""


class MissingIntervalError(DmeInputError):
    """Both confidence limits are required"""


class DirectionError(DmeInputError):
    """A bound was requested without a causative or preventive direction"""


class TableFormatError(DmeInputError):
    """A contingency-table CSV does not follow the long format"""


class CurveRangeError(DmeInputError):
    """A bound-curve range is empty or inverted"""


class VerificationFailure(DmeError):
    """
    A certificate found a case violating its inequality or round trip.

    Attributes:
        report: The VerificationReport of the failing run
        counterexample: Parameter vector of the first violation in grid order
    """

    def __init__(self, message: str, report=None, counterexample: Optional[dict] = None):
        super().__init__(message)
        self.report = report
        self.counterexample = counterexample or {}
