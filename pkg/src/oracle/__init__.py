"""
Verification harness: grid and seeded-draw certificates for every bound and
correction, plus the exploratory continuous-exposure simulation.
"""

from src.oracle.certificates import (
    CERTIFICATES,
    VerificationReport,
    verify_all,
    verify_nondifferential_attenuation,
    verify_null_contrapositive,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
    verify_theorem4_nondifferential,
)
from src.oracle.explore import ExplorationRow, ExplorationSettings, explore_theorem4
from src.oracle.grid import GENERATOR_ID, GridRestriction, GridSpec

__all__ = [
    'CERTIFICATES', 'VerificationReport', 'verify_all', 'verify_nondifferential_attenuation',
    'verify_null_contrapositive', 'verify_theorem1', 'verify_theorem2', 'verify_theorem3',
    'verify_theorem4_nondifferential', 'ExplorationRow', 'ExplorationSettings', 'explore_theorem4',
    'GENERATOR_ID', 'GridRestriction', 'GridSpec',
]
