"""
Corrected regression coefficients under differential error of a continuous
outcome or exposure.

Outcome error: with E[Y*|a,y,c] = g0 + g1*a + g2*y + g3*c and linear models
for Y and Y* on (A, C), the true slope is (beta1* - g1) / g2. Intercept and
covariate terms cancel, so only the slopes are carried.

Exposure error: with E[A*|a,y,c] = g0 + a + g1*y + g2'c, error variance
sigma_u^2 and sigma_a^2 = Var(A|C), the true slope is
[coeff* - g1 / (sigma_a^2 + sigma_u^2)] / lambda with
lambda = sigma_a^2 / (sigma_a^2 + sigma_u^2). The same arithmetic applied to a
logistic coefficient for a rare binary outcome is only approximate.

Note: the exposure-error result writes the mismeasured regression as
E[Y*|a,c]; here it is read as the regression of Y on (A*, C), since the
outcome is not mismeasured in that setting.
"""

from enum import Enum

from pydantic import Field, field_validator

from src.domain.models import DomainModel


class OutcomeKind(str, Enum):
    """Model the exposure coefficient comes from"""
    LINEAR = "linear"
    RARE_BINARY_LOGISTIC = "rare-binary-logistic"


class ContinuousOutcomeSpec(DomainModel):
    """Observed slope and the measurement model of Y*"""
    beta1_star: float
    gamma1: float
    gamma2: float

    @field_validator("gamma2")
    @classmethod
    def _gamma2_nonzero(cls, value: float) -> float:
        if value == 0.0:
            raise ValueError("gamma2 must be nonzero (degenerate measurement of Y)")
        return value


class ContinuousExposureSpec(DomainModel):
    """Observed coefficient, the measurement model of A* and variance terms"""
    coeff_star: float
    gamma1: float
    sigma_a2: float = Field(gt=0.0)
    sigma_u2: float = Field(ge=0.0)
    outcome_kind: OutcomeKind = OutcomeKind.LINEAR

    @property
    def total_variance(self) -> float:
        return self.sigma_a2 + self.sigma_u2

    @property
    def attenuation(self) -> float:
        """lambda = sigma_a^2 / (sigma_a^2 + sigma_u^2), in (0, 1]"""
        return self.sigma_a2 / self.total_variance

    @property
    def is_approximate(self) -> bool:
        return self.outcome_kind == OutcomeKind.RARE_BINARY_LOGISTIC


def outcome_slope_correction(beta1_star, gamma1, gamma2):
    """(beta1* - gamma1) / gamma2 on scalars or numpy arrays"""
    return (beta1_star - gamma1) / gamma2


def exposure_coefficient_correction(coeff_star, gamma1, sigma_a2, sigma_u2):
    """[coeff* - gamma1 / (sigma_a2 + sigma_u2)] / lambda on scalars or numpy arrays"""
    total_variance = sigma_a2 + sigma_u2
    attenuation = sigma_a2 / total_variance
    return (coeff_star - gamma1 / total_variance) / attenuation


def correct_beta_outcome(s: ContinuousOutcomeSpec) -> float:
    """True exposure slope from the slope fitted with the mismeasured outcome"""
    return outcome_slope_correction(s.beta1_star, s.gamma1, s.gamma2)


def forward_beta_star_outcome(beta1: float, gamma1: float, gamma2: float) -> float:
    """Slope of Y* on A implied by a true slope; the exact inverse of the correction"""
    return gamma1 + gamma2 * beta1


def differential_offset(s: ContinuousExposureSpec) -> float:
    """gamma1 / (sigma_a^2 + sigma_u^2), the term subtracted before rescaling"""
    return s.gamma1 / s.total_variance


def correct_coeff_exposure(s: ContinuousExposureSpec) -> float:
    """
    True exposure coefficient from the one fitted on A*.

    For outcome_kind RARE_BINARY_LOGISTIC the value is an approximation;
    callers should report it as such (see ContinuousExposureSpec.is_approximate).
    """
    return exposure_coefficient_correction(s.coeff_star, s.gamma1, s.sigma_a2, s.sigma_u2)
