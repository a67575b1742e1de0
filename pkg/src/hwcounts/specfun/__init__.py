"""Special-function kernel: stable incomplete-gamma ratios, scaled erfc
quotients, uniform-asymptotics coefficients, and the W_{-1} Lambert branch."""

from ._tables import JMAX, SINGULAR_PART, STIRLING_GAMMA
from .erfc import erfc, erfc_ratio, erfcx, gauss_over_erfc, shifted_gauss_over_erfc
from .gammainc import (
    TEMME_MIN_A,
    eta_of_lambda,
    gamma_ratio_log,
    log_p,
    log_p_derivative_y,
    temme_c_values,
)
from .lambertw import lambert_w_m1
from .temme import (
    TemmeCoeff,
    residue_identity_gap,
    stirling_gamma,
    temme_coeff,
    temme_coeff_recursive,
    temme_coeff_recursive_series,
    temme_gamma_ratio,
)

__all__ = [
    "JMAX",
    "SINGULAR_PART",
    "STIRLING_GAMMA",
    "TEMME_MIN_A",
    "TemmeCoeff",
    "erfc",
    "erfc_ratio",
    "erfcx",
    "eta_of_lambda",
    "gamma_ratio_log",
    "gauss_over_erfc",
    "lambert_w_m1",
    "log_p",
    "log_p_derivative_y",
    "residue_identity_gap",
    "shifted_gauss_over_erfc",
    "stirling_gamma",
    "temme_c_values",
    "temme_coeff",
    "temme_coeff_recursive",
    "temme_coeff_recursive_series",
    "temme_gamma_ratio",
]
