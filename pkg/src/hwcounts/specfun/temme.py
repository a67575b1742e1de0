"""Uniform-asymptotics coefficient API and truncated gamma-ratio evaluator."""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.special import erfcx

from ..errors import DomainError, UnsupportedOrder
from ._tables import (
    JMAX,
    SINGULAR_PART,
    STIRLING_GAMMA,
    _log_series,
    _sigma_series,
    double_factorial,
    sigma_power_series,
)
from .gammainc import eta_of_lambda, temme_c_values

_SQRT2PI = np.sqrt(2.0 * np.pi)


@dataclass(frozen=True)
class TemmeCoeff:
    """One remainder coefficient c_j(eta) together with its singular table."""

    j: int
    lam: float
    eta: float
    value: float
    singular_coeffs: tuple[Fraction, ...]


def temme_coeff(j: int, lam: float) -> TemmeCoeff:
    """Remainder coefficient c_j at lambda, c_j = phi_j - S(phi_j).

    The precomputed exact-rational singular table covers j <= 8; near
    lambda = 1 the removable singularity is evaluated by its Taylor branch.
    """
    if j < 0 or j > JMAX:
        raise UnsupportedOrder(f"coefficient order {j} outside 0..{JMAX}")
    if lam <= 0.0:
        raise DomainError("temme_coeff requires lambda > 0")
    value = float(temme_c_values(np.array([lam]), j)[j, 0])
    eta = float(eta_of_lambda(lam))
    return TemmeCoeff(
        j=j, lam=lam, eta=eta, value=value, singular_coeffs=SINGULAR_PART[j]
    )


def stirling_gamma(j: int) -> Fraction:
    """Stirling coefficient gamma_j (gamma_0 = 1, gamma_1 = -1/12, ...)."""
    if j < 0 or j > JMAX:
        raise UnsupportedOrder(f"Stirling coefficient {j} outside 0..{JMAX}")
    return STIRLING_GAMMA[j]


def temme_coeff_recursive_series(j: int, order: int = 30) -> list[Fraction]:
    """Taylor coefficients of c_j about lambda = 1 via the recursion
    c_j = (1/eta) d c_{j-1} / d eta + gamma_j/(lambda-1).

    This is an independent route: it never touches the singular tables and
    consumes the Stirling coefficients instead.  All arithmetic is exact
    rational power-series manipulation in w = lambda - 1; the 1/w poles of
    the two recursion terms cancel, which is asserted.
    """
    if j < 0:
        raise UnsupportedOrder("negative order")
    # work at an internal order high enough to survive j divisions
    n = order + 2 * j + 6
    sqrt_sigma = sigma_power_series(Fraction(1, 2), n)
    inv_sqrt_sigma = sigma_power_series(Fraction(-1, 2), n)
    # eta = w * sqrt_sigma; deta/dw = sqrt_sigma + w * d(sqrt_sigma)/dw
    deta_dw = [
        sqrt_sigma[k] + (k * sqrt_sigma[k] if k <= n else 0)
        for k in range(n + 1)
    ]
    inv_deta_dw = _series_reciprocal(deta_dw, n)
    # c_0 = 1/w - 1/eta = (1 - sigma^{-1/2})/w  (regular: series starts at w^1)
    assert inv_sqrt_sigma[0] == 1
    c = [-inv_sqrt_sigma[k + 1] for k in range(n)] + [Fraction(0)]
    for level in range(1, j + 1):
        dc_dw = [(k + 1) * c[k + 1] for k in range(n)] + [Fraction(0)]
        dc_deta = _series_mul(dc_dw, inv_deta_dw, n)
        # (1/eta) * dc_deta = (1/w) * sigma^{-1/2} * dc_deta
        t = _series_mul(dc_deta, inv_sqrt_sigma, n)
        # add gamma_level / w : pole must cancel against t[0]/w
        pole = t[0] + STIRLING_GAMMA[level]
        assert pole == 0, f"recursion pole failed to cancel at j={level}"
        c = [t[k + 1] for k in range(n)] + [Fraction(0)]
    return c[: order + 1]


def _series_mul(a, b, n):
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a[: n + 1]):
        if ai == 0:
            continue
        for k in range(0, n + 1 - i):
            bk = b[k]
            if bk:
                out[i + k] += ai * bk
    return out


def _series_reciprocal(a, n):
    assert a[0] != 0
    out = [Fraction(0)] * (n + 1)
    out[0] = 1 / a[0]
    for k in range(1, n + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            acc += a[i] * out[k - i]
        out[k] = -acc / a[0]
    return out


def temme_coeff_recursive(j: int, lam: float, order: int = 36) -> float:
    """Evaluate c_j(lambda) from the recursion route (series in lambda-1).

    Valid for |lambda - 1| < 1 with accuracy set by ``order``; meant as the
    cross-check partner of :func:`temme_coeff`, not for production use.
    """
    coeffs = temme_coeff_recursive_series(j, order)
    w = lam - 1.0
    acc = 0.0
    for c in coeffs[::-1]:
        acc = acc * w + float(c)
    return acc


def temme_gamma_ratio(a: float, lam: float, N: int) -> float:
    """N-term uniform approximation of gamma(a, lam*a)/Gamma(a).

    erfc leading term plus the remainder series truncated after c_{N-1};
    the truncation error is O(a^{-N-1/2}) + O((a eta^2)^{-N-1/2}).  The
    window |lambda - 1| < 1/sqrt(a) is rejected (callers should use the
    exact evaluator there).
    """
    if a < 10.0:
        raise DomainError("temme_gamma_ratio requires a >= 10")
    if not 1 <= N <= 6:
        raise UnsupportedOrder("term count N must be in 1..6")
    if abs(lam - 1.0) < 1.0 / np.sqrt(a):
        raise DomainError("lambda inside the excluded window around 1")
    eta = float(eta_of_lambda(lam))
    half = a * ((lam - 1.0) - np.log1p(lam - 1.0))
    big_x = eta * np.sqrt(a / 2.0)
    cj = temme_c_values(np.array([lam]), N - 1)[:, 0]
    remainder = 0.0
    for j in range(N - 1, -1, -1):
        remainder = remainder / a + cj[j]
    remainder /= _SQRT2PI * np.sqrt(a)
    with np.errstate(under="ignore"):
        if eta <= 0.0:
            return float(
                np.exp(-half) * (0.5 * erfcx(abs(big_x)) - remainder)
            )
        q = np.exp(-half) * (0.5 * erfcx(big_x) + remainder)
        return float(1.0 - q)


def residue_identity_gap(j: int) -> Fraction:
    """Res_{lambda=1} phi_j + gamma_j; zero for a consistent table pair."""
    return SINGULAR_PART[j][0] + STIRLING_GAMMA[j]


__all__ = [
    "TemmeCoeff",
    "temme_coeff",
    "temme_coeff_recursive",
    "temme_coeff_recursive_series",
    "temme_gamma_ratio",
    "stirling_gamma",
    "residue_identity_gap",
    "eta_of_lambda",
]
