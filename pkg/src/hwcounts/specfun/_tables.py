"""Exact-rational coefficient tables for the uniform incomplete-gamma kernel.

Everything here is organized around the variable ``w = lambda - 1`` and the
auxiliary function

    sigma(w) = 2*(w - ln(1+w)) / w**2  =  1 - 2w/3 + w^2/2 - ...,

so that ``eta = w*sqrt(sigma(w))`` carries the sign of ``w``.  The remainder
coefficients of the uniform expansion are

    c_j = phi_j - S(phi_j),      phi_j = (-1)**(j+1) * (2j-1)!! / eta**(2j+1),

where ``S(phi_j)`` is the principal (singular) part of the Laurent expansion
of ``phi_j`` at ``lambda = 1``.  ``SINGULAR_PART[j][k-1]`` is the exact
rational coefficient of ``(lambda-1)**(-k)`` for ``k = 1..2j+1``.  The tables
were generated offline with exact rational power-series arithmetic (the same
recurrences as :func:`sigma_power_series`, which the test suite re-derives
independently with a symbolic Laurent expansion).

The regular (Taylor) part of each ``phi_j`` about ``lambda = 1`` is built at
import time from the same rational recurrences; it is used to evaluate the
``c_j`` without cancellation near ``lambda = 1``.
"""

from fractions import Fraction as F

import numpy as np

#: highest remainder-coefficient order carried by the kernel
JMAX = 8

#: Taylor order of the regular parts kept for |lambda-1| <= SERIES_RADIUS
REGULAR_ORDER = 44

#: switch between the Taylor branch and the direct phi - S(phi) branch
SERIES_RADIUS = 0.35

#: exact singular parts S(phi_j):  entry k-1 multiplies (lambda-1)**(-k)
SINGULAR_PART = {
    0: (F(-1, 1),),
    1: (F(1, 12), F(1, 1), F(1, 1)),
    2: (F(-1, 288), F(-1, 12), F(-25, 12), F(-5, 1), F(-3, 1)),
    3: (F(-139, 51840), F(1, 288), F(49, 288), F(77, 12), F(105, 4), F(35, 1),
        F(15, 1)),
    4: (F(571, 2488320), F(139, 51840), F(-221, 51840), F(-149, 288),
        F(-2513, 96), F(-1883, 12), F(-1365, 4), F(-315, 1), F(-105, 1)),
    5: (F(163879, 209018880), F(-571, 2488320), F(-2783, 497664), F(77, 10368),
        F(35981, 17280), F(38291, 288), F(102949, 96), F(13321, 4),
        F(19635, 4), F(3465, 1), F(945, 1)),
    6: (F(-5246819, 75246796800), F(-163879, 209018880), F(-67951, 209018880),
        F(42887, 2488320), F(-715, 55296), F(-108251, 10368),
        F(-2792933, 3456), F(-797225, 96), F(-3278275, 96), F(-283283, 4),
        F(-315315, 4), F(-45045, 1), F(-10395, 1)),
    7: (F(-534703531, 902961561600), F(5246819, 75246796800),
        F(123239699, 75246796800), F(531611, 209018880),
        F(-4735393, 69672960), F(-10673, 2488320), F(1155869, 18432),
        F(2196337, 384), F(249151331, 3456), F(35882275, 96),
        F(32497465, 32), F(6301295, 4), F(5630625, 4), F(675675, 1),
        F(135135, 1)),
    8: (F(4483131259, 86684309913600), F(534703531, 902961561600),
        F(2335885, 5159780352), F(-10863221, 2149908480),
        F(-54058997, 3583180800), F(9843493, 29859840), F(25470029, 69672960),
        F(-364077389, 829440), F(-851484491, 18432), F(-266722027, 384),
        F(-561480777, 128), F(-1431239095, 96), F(-962396435, 32),
        F(-148813665, 4), F(-111035925, 4), F(-11486475, 1), F(-2027025, 1)),
}


def double_factorial(n: int) -> int:
    """(n)!! with the usual convention (-1)!! = 1."""
    r = 1
    while n > 1:
        r *= n
        n -= 2
    return r


def _sigma_series(order: int) -> list[F]:
    """Taylor coefficients of sigma(w) = 2*(w - ln(1+w))/w^2 about w = 0."""
    return [F(2 * (-1) ** k, k + 2) for k in range(order + 1)]


def _log_series(coeffs: list[F]) -> list[F]:
    """Taylor coefficients of ln(series), series[0] must be 1."""
    order = len(coeffs) - 1
    out = [F(0)] * (order + 1)
    for n in range(1, order + 1):
        acc = n * coeffs[n]
        for k in range(1, n):
            acc -= k * out[k] * coeffs[n - k]
        out[n] = acc / n
    return out


def sigma_power_series(q: F, order: int) -> list[F]:
    """Taylor coefficients of sigma(w)**q about w = 0, exact rationals."""
    logs = _log_series(_sigma_series(order))
    out = [F(0)] * (order + 1)
    out[0] = F(1)
    for n in range(1, order + 1):
        acc = F(0)
        for k in range(1, n + 1):
            acc += k * logs[k] * out[n - k]
        out[n] = q * acc / n
    return out


def phi_laurent(j: int, regular_order: int) -> tuple[list[F], list[F]]:
    """Laurent expansion of phi_j at lambda = 1.

    Returns ``(singular, regular)`` where ``singular[k-1]`` multiplies
    ``(lambda-1)**(-k)`` for ``k = 1..2j+1`` and ``regular[i]`` multiplies
    ``(lambda-1)**i``.
    """
    t = sigma_power_series(F(-(2 * j + 1), 2), 2 * j + 1 + regular_order)
    pref = (-1) ** (j + 1) * double_factorial(2 * j - 1)
    singular = [pref * t[2 * j + 1 - k] for k in range(1, 2 * j + 2)]
    regular = [pref * t[2 * j + 1 + i] for i in range(regular_order + 1)]
    return singular, regular


def _build_float_tables():
    sing = []
    reg = []
    for j in range(JMAX + 1):
        s, r = phi_laurent(j, REGULAR_ORDER)
        if tuple(s) != SINGULAR_PART[j]:
            raise AssertionError(f"embedded singular table mismatch at j={j}")
        sing.append(np.array([float(c) for c in s]))
        reg.append(np.array([float(c) for c in r]))
    return sing, reg


#: float mirrors of the tables, indexed by j
SINGULAR_PART_F, REGULAR_PART_F = _build_float_tables()

#: Stirling coefficients gamma_j = -Res_{lambda=1} phi_j = -S(phi_j)[0]
STIRLING_GAMMA = tuple(-SINGULAR_PART[j][0] for j in range(JMAX + 1))

#: Taylor coefficients of eta(w)/w = sigma(w)**(1/2) about w = 0
ETA_OVER_W_F = np.array(
    [float(c) for c in sigma_power_series(F(1, 2), 12)]
)
