"""Lower real branch W_{-1} of the Lambert W function."""

import math

from ..errors import DomainError, NoConvergence

_INV_E = math.exp(-1.0)


def lambert_w_m1(x: float) -> float:
    """W_{-1}(x) for -1/e <= x < 0: the solution of w*e^w = x with w <= -1.

    Halley iteration from a series initial guess: the branch-point series in
    p = -sqrt(2*(1 + e*x)) near x = -1/e, and w ~ ln(-x) - ln(-ln(-x)) as
    x -> 0-.  Final residual |w e^w - x| <= 1e-14.
    """
    if not (-_INV_E <= x < 0.0):
        raise DomainError("lambert_w_m1 requires -1/e <= x < 0")
    arg = 1.0 + math.e * x
    if arg <= 0.0:
        return -1.0
    if arg < 1e-12:
        p = -math.sqrt(2.0 * arg)
        return -1.0 + p - p * p / 3.0
    if arg < 0.25:
        p = -math.sqrt(2.0 * arg)
        w = -1.0 + p - p * p / 3.0 + 11.0 * p**3 / 72.0 - 43.0 * p**4 / 540.0
    else:
        lx = math.log(-x)
        w = lx - math.log(-lx)
    for _ in range(60):
        ew = math.exp(w)
        f = w * ew - x
        fp = ew * (1.0 + w)
        # Halley step
        step = f / (fp - f * (2.0 + w) / (2.0 * (1.0 + w)))
        w -= step
        if abs(step) <= 1e-16 * abs(w):
            break
    else:
        raise NoConvergence("Lambert W_{-1} iteration stalled")
    if abs(w * math.exp(w) - x) > 1e-14:
        raise NoConvergence("Lambert W_{-1} residual above 1e-14")
    return w
