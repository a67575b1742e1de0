"""Scaled complementary-error-function quotients.

Every erfc quotient used by the edge kernels is expressed through
``erfcx(y) = e^{y^2} erfc(y)``: raw quotients like ``e^{-y^2}/erfc(y)``
evaluate as 0/0 already for |y| ~ 30, while the scaled forms below stay
finite for |y| up to 1e3 and beyond.
"""

import numpy as np
from scipy.special import erfc as _erfc
from scipy.special import erfcx as _erfcx

from ..errors import DomainError

erfcx = _erfcx
erfc = _erfc


def erfc_ratio(y, s):
    """erfc(y + s) / erfc(y) in (0, 1] for s >= 0.

    Uses ``erfcx(y+s)/erfcx(y) * exp(-s*(2y+s))`` on y >= 0 and the raw
    quotient elsewhere (the denominator is then in (1, 2)).
    """
    y = np.asarray(y, dtype=float)
    s = np.asarray(s, dtype=float)
    if np.any(s < 0.0):
        raise DomainError("erfc_ratio requires s >= 0")
    y_b, s_b = np.broadcast_arrays(y, s)
    yb = np.atleast_1d(y_b)
    sb = np.atleast_1d(s_b)
    out = np.empty_like(yb, dtype=float)
    pos = yb >= 0.0
    if pos.any():
        yp, sp = yb[pos], sb[pos]
        with np.errstate(under="ignore"):
            out[pos] = (
                _erfcx(yp + sp) / _erfcx(yp) * np.exp(-sp * (2.0 * yp + sp))
            )
    neg = ~pos
    if neg.any():
        yn, sn = yb[neg], sb[neg]
        with np.errstate(under="ignore"):
            out[neg] = _erfc(yn + sn) / _erfc(yn)
    out = np.minimum(out, 1.0)
    return float(out[0]) if y_b.ndim == 0 else out.reshape(y_b.shape)


def gauss_over_erfc(y):
    """e^{-y^2} / erfc(y); grows like sqrt(pi)*y for large positive y."""
    y = np.asarray(y, dtype=float)
    yb = np.atleast_1d(y)
    out = np.empty_like(yb)
    pos = yb >= 0.0
    out[pos] = 1.0 / _erfcx(yb[pos])
    neg = ~pos
    if neg.any():
        with np.errstate(under="ignore"):
            out[neg] = np.exp(-yb[neg] ** 2) / _erfc(yb[neg])
    return float(out[0]) if y.ndim == 0 else out.reshape(y.shape)


def shifted_gauss_over_erfc(y, s):
    """e^{-(y+s)^2} / erfc(y) for s >= 0, in scaled form on y >= 0."""
    y = np.asarray(y, dtype=float)
    s = np.asarray(s, dtype=float)
    y_b, s_b = np.broadcast_arrays(y, s)
    yb, sb = np.atleast_1d(y_b), np.atleast_1d(s_b)
    out = np.empty(yb.shape, dtype=float)
    pos = yb >= 0.0
    if pos.any():
        yp, sp = yb[pos], sb[pos]
        with np.errstate(under="ignore"):
            out[pos] = np.exp(-sp * (2.0 * yp + sp)) / _erfcx(yp)
    neg = ~pos
    if neg.any():
        yn, sn = yb[neg], sb[neg]
        with np.errstate(under="ignore"):
            out[neg] = np.exp(-((yn + sn) ** 2)) / _erfc(yn)
    return float(out[0]) if y_b.ndim == 0 else out.reshape(y_b.shape)
