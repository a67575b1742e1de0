"""Ensemble parameters, merging-radii specifications, and jump weights.

The point process is the planar beta=2 Coulomb gas in the radial potential
|z|^(2b) - (2 alpha / n) ln|z| conditioned to stay inside the disk of radius
rho (strictly inside the unconstrained droplet, whose radius is
b^(-1/(2b))).  The test observable is the vector of disk counts N(r_1), ...,
N(r_m); the three regimes place the radii at distance ~1/n from the wall
(hard), ~1/sqrt(n) from the wall (semi-hard), or order 1 inside (bulk).
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError, RangeError


@dataclass(frozen=True)
class ModelParams:
    """Ensemble parameters (b, alpha, rho, n)."""

    b: float
    alpha: float
    rho: float
    n: int

    def __post_init__(self):
        if not self.b > 0.0:
            raise DomainError("b must be positive")
        if not self.alpha > -1.0:
            raise DomainError("alpha must exceed -1")
        if not (isinstance(self.n, (int, np.integer)) and self.n >= 1):
            raise DomainError("n must be an integer >= 1")
        if not 0.0 < self.rho < self.droplet_radius:
            raise DomainError(
                "rho must lie strictly inside the droplet: "
                f"0 < rho < {self.droplet_radius:.6g}"
            )

    @property
    def droplet_radius(self) -> float:
        return self.b ** (-1.0 / (2.0 * self.b))

    @property
    def wall_mass(self) -> float:
        """b * rho^(2b), the equilibrium mass inside the wall."""
        return self.b * self.rho ** (2.0 * self.b)

    def with_n(self, n: int) -> "ModelParams":
        return ModelParams(self.b, self.alpha, self.rho, int(n))


@dataclass(frozen=True)
class RadiiSpec:
    """Regime-tagged merging-radii specification plus the charge vector u.

    regime "hard":     radii rho*(1 - t_l/n)^(1/2b),  t strictly decreasing,
                       t_m >= 0;
    regime "semihard": radii rho*(1 - sqrt(2) s_l/(rho^b sqrt(n)))^(1/2b),
                       s strictly decreasing, s_m > 0;
    regime "bulk":     radii r*(1 + sqrt(2) s_l/(r^b sqrt(n)))^(1/2b),
                       s strictly increasing, 0 < r.
    """

    regime: str
    u: tuple[float, ...]
    t: Optional[tuple[float, ...]] = None
    s: Optional[tuple[float, ...]] = None
    r: Optional[float] = None

    def __post_init__(self):
        if self.regime not in ("hard", "semihard", "bulk"):
            raise DomainError(f"unknown regime {self.regime!r}")
        u = tuple(float(v) for v in self.u)
        if len(u) < 1 or not all(math.isfinite(v) for v in u):
            raise DomainError("u must be a nonempty vector of finite reals")
        object.__setattr__(self, "u", u)
        if self.regime == "hard":
            t = self._vector("t", self.t)
            if not _strictly_decreasing(t) or t[-1] < 0.0:
                raise DomainError("hard regime needs t strictly decreasing, t_m >= 0")
            if len(t) != len(u):
                raise DomainError("t and u must have equal length")
        elif self.regime == "semihard":
            s = self._vector("s", self.s)
            if not _strictly_decreasing(s) or s[-1] <= 0.0:
                raise DomainError("semihard regime needs s strictly decreasing, s_m > 0")
            if len(s) != len(u):
                raise DomainError("s and u must have equal length")
        else:
            s = self._vector("s", self.s)
            if not _strictly_increasing(s):
                raise DomainError("bulk regime needs s strictly increasing")
            if len(s) != len(u):
                raise DomainError("s and u must have equal length")
            if self.r is None or not self.r > 0.0:
                raise DomainError("bulk regime needs a base radius r > 0")

    def _vector(self, name, value) -> tuple[float, ...]:
        if value is None:
            raise DomainError(f"regime {self.regime!r} needs the {name} vector")
        vec = tuple(float(v) for v in value)
        if not vec or not all(math.isfinite(v) for v in vec):
            raise DomainError(f"{name} must be a nonempty finite vector")
        object.__setattr__(self, name, vec)
        return vec

    @property
    def m(self) -> int:
        return len(self.u)

    @staticmethod
    def hard(t, u) -> "RadiiSpec":
        return RadiiSpec(regime="hard", u=tuple(u), t=tuple(t))

    @staticmethod
    def semihard(s, u) -> "RadiiSpec":
        return RadiiSpec(regime="semihard", u=tuple(u), s=tuple(s))

    @staticmethod
    def bulk(r, s, u) -> "RadiiSpec":
        return RadiiSpec(regime="bulk", u=tuple(u), s=tuple(s), r=float(r))


@dataclass(frozen=True)
class JumpWeights:
    """Weights omega_1..omega_{m+1} of the piecewise-constant jump factor.

    omega_l = e^{u_l+...+u_m} - e^{u_{l+1}+...+u_m} for l < m,
    omega_m = e^{u_m} - 1, omega_{m+1} = 1, and the total
    Omega = e^{u_1+...+u_m} equals the sum of all entries.
    """

    omega: tuple[float, ...]
    big_omega: float


def jump_weights(u) -> JumpWeights:
    """Jump weights from the charge vector, via right-to-left partial sums."""
    u_arr = np.asarray(list(u))
    if u_arr.ndim != 1 or u_arr.size < 1:
        raise DomainError("u must be a nonempty vector")
    u_arr = u_arr.astype(complex if np.iscomplexobj(u_arr) else float)
    tails = np.concatenate([np.cumsum(u_arr[::-1])[::-1], [0.0]])
    exps = np.exp(tails)
    if not np.all(np.isfinite(exps)):
        raise RangeError("exp of partial sums of u overflowed")
    omega = np.concatenate([exps[:-1] - exps[1:], [1.0]])
    return JumpWeights(omega=tuple(omega.tolist()), big_omega=exps[0].item())


def radii_from_spec(params: ModelParams, spec: RadiiSpec) -> np.ndarray:
    """Physical radii for the given regime at this n; strictly increasing.

    Fails fast (DomainError) when the regime formula would leave (0, rho]
    at this n, e.g. hard-edge t_1 >= n or semi-hard sqrt(2) s_1 >= rho^b
    sqrt(n); bulk radii must stay strictly below rho.
    """
    n = params.n
    b = params.b
    rho = params.rho
    if spec.regime == "hard":
        t = np.asarray(spec.t, dtype=float)
        if t[0] >= n:
            raise DomainError(f"hard regime needs t_1 < n (t_1={t[0]}, n={n})")
        radii = rho * (1.0 - t / n) ** (1.0 / (2.0 * b))
    elif spec.regime == "semihard":
        s = np.asarray(spec.s, dtype=float)
        lim = rho**b * math.sqrt(n)
        if math.sqrt(2.0) * s[0] >= lim:
            raise DomainError(
                f"semihard regime needs sqrt(2)*s_1 < rho^b*sqrt(n) = {lim:.6g}"
            )
        radii = rho * (1.0 - math.sqrt(2.0) * s / (rho**b * math.sqrt(n))) ** (
            1.0 / (2.0 * b)
        )
    else:
        s = np.asarray(spec.s, dtype=float)
        r = float(spec.r)
        if not r < rho:
            raise DomainError("bulk base radius must satisfy r < rho")
        radii = r * (1.0 + math.sqrt(2.0) * s / (r**b * math.sqrt(n))) ** (
            1.0 / (2.0 * b)
        )
        if radii[-1] >= rho:
            raise DomainError("bulk radii must stay below rho at this n")
    if np.any(radii <= 0.0) or np.any(np.diff(radii) <= 0.0) or radii[-1] > rho:
        raise DomainError("radii must be strictly increasing in (0, rho]")
    return radii


def equilibrium_summary(params: ModelParams, spec: RadiiSpec) -> dict:
    """Condensed-mass constant and the naive equilibrium-measure linear term.

    c_rho = 1 - b rho^(2b) is the mass swept onto the wall.  The
    'leading_linear' value integrates the test charge against the
    constrained equilibrium measure to leading order; at the hard edge the
    true n-coefficient of the log-MGF differs from it (it is not even
    linear in u), which is what this summary is used to exhibit.
    """
    c_rho = 1.0 - params.wall_mass
    total_u = float(np.sum(spec.u))
    leading = params.wall_mass * total_u
    if spec.regime == "hard" and spec.t[-1] == 0.0:
        leading += spec.u[-1] * c_rho
    return {"c_rho": c_rho, "leading_linear": leading}


def _strictly_decreasing(v) -> bool:
    return all(a > b for a, b in zip(v, v[1:]))


def _strictly_increasing(v) -> bool:
    return all(a < b for a, b in zip(v, v[1:]))
