"""Primitive payoff quantities of the pricing game.

All rates are in nats. The closed-form optimality conditions used by
the solvers differentiate log(1 + x) to 1/(1 + x), which only holds for
the natural logarithm; divide by ln(2) for bits when reporting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import GainProfile
from .errors import DimensionMismatch, IndexOutOfRange


@dataclass
class GameParams:
    """Unit secrecy-rate price and the per-jammer interference prices.

    ``lambda1`` may be zero for degenerate evaluation; the solvers
    themselves require it strictly positive.
    """

    lambda1: float
    mu: np.ndarray

    def __post_init__(self):
        self.mu = np.asarray(self.mu, dtype=float)
        if self.lambda1 < 0.0:
            raise ValueError("lambda1 must be non-negative")
        if self.mu.ndim != 1 or np.any(self.mu < 0.0):
            raise ValueError("prices must be a 1-D non-negative vector")


def _check_index(profile: GainProfile, i: int) -> None:
    if not 0 <= i < profile.n_eves:
        raise IndexOutOfRange(f"eavesdropper index {i} out of range")


def eavesdropper_sinr(profile: GainProfile, i: int, p_i: float) -> float:
    """SINR of eavesdropper ``i`` under jamming power ``p_i``."""
    _check_index(profile, i)
    return profile.beta[i] / (profile.sigma_e2 + p_i * profile.alpha[i])


def secrecy_rate(profile: GainProfile, p) -> float:
    """Legitimate rate minus the best eavesdropper rate, clamped at zero."""
    p = np.asarray(p, dtype=float)
    if p.shape != profile.beta.shape:
        raise DimensionMismatch("power vector length differs from profile")
    worst = max(math.log1p(eavesdropper_sinr(profile, i, p[i]))
                for i in range(profile.n_eves))
    return max(math.log1p(profile.beta0) - worst, 0.0)


def interference(profile: GainProfile, i: int, p_i: float) -> float:
    """Interference power delivered at eavesdropper ``i``."""
    _check_index(profile, i)
    return p_i * profile.alpha[i]


def jammer_revenue(mu_i: float, profile: GainProfile, i: int, p_i: float) -> float:
    """Payment collected by jammer ``i``: price times delivered interference."""
    _check_index(profile, i)
    return mu_i * p_i * profile.alpha[i]


def transmitter_revenue(profile: GainProfile, params: GameParams, p) -> float:
    """Secrecy income minus total jamming cost; may be negative."""
    p = np.asarray(p, dtype=float)
    if p.shape != profile.beta.shape or params.mu.shape != profile.beta.shape:
        raise DimensionMismatch("power/price vector length differs from profile")
    cost = float(np.dot(params.mu, p * profile.alpha))
    return params.lambda1 * secrecy_rate(profile, p) - cost
