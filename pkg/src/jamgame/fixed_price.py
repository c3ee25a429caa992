"""Follower best response under fixed interference prices.

The transmitter buys just enough interference to pull every
eavesdropper worth jamming down to a common SINR target ``gamma0``.
For a given set of jammed eavesdroppers the optimal target solves a
scalar quadratic; which eavesdroppers are worth jamming is settled by
an active-set iteration that drops (and may re-admit) eavesdroppers
whose unjammed SINR already sits at or below the target. A
golden-section search over the same one-dimensional revenue curve
serves as an independent numerical cross-check.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .channel import GainProfile
from .errors import (DimensionMismatch, NoJammableEavesdropper,
                     NonConcaveObjective, NonPositiveGamma)
from .game import eavesdropper_sinr
from .golden import golden_section_max

# unjammed SINR within this of gamma0 counts as already quiet: zero power
TIE_TOL = 1e-9

_GAMMA_LO = 1e-9


@dataclass
class FixedPriceSolution:
    """Optimal jamming purchase for one set of prices.

    ``revenue`` is the unclamped objective value (secrecy income minus
    jamming cost); ``rate_clamped`` warns that the raw rate difference
    went negative, i.e. gamma0 ended up above the legitimate SNR.
    """

    gamma0: float
    powers: np.ndarray
    active_set: frozenset
    revenue: float
    concavity_ok: bool
    rate_clamped: bool = False

    def to_json(self) -> str:
        return json.dumps({
            "gamma0": self.gamma0,
            "powers": [float(p) for p in self.powers],
            "active_set": sorted(self.active_set),
            "revenue": self.revenue,
            "concavity_ok": self.concavity_ok,
            "rate_clamped": self.rate_clamped,
        })


def _as_prices(profile: GainProfile, prices) -> np.ndarray:
    mu = np.asarray(prices, dtype=float)
    if mu.shape != profile.beta.shape:
        raise DimensionMismatch("price vector length differs from profile")
    if np.any(mu < 0.0):
        raise ValueError("prices must be non-negative")
    return mu


def _candidates(profile: GainProfile, mu: np.ndarray) -> list:
    """Eavesdroppers that can be jammed at a positive price."""
    return [i for i in range(profile.n_eves)
            if profile.beta[i] > 0.0 and profile.alpha[i] > 0.0 and mu[i] > 0.0]


def _sinr_floor(profile: GainProfile, candidates) -> float:
    """Largest unjammed SINR among eavesdroppers nobody can jam.

    A zero price means that jammer is not selling; a zero jamming gain
    means it cannot reach its eavesdropper. Either way that
    eavesdropper's SINR is immovable and the common target cannot be
    pushed below it, so buying interference past it is pure waste.
    """
    cand = set(candidates)
    floor = 0.0
    for i in range(profile.n_eves):
        if i not in cand and profile.beta[i] > 0.0:
            floor = max(floor, profile.beta[i] / profile.sigma_e2)
    return floor


def _stationary_gamma(tau: float, lambda1: float) -> float:
    # positive root of lambda1*g^2 - tau*g - tau = 0
    return (tau + math.sqrt(tau * (4.0 * lambda1 + tau))) / (2.0 * lambda1)


def _active_at(profile: GainProfile, candidates, gamma0: float) -> list:
    se2 = profile.sigma_e2
    return [i for i in candidates if profile.beta[i] / se2 > gamma0 + TIE_TOL]


def _powers_at(profile: GainProfile, active, gamma0: float) -> np.ndarray:
    p = np.zeros(profile.n_eves)
    for i in active:
        p[i] = (profile.beta[i] / gamma0 - profile.sigma_e2) / profile.alpha[i]
    return p


def gamma_objective(profile: GainProfile, prices, lambda1: float,
                    gamma0: float) -> float:
    """Transmitter revenue as a function of the common SINR target.

    Only eavesdroppers whose unjammed SINR exceeds ``gamma0`` are jammed
    and paid for; the legitimate-link term is an additive constant.
    """
    if gamma0 <= 0.0:
        raise NonPositiveGamma("gamma0 must be positive")
    mu = _as_prices(profile, prices)
    active = _active_at(profile, _candidates(profile, mu), gamma0)
    tau = sum(mu[i] * profile.beta[i] for i in active)
    mu_sum = sum(mu[i] for i in active)
    return (lambda1 * (math.log1p(profile.beta0) - math.log1p(gamma0))
            - tau / gamma0 + profile.sigma_e2 * mu_sum)


def _assemble(profile: GainProfile, mu: np.ndarray, lambda1: float,
              gamma0: float, active) -> FixedPriceSolution:
    powers = _powers_at(profile, active, gamma0)
    tau = sum(mu[i] * profile.beta[i] for i in active)
    concavity_ok = gamma0 ** 3 / (1.0 + gamma0) ** 2 <= 2.0 * tau / lambda1
    worst = max(eavesdropper_sinr(profile, i, powers[i])
                for i in range(profile.n_eves))
    rate_gap = math.log1p(profile.beta0) - math.log1p(worst)
    cost = float(np.dot(mu, powers * profile.alpha))
    return FixedPriceSolution(
        gamma0=float(gamma0),
        powers=powers,
        active_set=frozenset(active),
        revenue=float(lambda1 * rate_gap - cost),
        concavity_ok=bool(concavity_ok),
        rate_clamped=bool(rate_gap < 0.0),
    )


def _piecewise_optimum(profile: GainProfile, mu: np.ndarray, lambda1: float,
                       candidates) -> tuple:
    """Exact optimum of the piecewise target objective.

    Used when the drop/re-admit iteration cycles, which happens exactly
    when the optimum sits on an active-set breakpoint (some power is
    zero but its eavesdropper is not strictly below the target).
    """
    se2 = profile.sigma_e2
    breaks = sorted({profile.beta[i] / se2 for i in candidates})
    edges = [0.0] + breaks
    for lo, hi in zip(edges, edges[1:]):
        piece = [i for i in candidates if profile.beta[i] / se2 > lo + TIE_TOL]
        tau = sum(mu[i] * profile.beta[i] for i in piece)
        if tau <= 0.0:
            continue
        g = _stationary_gamma(tau, lambda1)
        if lo < g < hi:
            return g, _active_at(profile, candidates, g)
    best_g, best_val = None, -math.inf
    for b in breaks:
        val = gamma_objective(profile, mu, lambda1, b)
        if val > best_val:
            best_g, best_val = b, val
    return best_g, _active_at(profile, candidates, best_g)


def solve_fixed_price(profile: GainProfile, prices, lambda1: float) -> FixedPriceSolution:
    """Closed-form optimal power purchase for fixed prices.

    Active-set iteration: start from every jammable eavesdropper,
    compute the stationary target for the current set, re-derive the
    set of eavesdroppers whose unjammed SINR still exceeds the target,
    and repeat until the set is stable. If the iteration cycles the
    optimum is on a breakpoint, resolved exactly by a piecewise scan.
    """
    if lambda1 <= 0.0:
        raise ValueError("lambda1 must be positive")
    mu = _as_prices(profile, prices)
    cand = _candidates(profile, mu)
    if not cand:
        raise NoJammableEavesdropper(
            "no eavesdropper with positive gain, jamming gain and price")

    active = list(cand)
    seen = set()
    gamma0 = None
    for _ in range(4 * len(cand) + 8):
        key = frozenset(active)
        if key in seen:
            gamma0, active = _piecewise_optimum(profile, mu, lambda1, cand)
            break
        seen.add(key)
        if active:
            tau = sum(mu[i] * profile.beta[i] for i in active)
            gamma0 = _stationary_gamma(tau, lambda1)
        else:
            gamma0 = 0.0  # empty set is never consistent; forces a re-check
        nxt = _active_at(profile, cand, gamma0)
        if nxt == active and active:
            break
        active = nxt
    else:
        gamma0, active = _piecewise_optimum(profile, mu, lambda1, cand)

    floor = _sinr_floor(profile, cand)
    if gamma0 < floor:
        # the revenue curve falls past its peak, so the constrained
        # optimum sits exactly on the immovable floor
        gamma0 = floor
        active = _active_at(profile, cand, gamma0)

    sol = _assemble(profile, mu, lambda1, gamma0, active)
    if not sol.concavity_ok:
        # second-order condition failed at the returned target: confirm
        # numerically before trusting it
        lo = max(_GAMMA_LO, floor)
        hi = max(profile.beta[i] / profile.sigma_e2 for i in cand)
        if hi <= lo:
            return sol
        a, b = golden_section_max(
            lambda g: gamma_objective(profile, mu, lambda1, g),
            lo, hi, 1e-8 * hi)
        g_num = 0.5 * (a + b)
        better = (gamma_objective(profile, mu, lambda1, g_num)
                  > gamma_objective(profile, mu, lambda1, gamma0)
                  + 1e-9 * (1.0 + abs(sol.revenue)))
        if better and abs(g_num - gamma0) > 1e-6 * (1.0 + gamma0):
            raise NonConcaveObjective(
                "revenue curve is not concave at the stationary target; "
                "raise lambda1")
    return sol


def _derivative_sign(profile: GainProfile, mu: np.ndarray, lambda1: float,
                     candidates, gamma0: float) -> float:
    """Sign-carrying rescaling of d(objective)/d(gamma0)."""
    active = _active_at(profile, candidates, gamma0)
    tau = sum(mu[i] * profile.beta[i] for i in active)
    return tau * (1.0 + gamma0) - lambda1 * gamma0 * gamma0


def _polish_gamma(profile, mu, lambda1, candidates, lo, hi, a, b) -> float:
    """Sharpen a golden-section bracket by derivative-sign bisection.

    Value-only search cannot localize the flat top of the curve below
    roughly sqrt(machine eps); bisecting the sign of the slope reaches
    full precision and still never touches the closed-form root.
    """
    def slope(g):
        return _derivative_sign(profile, mu, lambda1, candidates, g)

    left, right = a, b
    if slope(left) <= 0.0:
        left, right = lo, a
        if slope(left) <= 0.0:
            return lo
    elif slope(right) >= 0.0:
        left, right = b, hi
        if slope(right) >= 0.0:
            return hi  # no interior crossing: no jamming is optimal
    for _ in range(200):
        if right - left <= 1e-15 * max(1.0, right):
            break
        mid = 0.5 * (left + right)
        if slope(mid) > 0.0:
            left = mid
        else:
            right = mid
    return 0.5 * (left + right)


def oracle_fixed_price(profile: GainProfile, prices, lambda1: float,
                       tol: float = 1e-9) -> FixedPriceSolution:
    """Numerical maximization of the target objective.

    Golden-section search localizes the optimum of ``gamma_objective``
    to a bracket of width ``tol`` times the upper target, a bisection
    on the slope sign polishes it, and the active set is re-derived
    from the numeric target. Fully independent of the closed-form root
    used by :func:`solve_fixed_price`.
    """
    if lambda1 <= 0.0:
        raise ValueError("lambda1 must be positive")
    mu = _as_prices(profile, prices)
    cand = _candidates(profile, mu)
    if not cand:
        raise NoJammableEavesdropper(
            "no eavesdropper with positive gain, jamming gain and price")
    lo = max(_GAMMA_LO, _sinr_floor(profile, cand))
    hi = max(profile.beta[i] / profile.sigma_e2 for i in cand)
    if hi <= lo * (1.0 + 1e-12):
        gamma0 = lo  # every jammable eavesdropper already sits below the floor
    else:
        a, b = golden_section_max(
            lambda g: gamma_objective(profile, mu, lambda1, g),
            lo, hi, tol * hi)
        gamma0 = _polish_gamma(profile, mu, lambda1, cand, lo, hi, a, b)
    return _assemble(profile, mu, lambda1, gamma0,
                     _active_at(profile, cand, gamma0))
