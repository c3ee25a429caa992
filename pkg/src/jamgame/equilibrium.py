"""Leader-side pricing: uniform-price optimum and the full equilibrium.

The jammers quote one common price. Their pooled revenue as a function
of that price has a closed-form maximizer valid while every jammable
eavesdropper keeps buying power; outside that regime the price is found
by search capped at the largest all-active price. Deviation tests and a
small exhaustive grid over non-uniform prices provide verification.
"""

from __future__ import annotations

import itertools
import json
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .channel import GainProfile
from .errors import (NoJammableEavesdropper, NonPositivePrice,
                     TooManyEavesdroppers)
from .fixed_price import solve_fixed_price
from .game import GameParams, jammer_revenue, transmitter_revenue
from .golden import golden_section_max


@dataclass
class Equilibrium:
    """Uniform price, follower best response and both sides' revenues."""

    mu0: float
    powers: np.ndarray
    gamma0: float
    active_set: frozenset
    transmitter_revenue: float
    jammer_revenues: np.ndarray
    total_jammer_revenue: float
    closed_form_valid: bool = True

    def to_json(self) -> str:
        return json.dumps({
            "mu0": self.mu0,
            "powers": [float(p) for p in self.powers],
            "gamma0": self.gamma0,
            "active_set": sorted(self.active_set),
            "transmitter_revenue": self.transmitter_revenue,
            "jammer_revenues": [float(r) for r in self.jammer_revenues],
            "total_jammer_revenue": self.total_jammer_revenue,
            "closed_form_valid": self.closed_form_valid,
        })


@dataclass
class DeviationReport:
    """Best revenue improvements found by unilateral deviations.

    Negative gains mean every tested deviation strictly hurt the
    deviating side; ``max_violation`` clips them at zero.
    """

    transmitter_gain: float
    jammer_gain: float
    max_violation: float
    passed: bool


def _price_candidates(profile: GainProfile) -> list:
    return [i for i in range(profile.n_eves)
            if profile.beta[i] > 0.0 and profile.alpha[i] > 0.0]


def uniform_price_revenue(profile: GainProfile, lambda1: float,
                          mu0: float) -> float:
    """Pooled jammer revenue at common price ``mu0``.

    Exact while every jammable eavesdropper buys a positive amount,
    which holds up to the price where the weakest one drops out.
    """
    if mu0 <= 0.0:
        raise NonPositivePrice("mu0 must be positive")
    cand = _price_candidates(profile)
    if not cand:
        raise NoJammableEavesdropper("no eavesdropper can be jammed")
    cbar = float(sum(profile.beta[i] for i in cand))
    k = len(cand)
    t = mu0 * cbar
    bought = 2.0 * lambda1 * t / (t + math.sqrt(t * (4.0 * lambda1 + t)))
    return bought - k * profile.sigma_e2 * mu0


def _closed_form_price(profile: GainProfile, lambda1: float, cand) -> float:
    k = len(cand)
    se2 = profile.sigma_e2
    c2 = float(sum(profile.beta[i] for i in cand))
    eta1 = 1.0 + k * se2 / c2
    eta2 = c2 + k * se2
    disc = math.sqrt(k * se2 * eta2 + 4.0 * (k * se2) ** 2 * eta1 ** 2)
    return 0.5 * (-4.0 * lambda1 * k * se2 * eta1 + 2.0 * lambda1 * disc) / (k * se2 * eta2)


def _all_active_price_cap(profile: GainProfile, lambda1: float, cand) -> float:
    # the target hits the weakest unjammed SINR g when tau = lambda1*g^2/(1+g)
    se2 = profile.sigma_e2
    gmin = min(profile.beta[i] / se2 for i in cand)
    c2 = float(sum(profile.beta[i] for i in cand))
    return lambda1 * gmin * gmin / ((1.0 + gmin) * c2)


def _uniform_price(profile: GainProfile, lambda1: float) -> tuple:
    """Optimal common price plus whether the closed form was usable."""
    if lambda1 <= 0.0:
        raise ValueError("lambda1 must be positive")
    cand = _price_candidates(profile)
    if not cand:
        raise NoJammableEavesdropper("no eavesdropper can be jammed")
    mu0 = _closed_form_price(profile, lambda1, cand)
    follower = solve_fixed_price(profile, np.full(profile.n_eves, mu0), lambda1)
    if set(follower.active_set) == set(cand):
        return mu0, True
    cap = _all_active_price_cap(profile, lambda1, cand)
    a, b = golden_section_max(
        lambda m: uniform_price_revenue(profile, lambda1, m),
        0.0, cap, 1e-12 * cap)
    return 0.5 * (a + b), False


def optimal_uniform_price(profile: GainProfile, lambda1: float) -> float:
    """Revenue-maximizing common interference price.

    Uses the closed form when it is self-consistent (every jammable
    eavesdropper still buys at that price); otherwise falls back to a
    search capped at the largest all-active price and warns.
    """
    mu0, closed_ok = _uniform_price(profile, lambda1)
    if not closed_ok:
        warnings.warn(
            "closed-form price would leave an eavesdropper unjammed; "
            "fell back to capped numerical search", RuntimeWarning,
            stacklevel=2)
    return mu0


def oracle_uniform_price(profile: GainProfile, lambda1: float,
                         tol: float = 1e-9) -> float:
    """Golden-section maximization of the uniform-price revenue curve."""
    if lambda1 <= 0.0:
        raise ValueError("lambda1 must be positive")
    cand = _price_candidates(profile)
    if not cand:
        raise NoJammableEavesdropper("no eavesdropper can be jammed")
    upper = lambda1 / (len(cand) * profile.sigma_e2)
    a, b = golden_section_max(
        lambda m: uniform_price_revenue(profile, lambda1, m),
        0.0, upper, tol * upper)
    return 0.5 * (a + b)


def stackelberg_equilibrium(profile: GainProfile, lambda1: float) -> Equilibrium:
    """Optimal uniform price composed with the follower best response."""
    mu0, closed_ok = _uniform_price(profile, lambda1)
    n = profile.n_eves
    mu = np.full(n, mu0)
    sol = solve_fixed_price(profile, mu, lambda1)
    params = GameParams(lambda1=lambda1, mu=mu)
    revenues = np.array([jammer_revenue(mu0, profile, i, sol.powers[i])
                         for i in range(n)])
    return Equilibrium(
        mu0=mu0,
        powers=sol.powers,
        gamma0=sol.gamma0,
        active_set=sol.active_set,
        transmitter_revenue=transmitter_revenue(profile, params, sol.powers),
        jammer_revenues=revenues,
        total_jammer_revenue=float(revenues.sum()),
        closed_form_valid=closed_ok,
    )


def _total_revenue_at(profile: GainProfile, lambda1: float, mu0: float) -> float:
    sol = solve_fixed_price(profile, np.full(profile.n_eves, mu0), lambda1)
    revenues = np.array([jammer_revenue(mu0, profile, i, sol.powers[i])
                         for i in range(profile.n_eves)])
    return float(revenues.sum())


def verify_equilibrium(eq: Equilibrium, profile: GainProfile, lambda1: float,
                       deltas=(1e-4, 1e-3, 1e-2),
                       threshold: float = 1e-9) -> DeviationReport:
    """Unilateral deviation tests around an equilibrium.

    Each follower power is nudged up and down (steps relative to the
    power, absolute when it is zero) at the fixed price; the common
    price is nudged relatively with the follower re-solved. No tested
    deviation may improve the deviating side's revenue beyond
    ``threshold``.
    """
    n = profile.n_eves
    params = GameParams(lambda1=lambda1, mu=np.full(n, eq.mu0))
    base_tx = transmitter_revenue(profile, params, eq.powers)
    tx_gain = -math.inf
    jam_gain = -math.inf
    for d in deltas:
        for i in range(n):
            step = d * eq.powers[i] if eq.powers[i] > 0.0 else d
            if step == 0.0:
                continue
            for s in (step, -step):
                p = eq.powers.copy()
                p[i] = max(p[i] + s, 0.0)
                tx_gain = max(tx_gain,
                              transmitter_revenue(profile, params, p) - base_tx)
        for factor in (1.0 + d, 1.0 - d):
            m = eq.mu0 * factor
            if m <= 0.0:
                continue
            jam_gain = max(jam_gain,
                           _total_revenue_at(profile, lambda1, m)
                           - eq.total_jammer_revenue)
    max_violation = max(tx_gain, jam_gain, 0.0)
    return DeviationReport(
        transmitter_gain=tx_gain,
        jammer_gain=jam_gain,
        max_violation=max_violation,
        passed=max_violation <= threshold,
    )


def oracle_prices_general(profile: GainProfile, lambda1: float,
                          grid_points: int) -> np.ndarray:
    """Best non-uniform prices on an exhaustive grid.

    Scans ``[0, lambda1/sigma_e2]`` per jammer with the follower
    re-solved exactly at every grid point; only practical for up to
    three eavesdroppers.
    """
    n = profile.n_eves
    if n > 3:
        raise TooManyEavesdroppers("price grid supports at most 3 eavesdroppers")
    if grid_points < 2:
        raise ValueError("grid_points must be at least 2")
    axis = np.linspace(0.0, lambda1 / profile.sigma_e2, int(grid_points))
    best_revenue = -math.inf
    best = None
    for combo in itertools.product(axis, repeat=n):
        mu = np.array(combo)
        try:
            sol = solve_fixed_price(profile, mu, lambda1)
        except NoJammableEavesdropper:
            revenue = 0.0
        else:
            revenue = float(sum(jammer_revenue(mu[i], profile, i, sol.powers[i])
                                for i in range(n)))
        if revenue > best_revenue:
            best_revenue = revenue
            best = mu
    return best
