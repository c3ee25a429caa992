"""Batch experiment drivers and table-style reporting.

Each trial draws its own channel realization from a stream derived from
(seed, trial index), so trials are independent, order-insensitive and
reproducible under any parallelism. Reports pair every closed-form
quantity with its numerically simulated counterpart.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .channel import gain_profile, generate_channels, mrt_beamformer
from .equilibrium import (oracle_uniform_price, stackelberg_equilibrium,
                          verify_equilibrium)
from .errors import ConfigError
from .fixed_price import oracle_fixed_price, solve_fixed_price
from .game import GameParams, jammer_revenue, secrecy_rate, transmitter_revenue

MODES = ("fixed_price", "equilibrium", "monte_carlo")

_ORACLE_TOL = 1e-10
_MASK64 = (1 << 64) - 1


def derive_trial_seed(seed: int, trial: int) -> int:
    """splitmix64 mix of (seed, trial): independent order-free streams."""
    x = (seed + (trial + 1) * 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (x ^ (x >> 31)) & _MASK64


@dataclass
class ExperimentConfig:
    """One reproducible experiment description.

    Defaults mirror the desk-scale setup used throughout: three transmit
    antennas, two eavesdroppers, all noise variances 0.1, secrecy-rate
    price 5, fixed interference prices (1, 3), unit transmit power.
    """

    seed: int = 1
    trials: int = 5
    n_t: int = 3
    n_eves: int = 2
    sigma2: float = 0.1
    sigma_e2: float = 0.1
    lambda1: float = 5.0
    prices: tuple = (1.0, 3.0)
    total_power: float = 1.0
    mode: str = "fixed_price"
    tol: float = 1e-3

    def __post_init__(self):
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.trials < 0:
            raise ConfigError("trials must be non-negative")
        if self.n_t < 1 or self.n_eves < 1:
            raise ConfigError("n_t and n_eves must be at least 1")
        for name in ("sigma2", "sigma_e2", "lambda1", "total_power", "tol"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive")
        if self.prices is not None:
            self.prices = tuple(float(m) for m in self.prices)
            if any(m < 0 for m in self.prices):
                raise ConfigError("prices must be non-negative")


@dataclass
class TableRow:
    """One channel realization's report line.

    The equilibrium-only fields stay ``None`` in fixed-price mode.
    """

    channel_id: int
    power_closed: tuple
    power_oracle: tuple
    secrecy_closed: float
    secrecy_oracle: float
    tx_revenue_closed: float
    tx_revenue_oracle: float
    within_tol: bool
    price_closed: Optional[float] = None
    price_oracle: Optional[float] = None
    jammer_revenue_closed: Optional[float] = None
    jammer_revenue_oracle: Optional[float] = None
    equilibrium: Optional[tuple] = None
    max_violation: Optional[float] = None
    equilibrium_ok: Optional[bool] = None
    closed_form_valid: Optional[bool] = None


@dataclass
class MonteCarloSummary:
    """Mean/std of the equilibrium quantities over many channels."""

    trials: int
    secrecy_rate_mean: float
    secrecy_rate_std: float
    tx_revenue_mean: float
    tx_revenue_std: float
    mu0_mean: float
    mu0_std: float
    total_jammer_revenue_mean: float
    total_jammer_revenue_std: float


def _close(a: float, b: float, tol: float) -> bool:
    return abs(a - b) <= tol * (1.0 + abs(a))


def _trial_profile(config: ExperimentConfig, trial: int):
    channels = generate_channels(derive_trial_seed(config.seed, trial),
                                 config.n_t, config.n_eves)
    w = mrt_beamformer(channels, config.total_power)
    return gain_profile(channels, w, config.sigma2, config.sigma_e2)


def run_fixed_price(config: ExperimentConfig) -> list:
    """Per-trial closed-form vs simulated power allocation rows."""
    if config.mode != "fixed_price":
        raise ConfigError("config mode must be 'fixed_price'")
    if config.prices is None or len(config.prices) != config.n_eves:
        raise ConfigError("prices must have one entry per eavesdropper")
    rows = []
    for trial in range(config.trials):
        profile = _trial_profile(config, trial)
        sol = solve_fixed_price(profile, config.prices, config.lambda1)
        orc = oracle_fixed_price(profile, config.prices, config.lambda1,
                                 tol=_ORACLE_TOL)
        sec_c = secrecy_rate(profile, sol.powers)
        sec_o = secrecy_rate(profile, orc.powers)
        pairs = list(zip(sol.powers, orc.powers))
        pairs += [(sec_c, sec_o), (sol.revenue, orc.revenue)]
        rows.append(TableRow(
            channel_id=trial + 1,
            power_closed=tuple(float(p) for p in sol.powers),
            power_oracle=tuple(float(p) for p in orc.powers),
            secrecy_closed=sec_c,
            secrecy_oracle=sec_o,
            tx_revenue_closed=sol.revenue,
            tx_revenue_oracle=orc.revenue,
            within_tol=all(_close(a, b, config.tol) for a, b in pairs),
        ))
    return rows


def run_equilibrium(config: ExperimentConfig) -> list:
    """Per-trial equilibrium rows with oracle columns and deviation checks."""
    if config.mode != "equilibrium":
        raise ConfigError("config mode must be 'equilibrium'")
    rows = []
    for trial in range(config.trials):
        profile = _trial_profile(config, trial)
        eq = stackelberg_equilibrium(profile, config.lambda1)
        price_o = oracle_uniform_price(profile, config.lambda1, tol=_ORACLE_TOL)
        sol_o = oracle_fixed_price(profile, np.full(config.n_eves, price_o),
                                   config.lambda1, tol=_ORACLE_TOL)
        jam_o = float(sum(jammer_revenue(price_o, profile, i, sol_o.powers[i])
                          for i in range(config.n_eves)))
        sec_c = secrecy_rate(profile, eq.powers)
        sec_o = secrecy_rate(profile, sol_o.powers)
        tx_o = transmitter_revenue(
            profile, GameParams(config.lambda1, np.full(config.n_eves, price_o)),
            sol_o.powers)
        report = verify_equilibrium(eq, profile, config.lambda1)
        pairs = list(zip(eq.powers, sol_o.powers))
        pairs += [(sec_c, sec_o), (eq.transmitter_revenue, tx_o),
                  (eq.mu0, price_o), (eq.total_jammer_revenue, jam_o)]
        rows.append(TableRow(
            channel_id=trial + 1,
            power_closed=tuple(float(p) for p in eq.powers),
            power_oracle=tuple(float(p) for p in sol_o.powers),
            secrecy_closed=sec_c,
            secrecy_oracle=sec_o,
            tx_revenue_closed=eq.transmitter_revenue,
            tx_revenue_oracle=tx_o,
            within_tol=all(_close(a, b, config.tol) for a, b in pairs),
            price_closed=eq.mu0,
            price_oracle=price_o,
            jammer_revenue_closed=eq.total_jammer_revenue,
            jammer_revenue_oracle=jam_o,
            equilibrium=tuple(float(p) for p in eq.powers) + (eq.mu0,),
            max_violation=report.max_violation,
            equilibrium_ok=report.passed,
            closed_form_valid=eq.closed_form_valid,
        ))
    return rows


def run_monte_carlo(config: ExperimentConfig, workers: int = 1) -> MonteCarloSummary:
    """Aggregate equilibrium statistics over seeded channel draws.

    Trials run on independent derived streams and are aggregated in
    trial order, so the summary is identical for any worker count.
    """
    if config.mode != "monte_carlo":
        raise ConfigError("config mode must be 'monte_carlo'")
    if config.trials < 1:
        raise ConfigError("monte_carlo needs at least one trial")

    def one(trial: int):
        profile = _trial_profile(config, trial)
        eq = stackelberg_equilibrium(profile, config.lambda1)
        return (secrecy_rate(profile, eq.powers), eq.transmitter_revenue,
                eq.mu0, eq.total_jammer_revenue)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(one, range(config.trials)))
    else:
        values = [one(t) for t in range(config.trials)]
    arr = np.array(values)
    mean = arr.mean(axis=0)
    std = arr.std(axis=0)
    return MonteCarloSummary(
        trials=config.trials,
        secrecy_rate_mean=float(mean[0]), secrecy_rate_std=float(std[0]),
        tx_revenue_mean=float(mean[1]), tx_revenue_std=float(std[1]),
        mu0_mean=float(mean[2]), mu0_std=float(std[2]),
        total_jammer_revenue_mean=float(mean[3]),
        total_jammer_revenue_std=float(std[3]),
    )


# --- report formatting ----------------------------------------------------

def _fmt(value) -> str:
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def fixed_price_header(n_eves: int) -> list:
    cols = ["channel_id"]
    for j in range(1, n_eves + 1):
        cols += [f"power{j}_derivation", f"power{j}_simulation"]
    cols += ["secrecy_rate_derivation", "secrecy_rate_simulation",
             "tx_revenue_derivation", "tx_revenue_simulation", "tol_ok"]
    return cols


def equilibrium_header(n_eves: int) -> list:
    cols = ["channel_id", "price_derivation", "price_simulation",
            "jammer_revenue_derivation", "jammer_revenue_simulation"]
    for j in range(1, n_eves + 1):
        cols += [f"power{j}_derivation", f"power{j}_simulation"]
    cols += ["secrecy_rate_derivation", "secrecy_rate_simulation",
             "tx_revenue_derivation", "tx_revenue_simulation"]
    cols += [f"p{j}_star" for j in range(1, n_eves + 1)]
    cols += ["mu0_star", "max_violation", "equilibrium_ok",
             "closed_form_valid", "tol_ok"]
    return cols


def _fixed_price_cells(row: TableRow) -> list:
    cells = [row.channel_id]
    for pc, po in zip(row.power_closed, row.power_oracle):
        cells += [pc, po]
    cells += [row.secrecy_closed, row.secrecy_oracle,
              row.tx_revenue_closed, row.tx_revenue_oracle, row.within_tol]
    return cells


def _equilibrium_cells(row: TableRow) -> list:
    cells = [row.channel_id, row.price_closed, row.price_oracle,
             row.jammer_revenue_closed, row.jammer_revenue_oracle]
    for pc, po in zip(row.power_closed, row.power_oracle):
        cells += [pc, po]
    cells += [row.secrecy_closed, row.secrecy_oracle,
              row.tx_revenue_closed, row.tx_revenue_oracle]
    cells += list(row.equilibrium)
    cells += [row.max_violation, row.equilibrium_ok,
              row.closed_form_valid, row.within_tol]
    return cells


def rows_to_csv(rows: list, config: ExperimentConfig) -> str:
    """Schema-stable CSV: fixed header per mode, floats to 6 decimals."""
    if config.mode == "fixed_price":
        header = fixed_price_header(config.n_eves)
        cells = [_fixed_price_cells(r) for r in rows]
    elif config.mode == "equilibrium":
        header = equilibrium_header(config.n_eves)
        cells = [_equilibrium_cells(r) for r in rows]
    else:
        raise ConfigError("monte_carlo reports use summary_to_csv")
    lines = [",".join(header)]
    lines += [",".join(_fmt(c) for c in line) for line in cells]
    return "\n".join(lines) + "\n"


def _row_dict(row: TableRow) -> dict:
    data = {
        "channel_id": row.channel_id,
        "power_derivation": list(row.power_closed),
        "power_simulation": list(row.power_oracle),
        "secrecy_rate_derivation": row.secrecy_closed,
        "secrecy_rate_simulation": row.secrecy_oracle,
        "tx_revenue_derivation": row.tx_revenue_closed,
        "tx_revenue_simulation": row.tx_revenue_oracle,
        "tol_ok": row.within_tol,
    }
    if row.price_closed is not None:
        data.update({
            "price_derivation": row.price_closed,
            "price_simulation": row.price_oracle,
            "jammer_revenue_derivation": row.jammer_revenue_closed,
            "jammer_revenue_simulation": row.jammer_revenue_oracle,
            "equilibrium": list(row.equilibrium),
            "max_violation": row.max_violation,
            "equilibrium_ok": row.equilibrium_ok,
            "closed_form_valid": row.closed_form_valid,
        })
    return data


def rows_to_json(rows: list) -> str:
    return json.dumps([_row_dict(r) for r in rows], indent=2) + "\n"


def summary_to_csv(summary: MonteCarloSummary) -> str:
    lines = ["metric,mean,std"]
    for name, m, s in (
            ("secrecy_rate", summary.secrecy_rate_mean, summary.secrecy_rate_std),
            ("tx_revenue", summary.tx_revenue_mean, summary.tx_revenue_std),
            ("mu0", summary.mu0_mean, summary.mu0_std),
            ("total_jammer_revenue", summary.total_jammer_revenue_mean,
             summary.total_jammer_revenue_std)):
        lines.append(f"{name},{m:.6f},{s:.6f}")
    return "\n".join(lines) + "\n"


def summary_to_json(summary: MonteCarloSummary) -> str:
    return json.dumps(summary.__dict__, indent=2) + "\n"
