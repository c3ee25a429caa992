"""Stackelberg secrecy pricing: jammers sell interference, the
transmitter buys it to protect a multicast stream from eavesdroppers."""

from .channel import (Beamformer, ChannelSet, GainProfile, gain_profile,
                      generate_channels, mrt_beamformer)
from .equilibrium import (DeviationReport, Equilibrium, optimal_uniform_price,
                          oracle_prices_general, oracle_uniform_price,
                          stackelberg_equilibrium, uniform_price_revenue,
                          verify_equilibrium)
from .experiment import (ExperimentConfig, MonteCarloSummary, TableRow,
                         derive_trial_seed, run_equilibrium, run_fixed_price,
                         run_monte_carlo)
from .fixed_price import (FixedPriceSolution, gamma_objective,
                          oracle_fixed_price, solve_fixed_price)
from .game import (GameParams, eavesdropper_sinr, interference, jammer_revenue,
                   secrecy_rate, transmitter_revenue)

__all__ = [
    "Beamformer", "ChannelSet", "GainProfile",
    "generate_channels", "mrt_beamformer", "gain_profile",
    "GameParams", "eavesdropper_sinr", "secrecy_rate", "interference",
    "jammer_revenue", "transmitter_revenue",
    "FixedPriceSolution", "solve_fixed_price", "gamma_objective",
    "oracle_fixed_price",
    "Equilibrium", "DeviationReport", "uniform_price_revenue",
    "optimal_uniform_price", "oracle_uniform_price",
    "stackelberg_equilibrium", "verify_equilibrium", "oracle_prices_general",
    "ExperimentConfig", "TableRow", "MonteCarloSummary", "derive_trial_seed",
    "run_fixed_price", "run_equilibrium", "run_monte_carlo",
]
