"""Shared instance builders for the test suite."""

import numpy as np
import pytest

from jamgame.channel import GainProfile, gain_profile, generate_channels, mrt_beamformer


def make_profile(seed: int, n_eves: int, n_t: int = 3, total_power: float = 1.0,
                 sigma2: float = 0.1, sigma_e2: float = 0.1) -> GainProfile:
    """End-to-end random profile: channels -> MRT beamformer -> gains."""
    channels = generate_channels(seed, n_t, n_eves)
    w = mrt_beamformer(channels, total_power)
    return gain_profile(channels, w, sigma2, sigma_e2)


def make_prices(seed: int, n_eves: int, lo: float = 0.5, hi: float = 4.0) -> np.ndarray:
    """Seeded strictly positive price vector."""
    return np.random.default_rng(seed).uniform(lo, hi, n_eves)


@pytest.fixture
def canonical_profile() -> GainProfile:
    """Two eavesdroppers with unit jamming gains; exact algebra known."""
    return GainProfile(beta0=10.0, beta=[1.0, 0.5], alpha=[1.0, 1.0],
                       sigma_e2=0.1, sigma2=0.1)
