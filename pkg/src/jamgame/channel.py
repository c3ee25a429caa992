"""Seeded channel generation and reduction to real gains.

Every complex coefficient is drawn i.i.d. circularly symmetric Gaussian
with unit total variance (real and imaginary parts each N(0, 1/2), flat
Rayleigh fading). A fixed maximum-ratio beamformer pointed at the
legitimate user then reduces the complex channels to the non-negative
scalars the solvers consume: the legitimate SNR ``beta0``, the
eavesdropper gains ``beta_i`` and the jammer-to-eavesdropper gains
``alpha_i``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, ZeroChannel


def _pack_complex(z: np.ndarray) -> list:
    """Complex array -> nested lists of [re, im] pairs."""
    return np.stack([z.real, z.imag], axis=-1).tolist()


def _unpack_complex(pairs) -> np.ndarray:
    arr = np.asarray(pairs, dtype=float)
    return arr[..., 0] + 1j * arr[..., 1]


@dataclass
class ChannelSet:
    """Raw complex channels for one realization.

    h1: transmitter to legitimate user, length ``n_t``
    g:  transmitter to each eavesdropper, shape ``(n_eves, n_t)``
    gj: dedicated jammer to its eavesdropper, length ``n_eves``
    """

    h1: np.ndarray
    g: np.ndarray
    gj: np.ndarray
    n_t: int
    n_eves: int

    def __post_init__(self):
        self.h1 = np.asarray(self.h1, dtype=complex)
        self.g = np.asarray(self.g, dtype=complex)
        self.gj = np.asarray(self.gj, dtype=complex)
        if self.n_t < 1 or self.n_eves < 1:
            raise ValueError("n_t and n_eves must be at least 1")
        if (self.h1.shape != (self.n_t,)
                or self.g.shape != (self.n_eves, self.n_t)
                or self.gj.shape != (self.n_eves,)):
            raise DimensionMismatch("channel shapes inconsistent with n_t/n_eves")

    def to_json(self) -> str:
        return json.dumps({
            "h1": _pack_complex(self.h1),
            "g": _pack_complex(self.g),
            "gj": _pack_complex(self.gj),
            "n_t": self.n_t,
            "n_eves": self.n_eves,
        })

    @classmethod
    def from_json(cls, text: str) -> "ChannelSet":
        data = json.loads(text)
        return cls(
            h1=_unpack_complex(data["h1"]),
            g=_unpack_complex(data["g"]),
            gj=_unpack_complex(data["gj"]),
            n_t=int(data["n_t"]),
            n_eves=int(data["n_eves"]),
        )


@dataclass
class Beamformer:
    """Fixed transmit beamformer carrying its power budget."""

    w: np.ndarray
    total_power: float

    def __post_init__(self):
        self.w = np.asarray(self.w, dtype=complex)
        if self.total_power <= 0.0:
            raise ValueError("total_power must be positive")
        norm2 = float(np.vdot(self.w, self.w).real)
        if abs(norm2 - self.total_power) > 1e-9 * self.total_power:
            raise ValueError("||w||^2 must equal total_power")


@dataclass
class GainProfile:
    """Real gains and noise powers: everything the game evaluates on."""

    beta0: float
    beta: np.ndarray
    alpha: np.ndarray
    sigma_e2: float
    sigma2: float

    def __post_init__(self):
        self.beta = np.asarray(self.beta, dtype=float)
        self.alpha = np.asarray(self.alpha, dtype=float)
        if self.beta.shape != self.alpha.shape or self.beta.ndim != 1:
            raise DimensionMismatch("beta and alpha must be 1-D with equal length")
        values = np.concatenate([[self.beta0], self.beta, self.alpha])
        if not np.all(np.isfinite(values)) or np.any(values < 0.0):
            raise ValueError("gains must be finite and non-negative")
        if self.sigma_e2 <= 0.0 or self.sigma2 <= 0.0:
            raise ValueError("noise variances must be positive")

    @property
    def n_eves(self) -> int:
        return len(self.beta)


def generate_channels(seed: int, n_t: int, n_eves: int) -> ChannelSet:
    """Draw one seeded channel realization.

    Identical arguments give bit-identical output; different seeds give
    independent streams.
    """
    if n_t < 1 or n_eves < 1:
        raise ValueError("n_t and n_eves must be at least 1")
    rng = np.random.default_rng(seed)
    scale = math.sqrt(0.5)

    def draw(*shape):
        return rng.normal(0.0, scale, shape) + 1j * rng.normal(0.0, scale, shape)

    return ChannelSet(h1=draw(n_t), g=draw(n_eves, n_t), gj=draw(n_eves),
                      n_t=n_t, n_eves=n_eves)


def mrt_beamformer(channels: ChannelSet, total_power: float) -> Beamformer:
    """Maximum-ratio beamformer toward the legitimate user."""
    norm = float(np.linalg.norm(channels.h1))
    if norm == 0.0:
        raise ZeroChannel("legitimate channel is identically zero")
    w = math.sqrt(total_power) * channels.h1 / norm
    return Beamformer(w=w, total_power=total_power)


def gain_profile(channels: ChannelSet, w: Beamformer,
                 sigma2: float, sigma_e2: float) -> GainProfile:
    """Reduce complex channels to the real gains seen by the game.

    beta0 = |w^H h1|^2 / sigma2, beta_i = |w^H g_i|^2, alpha_i = |gj_i|^2.
    """
    if w.w.shape != (channels.n_t,):
        raise DimensionMismatch("beamformer length differs from n_t")
    beta0 = float(np.abs(np.vdot(w.w, channels.h1)) ** 2) / sigma2
    beta = np.abs(channels.g @ np.conj(w.w)) ** 2
    alpha = np.abs(channels.gj) ** 2
    return GainProfile(beta0=beta0, beta=beta, alpha=alpha,
                       sigma_e2=sigma_e2, sigma2=sigma2)
