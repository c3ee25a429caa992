"""Exception types shared across the package."""


class JamGameError(Exception):
    """Base class for all domain errors raised by this package."""


class ZeroChannel(JamGameError):
    """A beamformer was requested for an all-zero legitimate channel."""


class DimensionMismatch(JamGameError):
    """Vector lengths of channels, prices or powers disagree."""


class IndexOutOfRange(JamGameError, IndexError):
    """An eavesdropper index exceeds the profile size."""


class NonPositiveGamma(JamGameError):
    """The reduced revenue curve was evaluated at a SINR target <= 0."""


class NonPositivePrice(JamGameError):
    """A price-revenue curve was evaluated at a price <= 0."""


class NoJammableEavesdropper(JamGameError):
    """No eavesdropper has positive channel gain, jamming gain and price."""


class NonConcaveObjective(JamGameError):
    """The stationary target fails the concavity condition and numerical
    search finds a strictly better point (secrecy-rate price set too low)."""


class TooManyEavesdroppers(JamGameError):
    """The exhaustive price grid would be infeasibly large."""


class ConfigError(JamGameError):
    """An experiment configuration is inconsistent."""
