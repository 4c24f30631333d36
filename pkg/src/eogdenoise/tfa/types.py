"""Shared containers for time-frequency transforms and network features."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from ..errors import ConfigError, ShapeError


class TransformKind(enum.Enum):
    STFT = "STFT"
    CWT = "CWT"
    WSST = "WSST"


class Packing(enum.Enum):
    RAW_SIGNAL = "RawSignal"
    REAL_IMAG_STACKED = "RealImagStacked"
    REAL_ONLY = "RealOnly"


class WaveletFamily(enum.Enum):
    BUMP = "Bump"
    ANALYTIC_MORLET = "AnalyticMorlet"


@dataclass(frozen=True)
class WaveletSpec:
    """Analytic wavelet described in the Fourier domain.

    ``center`` is the peak angular frequency of the mother wavelet (bump mu,
    Morlet omega0) and ``width`` the bump half-width sigma (unused for the
    Morlet, whose Gaussian has unit width).
    """

    family: WaveletFamily
    center: float
    width: float = 1.0
    voices_per_octave: int = 16

    def __post_init__(self):
        if self.voices_per_octave < 1:
            raise ConfigError("voices_per_octave must be a positive integer")
        if not (self.center > 0):
            raise ConfigError("wavelet center frequency must be > 0")
        if self.family is WaveletFamily.BUMP and not (0 < self.width < self.center):
            raise ConfigError(
                f"bump wavelet needs 0 < sigma < mu, got sigma={self.width} mu={self.center}"
            )
        if self.width <= 0:
            raise ConfigError("wavelet width must be > 0")

    @classmethod
    def bump(cls, mu: float = 5.0, sigma: float = 0.6, voices_per_octave: int = 16):
        return cls(WaveletFamily.BUMP, mu, sigma, voices_per_octave)

    @classmethod
    def morlet(cls, omega0: float = 6.0, voices_per_octave: int = 16):
        return cls(WaveletFamily.ANALYTIC_MORLET, omega0, 1.0, voices_per_octave)


@dataclass
class TfCoefficients:
    """Complex time-frequency matrix [bins x frames] plus axis metadata.

    ``bin_axis`` holds per-bin center frequency in Hz for STFT/WSST and the
    scale in seconds for CWT. ``frame_axis`` is per-frame time in samples.
    """

    values: np.ndarray
    bin_axis: np.ndarray
    frame_axis: np.ndarray
    transform: TransformKind
    source_length: int
    sample_rate: float
    wavelet: WaveletSpec | None = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.complex128)
        self.bin_axis = np.asarray(self.bin_axis, dtype=np.float64)
        self.frame_axis = np.asarray(self.frame_axis, dtype=np.float64)
        if self.values.ndim != 2:
            raise ShapeError("coefficient matrix must be 2-D [bins x frames]")
        if self.values.shape != (self.bin_axis.size, self.frame_axis.size):
            raise ShapeError(
                f"axis lengths {self.bin_axis.size}x{self.frame_axis.size} do not "
                f"match matrix shape {self.values.shape}"
            )
        if not np.all(np.isfinite(self.values)):
            raise ShapeError("coefficient matrix contains NaN or Inf")

    @property
    def n_bins(self) -> int:
        return self.values.shape[0]

    @property
    def n_frames(self) -> int:
        return self.values.shape[1]

    def like(self, values: np.ndarray) -> "TfCoefficients":
        """Same axes and metadata, different coefficient values."""
        return TfCoefficients(
            values,
            self.bin_axis,
            self.frame_axis,
            self.transform,
            self.source_length,
            self.sample_rate,
            self.wavelet,
            dict(self.extra),
        )


@dataclass
class FeatureSequence:
    """Real matrix [features x timesteps] as consumed by the network."""

    values: np.ndarray
    packing: Packing

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.ndim != 2:
            raise ShapeError("feature matrix must be 2-D [features x timesteps]")
        if not np.all(np.isfinite(self.values)):
            raise ShapeError("feature matrix contains NaN or Inf")
        if self.packing is Packing.REAL_IMAG_STACKED and self.values.shape[0] % 2:
            raise ShapeError("RealImagStacked feature count must be even")

    @property
    def n_features(self) -> int:
        return self.values.shape[0]

    @property
    def n_timesteps(self) -> int:
        return self.values.shape[1]
