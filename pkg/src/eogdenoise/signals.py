"""Segments, RMS/SNR arithmetic, contamination, and z-score normalization.

The contamination model is additive: ``noisy = eeg + lam * eog`` where the
artifact strength ``lam`` is solved from a target SNR in dB, with SNR defined
as ``10 * log10(rms(eeg) / rms(lam * eog))`` (base-10 log, RMS ratio).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateSignalError, InvalidSegmentError, ShapeError

# Standard deviations below this are clamped before dividing (constant
# segments would otherwise blow up the z-score).
STD_CLAMP = 1e-12

DEFAULT_LENGTH = 512
DEFAULT_RATE = 256.0

SnrDb = float


class SegmentKind(enum.Enum):
    CLEAN_EEG = "CleanEEG"
    EOG = "EOG"
    CONTAMINATED = "Contaminated"
    DENOISED = "Denoised"


@dataclass(frozen=True)
class Segment:
    """One fixed-rate real-valued signal segment (default 512 samples @ 256 Hz)."""

    samples: np.ndarray
    sample_rate: float = DEFAULT_RATE
    kind: SegmentKind = SegmentKind.CLEAN_EEG

    def __post_init__(self):
        arr = np.asarray(self.samples, dtype=np.float64)
        if arr.ndim != 1 or arr.size == 0:
            raise InvalidSegmentError("segment must be a non-empty 1-D array")
        if not np.all(np.isfinite(arr)):
            raise InvalidSegmentError("segment contains NaN or Inf samples")
        if not (self.sample_rate > 0):
            raise InvalidSegmentError(f"sample_rate must be > 0, got {self.sample_rate}")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "samples", arr)

    def __len__(self) -> int:
        return self.samples.size

    def with_kind(self, kind: SegmentKind) -> "Segment":
        return Segment(self.samples, self.sample_rate, kind)


@dataclass(frozen=True)
class MixRecord:
    """Provenance of one contamination: which pair, which lambda, which SNR."""

    lam: float
    snr_db: SnrDb
    eeg_id: int = 0
    eog_id: int = 0

    def __post_init__(self):
        if not (self.lam > 0 and math.isfinite(self.lam)):
            raise DegenerateSignalError(f"lambda must be finite and > 0, got {self.lam}")
        if not math.isfinite(self.snr_db):
            raise InvalidSegmentError("snr_db must be finite")


@dataclass(frozen=True)
class NormStats:
    """Mean/std captured by zscore; clamped=True marks a degenerate (constant) input."""

    mean: float
    std: float
    clamped: bool = field(default=False, compare=False)

    def __post_init__(self):
        if not (self.std > 0):
            raise InvalidSegmentError(f"std must be > 0, got {self.std}")


def _check_nonzero_rms(value: float, name: str) -> float:
    if value <= 0.0:
        raise DegenerateSignalError(f"{name} has zero RMS")
    return value


def rms(segment: Segment) -> float:
    """Root mean square with the population mean (divide by N)."""
    return float(np.sqrt(np.mean(np.square(segment.samples))))


def lambda_for_snr(eeg: Segment, eog: Segment, target_db: SnrDb) -> float:
    """Artifact strength giving the target SNR: lam = rms(eeg) / (rms(eog) * 10^(snr/10))."""
    if not math.isfinite(target_db):
        raise InvalidSegmentError("target SNR must be finite")
    r_eeg = _check_nonzero_rms(rms(eeg), "eeg")
    r_eog = _check_nonzero_rms(rms(eog), "eog")
    return r_eeg / (r_eog * 10.0 ** (target_db / 10.0))


def contaminate(
    eeg: Segment,
    eog: Segment,
    target_db: SnrDb,
    eeg_id: int = 0,
    eog_id: int = 0,
) -> tuple[Segment, MixRecord]:
    """Mix ``eeg + lam * eog`` with lam solved for the target SNR."""
    if len(eeg) != len(eog):
        raise ShapeError(f"length mismatch: eeg {len(eeg)} vs eog {len(eog)}")
    if eeg.sample_rate != eog.sample_rate:
        raise ShapeError(
            f"sample-rate mismatch: {eeg.sample_rate} vs {eog.sample_rate}"
        )
    lam = lambda_for_snr(eeg, eog, target_db)
    noisy = Segment(
        eeg.samples + lam * eog.samples, eeg.sample_rate, SegmentKind.CONTAMINATED
    )
    return noisy, MixRecord(lam=lam, snr_db=float(target_db), eeg_id=eeg_id, eog_id=eog_id)


def measure_snr(eeg: Segment, scaled_eog: Segment) -> SnrDb:
    """SNR in dB of a clean/noise pair: 10*log10(rms(eeg)/rms(scaled_eog))."""
    r_eeg = _check_nonzero_rms(rms(eeg), "eeg")
    r_noise = _check_nonzero_rms(rms(scaled_eog), "scaled_eog")
    return 10.0 * math.log10(r_eeg / r_noise)


def zscore(segment: Segment) -> tuple[Segment, NormStats]:
    """Center and scale to unit population std; constant inputs map to zeros."""
    mean = float(np.mean(segment.samples))
    std = float(np.std(segment.samples))
    clamped = std < STD_CLAMP
    if clamped:
        std = STD_CLAMP
    stats = NormStats(mean=mean, std=std, clamped=clamped)
    normalized = (segment.samples - mean) / std
    if clamped:
        normalized = np.zeros_like(segment.samples)
    return Segment(normalized, segment.sample_rate, segment.kind), stats


def normalize(segment: Segment, stats: NormStats) -> Segment:
    """Apply externally supplied normalization stats."""
    return Segment(
        (segment.samples - stats.mean) / stats.std, segment.sample_rate, segment.kind
    )


def denorm(segment: Segment, stats: NormStats) -> Segment:
    """Invert zscore/normalize."""
    return Segment(
        segment.samples * stats.std + stats.mean, segment.sample_rate, segment.kind
    )
