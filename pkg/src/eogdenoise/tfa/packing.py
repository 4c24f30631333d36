"""Packing complex TF coefficients into real feature sequences and back.

RealImagStacked puts the real rows on top of the imaginary rows (65 complex
STFT bins become 130 real features), which is lossless. RealOnly keeps the
real half; unpacking then re-uses the template's imaginary part. RawSignal
packs a time-domain segment as a single-feature sequence.
"""

from __future__ import annotations

import numpy as np

from ..errors import ShapeError
from ..signals import Segment
from .types import FeatureSequence, Packing, TfCoefficients


def pack(
    source: TfCoefficients | Segment, mode: Packing = Packing.REAL_IMAG_STACKED
) -> FeatureSequence:
    if isinstance(source, Segment):
        if mode is not Packing.RAW_SIGNAL:
            raise ShapeError("segments pack only as RawSignal")
        return FeatureSequence(source.samples[None, :], Packing.RAW_SIGNAL)
    if mode is Packing.RAW_SIGNAL:
        raise ShapeError("RawSignal packing applies to segments, not coefficients")
    if mode is Packing.REAL_IMAG_STACKED:
        values = np.vstack([source.values.real, source.values.imag])
    else:
        values = source.values.real.copy()
    return FeatureSequence(values, mode)


def unpack(seq: FeatureSequence, template: TfCoefficients) -> TfCoefficients:
    """Rebuild a coefficient matrix with the template's axes and metadata."""
    bins = template.n_bins
    if seq.n_timesteps != template.n_frames:
        raise ShapeError(
            f"timestep count {seq.n_timesteps} does not match template frames "
            f"{template.n_frames}"
        )
    if seq.packing is Packing.REAL_IMAG_STACKED:
        if seq.n_features != 2 * bins:
            raise ShapeError(
                f"RealImagStacked expects {2 * bins} features, got {seq.n_features}"
            )
        values = seq.values[:bins] + 1j * seq.values[bins:]
    elif seq.packing is Packing.REAL_ONLY:
        if seq.n_features != bins:
            raise ShapeError(f"RealOnly expects {bins} features, got {seq.n_features}")
        values = seq.values + 1j * template.values.imag
    else:
        raise ShapeError("RawSignal sequences unpack to segments, not coefficients")
    return template.like(values)


def unpack_segment(seq: FeatureSequence, sample_rate: float) -> Segment:
    if seq.packing is not Packing.RAW_SIGNAL:
        raise ShapeError("expected a RawSignal sequence")
    if seq.n_features != 1:
        raise ShapeError(f"RawSignal sequences carry one feature, got {seq.n_features}")
    return Segment(seq.values[0], sample_rate)
