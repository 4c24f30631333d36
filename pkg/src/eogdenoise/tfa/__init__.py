"""Time-frequency transforms (STFT, bump CWT, Morlet WSST) and feature packing."""

from .binio import dump_coefficients, load_coefficients
from .cwt import cwt, icwt
from .packing import pack, unpack, unpack_segment
from .stft import istft, stft
from .types import (
    FeatureSequence,
    Packing,
    TfCoefficients,
    TransformKind,
    WaveletFamily,
    WaveletSpec,
)
from .wavelets import (
    admissibility_constant,
    center_frequencies_hz,
    default_scales,
    peak_frequency_hz,
)
from .wsst import default_freq_bins, iwsst, phase_transform, wsst

__all__ = [
    "FeatureSequence",
    "Packing",
    "TfCoefficients",
    "TransformKind",
    "WaveletFamily",
    "WaveletSpec",
    "admissibility_constant",
    "center_frequencies_hz",
    "cwt",
    "default_freq_bins",
    "default_scales",
    "dump_coefficients",
    "icwt",
    "istft",
    "iwsst",
    "load_coefficients",
    "pack",
    "peak_frequency_hz",
    "phase_transform",
    "stft",
    "unpack",
    "unpack_segment",
    "wsst",
]
