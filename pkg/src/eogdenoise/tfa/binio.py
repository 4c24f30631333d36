"""Flat binary debug dump for TF coefficient matrices.

Layout: magic ``TFC1``, then transform tag, bins, frames as little-endian
uint32, then the matrix row-major as complex64 (real, imag) float32 pairs.
Axis metadata is intentionally not stored; this is a debugging artifact.
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from ..errors import FormatError
from .types import TfCoefficients, TransformKind

MAGIC = b"TFC1"
_TAG_CODES = {TransformKind.STFT: 0, TransformKind.CWT: 1, TransformKind.WSST: 2}
_CODE_TAGS = {v: k for k, v in _TAG_CODES.items()}


def dump_coefficients(coeffs: TfCoefficients, path: str | Path) -> None:
    header = MAGIC + struct.pack(
        "<III", _TAG_CODES[coeffs.transform], coeffs.n_bins, coeffs.n_frames
    )
    payload = np.ascontiguousarray(coeffs.values, dtype="<c8").tobytes()
    Path(path).write_bytes(header + payload)


def load_coefficients(path: str | Path) -> tuple[TransformKind, np.ndarray]:
    """Returns (transform tag, complex64 matrix promoted to complex128)."""
    raw = Path(path).read_bytes()
    if len(raw) < 16 or raw[:4] != MAGIC:
        raise FormatError(f"{path}: not a TFC1 coefficient dump")
    tag_code, bins, frames = struct.unpack("<III", raw[4:16])
    if tag_code not in _CODE_TAGS:
        raise FormatError(f"{path}: unknown transform tag {tag_code}")
    expected = 16 + bins * frames * 8
    if len(raw) != expected:
        raise FormatError(
            f"{path}: payload is {len(raw) - 16} bytes, expected {expected - 16}"
        )
    values = np.frombuffer(raw, dtype="<c8", offset=16).reshape(bins, frames)
    return _CODE_TAGS[tag_code], values.astype(np.complex128)
