"""Short-time Fourier transform with a rectangular window and overlap-add inverse.

Defaults follow the feature-extraction configuration used throughout the
package: 128-point rectangular window, hop 1 (overlap 127), one-sided
spectrum. A 512-sample segment maps to a 65 x 385 complex matrix.
"""

from __future__ import annotations

import numpy as np

from ..errors import ShapeError
from ..signals import Segment, SegmentKind
from .types import TfCoefficients, TransformKind

DEFAULT_WINDOW_LEN = 128
DEFAULT_HOP = 1


def stft(
    segment: Segment,
    window_len: int = DEFAULT_WINDOW_LEN,
    hop: int = DEFAULT_HOP,
) -> TfCoefficients:
    """One-sided STFT: entry (k, m) = sum_n x[m*hop + n] * exp(-2j*pi*k*n/window_len)."""
    x = segment.samples
    n = x.size
    if window_len < 1 or hop < 1:
        raise ShapeError("window_len and hop must be >= 1")
    if n < window_len:
        raise ShapeError(f"segment length {n} shorter than window {window_len}")
    n_frames = (n - window_len) // hop + 1
    frames = np.lib.stride_tricks.sliding_window_view(x, window_len)[::hop][:n_frames]
    values = np.fft.rfft(frames, axis=1).T  # [bins, frames]
    bin_axis = np.arange(window_len // 2 + 1) * segment.sample_rate / window_len
    frame_axis = np.arange(n_frames) * hop
    return TfCoefficients(
        values,
        bin_axis,
        frame_axis,
        TransformKind.STFT,
        source_length=n,
        sample_rate=segment.sample_rate,
        extra={"window_len": window_len, "hop": hop},
    )


def istft(coeffs: TfCoefficients) -> Segment:
    """Overlap-add inverse, normalizing each sample by its window-coverage count.

    Exact (to rounding) for unmodified coefficients; for arbitrary matrices it
    returns the coverage-weighted average of the per-frame inverse DFTs.
    """
    if coeffs.transform is not TransformKind.STFT:
        raise ShapeError(f"expected STFT coefficients, got {coeffs.transform}")
    window_len = int(coeffs.extra.get("window_len", 2 * (coeffs.n_bins - 1)))
    hop = int(coeffs.extra.get("hop", DEFAULT_HOP))
    if coeffs.n_bins != window_len // 2 + 1:
        raise ShapeError(
            f"bin count {coeffs.n_bins} inconsistent with window {window_len}"
        )
    if hop > window_len:
        raise ShapeError("hop larger than window leaves uncovered samples")
    n = coeffs.source_length
    n_frames = coeffs.n_frames
    if (n - window_len) // hop + 1 != n_frames:
        raise ShapeError(
            f"frame count {n_frames} inconsistent with length {n}, "
            f"window {window_len}, hop {hop}"
        )
    frames = np.fft.irfft(coeffs.values.T, n=window_len, axis=1)
    out = np.zeros(n)
    coverage = np.zeros(n)
    for m in range(n_frames):
        start = m * hop
        out[start : start + window_len] += frames[m]
        coverage[start : start + window_len] += 1.0
    out /= coverage
    return Segment(out, coeffs.sample_rate, SegmentKind.DENOISED)
