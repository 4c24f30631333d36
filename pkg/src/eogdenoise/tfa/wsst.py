"""Wavelet synchrosqueezed transform and its inverse.

Synchrosqueezing reassigns analytic-Morlet CWT energy along the frequency
axis: each cell (a, b) with instantaneous-frequency estimate
``omega(a, b) = Im(d_b W / W) / 2pi`` contributes ``W * a^-0.5 * dln(a)`` to
the log-spaced output bin nearest (in log frequency) to omega. The inverse is
then a plain sum over frequency bins scaled by 2 / C_psi, exactly matching
the CWT single-integral reconstruction when no cells are dropped.
"""

from __future__ import annotations

import numpy as np

from ..errors import ConfigError, ShapeError
from ..signals import Segment, SegmentKind
from .cwt import _cwt_arrays, log_spacing
from .types import TfCoefficients, TransformKind, WaveletFamily, WaveletSpec
from .wavelets import admissibility_constant, default_scales

# Cells with |W| below this fraction of max|W| have numerically meaningless
# phase and are excluded from reassignment.
GAMMA_RELATIVE_DEFAULT = 1e-8


def _phase_from_ratio(values: np.ndarray, dvalues: np.ndarray, gamma: float) -> np.ndarray:
    """Instantaneous frequency in Hz; NaN where |W| <= gamma."""
    omega = np.full(values.shape, np.nan)
    valid = np.abs(values) > gamma
    ratio = dvalues[valid] / values[valid]
    omega[valid] = ratio.imag / (2.0 * np.pi)
    return omega


def _derivative_from_coeffs(coeffs: TfCoefficients) -> np.ndarray:
    # Spectral differentiation along the frame axis; exact for the periodic
    # FFT-domain CWT (equivalent to multiplying psi_hat by i*omega up front).
    omega = 2.0 * np.pi * np.fft.fftfreq(coeffs.n_frames, d=1.0 / coeffs.sample_rate)
    return np.fft.ifft(np.fft.fft(coeffs.values, axis=1) * (1j * omega)[None, :], axis=1)


def phase_transform(coeffs: TfCoefficients, gamma: float | None = None) -> np.ndarray:
    """Per-cell instantaneous frequency of an analytic-Morlet CWT, NaN = invalid."""
    if coeffs.transform is not TransformKind.CWT:
        raise ConfigError("phase transform expects CWT coefficients")
    if coeffs.wavelet is None or coeffs.wavelet.family is not WaveletFamily.ANALYTIC_MORLET:
        raise ConfigError("phase transform expects an analytic-Morlet CWT")
    if coeffs.n_frames != coeffs.source_length:
        raise ShapeError("phase transform needs one frame per sample")
    gamma = _resolve_gamma(gamma, coeffs.values)
    return _phase_from_ratio(coeffs.values, _derivative_from_coeffs(coeffs), gamma)


def _resolve_gamma(gamma: float | None, values: np.ndarray) -> float:
    if gamma is None:
        return GAMMA_RELATIVE_DEFAULT * float(np.max(np.abs(values), initial=0.0))
    if not (gamma > 0):
        raise ConfigError(f"gamma must be > 0, got {gamma}")
    return float(gamma)


def default_freq_bins(
    n_samples: int, sample_rate: float, n_bins: int | None = None
) -> np.ndarray:
    """Log-spaced squeeze bins from the fundamental (fs/N) to Nyquist (fs/2)."""
    if n_bins is None:
        n_bins = n_samples
    if n_bins < 2:
        raise ConfigError("need at least two frequency bins")
    return np.geomspace(sample_rate / n_samples, sample_rate / 2.0, n_bins)


def wsst(
    segment: Segment,
    spec: WaveletSpec | None = None,
    gamma: float | None = None,
    n_bins: int | None = None,
    scales: np.ndarray | None = None,
) -> TfCoefficients:
    """Synchrosqueezed transform; a 512-sample segment maps to 512 x 512."""
    if spec is None:
        spec = WaveletSpec.morlet()
    if spec.family is not WaveletFamily.ANALYTIC_MORLET:
        raise ConfigError("synchrosqueezing uses the analytic Morlet wavelet")
    n = len(segment)
    fs = segment.sample_rate
    if scales is None:
        scales = default_scales(n, fs)
    scales = np.asarray(scales, dtype=np.float64)
    values, dvalues = _cwt_arrays(segment.samples, fs, spec, scales, derivative=True)
    gamma = _resolve_gamma(gamma, values)
    omega = _phase_from_ratio(values, dvalues, gamma)

    freqs = default_freq_bins(n, fs, n_bins)
    out = np.zeros((freqs.size, n), dtype=np.complex128)
    # positive-frequency cells only; nearest bin in log2 space, edges clipped
    usable = np.isfinite(omega) & (omega > 0)
    rows, cols = np.nonzero(usable)
    if rows.size:
        log_min = np.log2(freqs[0])
        dlog = (np.log2(freqs[-1]) - log_min) / (freqs.size - 1)
        k = np.rint((np.log2(omega[rows, cols]) - log_min) / dlog).astype(np.int64)
        np.clip(k, 0, freqs.size - 1, out=k)
        amp = log_spacing(scales) / np.sqrt(scales)
        np.add.at(out, (k, cols), values[rows, cols] * amp[rows])
    return TfCoefficients(
        out,
        bin_axis=freqs,
        frame_axis=np.arange(n),
        transform=TransformKind.WSST,
        source_length=n,
        sample_rate=fs,
        wavelet=spec,
        extra={"gamma": gamma, "n_scales": int(scales.size)},
    )


def iwsst(coeffs: TfCoefficients) -> Segment:
    """Sum over frequency bins per frame, scaled by 2 / C_psi."""
    if coeffs.transform is not TransformKind.WSST:
        raise ShapeError(f"expected WSST coefficients, got {coeffs.transform}")
    if coeffs.wavelet is None:
        raise ShapeError("WSST coefficients are missing their wavelet spec")
    if coeffs.n_frames != coeffs.source_length:
        raise ShapeError("WSST frame count must equal the source length")
    c_psi = admissibility_constant(coeffs.wavelet)
    samples = (2.0 / c_psi) * coeffs.values.real.sum(axis=0)
    return Segment(samples, coeffs.sample_rate, SegmentKind.DENOISED)
