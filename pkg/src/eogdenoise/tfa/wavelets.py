"""Fourier-domain wavelet definitions, scale grids, and admissibility constants.

Both wavelets are analytic (zero at non-positive frequencies) and defined
directly by their Fourier transform ``psi_hat(omega)``:

* bump: ``exp(1 - 1/(1 - ((omega - mu)/sigma)^2))`` on ``|omega - mu| < sigma``
* analytic Morlet ("amor"): ``exp(-(omega - omega0)^2 / 2)``

The L2-normalized CWT stores ``W(a, b)`` whose spectrum at scale ``a`` is
``sqrt(a) * conj(psi_hat(a * omega)) * X(omega)``; the matching one-integral
reconstruction is ``x(b) = (2 / C) * Re sum_j W(a_j, b) * a_j^-0.5 * dln(a)``
with ``C = integral psi_hat(u) / u du`` computed by quadrature.
"""

from __future__ import annotations

import functools

import numpy as np
from scipy.integrate import quad

from ..errors import ConfigError
from .types import WaveletFamily, WaveletSpec

DEFAULT_N_SCALES = 94


def bump_fourier(omega: np.ndarray, mu: float, sigma: float) -> np.ndarray:
    """Bump wavelet spectrum; compactly supported on (mu - sigma, mu + sigma)."""
    omega = np.asarray(omega, dtype=np.float64)
    u = (omega - mu) / sigma
    out = np.zeros_like(u)
    inside = np.abs(u) < 1.0
    # evaluate only strictly inside the support to avoid 1/0 warnings
    ui = u[inside]
    out[inside] = np.exp(1.0 - 1.0 / (1.0 - ui * ui))
    return out


def morlet_fourier(omega: np.ndarray, omega0: float) -> np.ndarray:
    """Analytic Morlet spectrum (Gaussian at omega0, zero for omega <= 0)."""
    omega = np.asarray(omega, dtype=np.float64)
    out = np.exp(-0.5 * (omega - omega0) ** 2)
    return np.where(omega > 0, out, 0.0)


def fourier_eval(spec: WaveletSpec, omega: np.ndarray) -> np.ndarray:
    if spec.family is WaveletFamily.BUMP:
        return bump_fourier(omega, spec.center, spec.width)
    if spec.family is WaveletFamily.ANALYTIC_MORLET:
        return morlet_fourier(omega, spec.center)
    raise ConfigError(f"unknown wavelet family {spec.family}")


def peak_frequency_hz(spec: WaveletSpec, scale: float) -> float:
    """Frequency (Hz) where the dilated wavelet's spectrum peaks."""
    return spec.center / (2.0 * np.pi * scale)


def center_frequencies_hz(spec: WaveletSpec, scales: np.ndarray) -> np.ndarray:
    return spec.center / (2.0 * np.pi * np.asarray(scales, dtype=np.float64))


def scale_for_frequency(spec: WaveletSpec, freq_hz: float) -> float:
    return spec.center / (2.0 * np.pi * freq_hz)


def default_scales(
    n_samples: int, sample_rate: float, n_scales: int = DEFAULT_N_SCALES
) -> np.ndarray:
    """Geometric scale grid: n_scales points covering [2*dt, n*dt/4].

    For 512 samples this spans six octaves, so 94 scales correspond to an
    effective 15.5 voices per octave.
    """
    if n_scales < 2:
        raise ConfigError("need at least two scales")
    dt = 1.0 / sample_rate
    s_min = 2.0 * dt
    s_max = n_samples * dt / 4.0
    if s_max <= s_min:
        raise ConfigError(f"segment of {n_samples} samples too short for a scale grid")
    return np.geomspace(s_min, s_max, n_scales)


@functools.lru_cache(maxsize=8)
def _admissibility_cached(family: WaveletFamily, center: float, width: float) -> float:
    if family is WaveletFamily.BUMP:
        integrand = lambda u: bump_fourier(np.array([u]), center, width)[0] / u
        lo, hi = center - width, center + width
    else:
        integrand = lambda u: morlet_fourier(np.array([u]), center)[0] / u
        lo, hi = max(center - 10.0, 1e-12), center + 10.0
    value, _ = quad(integrand, lo, hi, limit=200)
    return float(value)


def admissibility_constant(spec: WaveletSpec) -> float:
    """C = integral_0^inf psi_hat(u)/u du, by adaptive quadrature."""
    return _admissibility_cached(spec.family, spec.center, spec.width)
