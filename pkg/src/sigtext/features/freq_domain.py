"""Frequency-domain statistical indicators.

Gravity center, frequency variance and frequency standard deviation are
amplitude-weighted moments over the spectral axis; the remaining statistics
are plain moments of the amplitude array itself, and energy is the sum of
squared amplitudes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .spectral import Spectrum


@dataclass(frozen=True)
class FreqStatFeatures:
    rms: float
    kurtosis: float | None
    linear_kurtosis: float | None
    gravity_center_freq_hz: float | None
    std_dev: float
    mean: float
    freq_variance: float | None
    freq_std_dev: float | None
    energy: float


def freq_features(spec: Spectrum) -> FreqStatFeatures:
    a = spec.amplitudes
    f = spec.freqs_hz
    mean = float(np.mean(a))
    rms = float(np.sqrt(np.mean(a * a)))
    std = float(np.std(a))
    energy = float(np.sum(a * a))
    var = std ** 2
    if var > 0.0:
        centered = a - mean
        kurt = float(np.mean(centered ** 4)) / var ** 2
        lin_kurt = kurt - 3.0
    else:
        kurt = lin_kurt = None
    total = float(np.sum(a))
    if total > 0.0:
        gravity = float(np.sum(f * a) / total)
        freq_var = float(np.sum((f - gravity) ** 2 * a) / total)
        freq_std = float(np.sqrt(freq_var))
    else:
        gravity = freq_var = freq_std = None
    return FreqStatFeatures(rms=rms, kurtosis=kurt, linear_kurtosis=lin_kurt,
                            gravity_center_freq_hz=gravity, std_dev=std, mean=mean,
                            freq_variance=freq_var, freq_std_dev=freq_std,
                            energy=energy)
