"""Time-domain statistical indicators and waveform features.

Shape factors follow the conventions of vibration diagnostics: margin
(clearance factor) is peak over squared mean root amplitude, the waveform
indicator (shape factor) is RMS over absolute mean, kurtosis is the raw
fourth standardized moment.  Degenerate signals report ``None`` instead of
raising on the zero denominators.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.signal import find_peaks

from ..signalio import SampledSignal
from .spectral import envelope, spectrum

MIN_WAVE_SAMPLES = 64

# Periodic-shock gate: heavy-tailed amplitude distribution plus a clear
# repetition line in the envelope spectrum (6 dB over its median level).
SHOCK_KURTOSIS_MIN = 4.0
SHOCK_PEAK_OVER_MEDIAN = 2.0

# Autocorrelation peaks need this much normalized prominence to count.
_ACF_PROMINENCE = 0.1


@dataclass(frozen=True)
class TimeFeatures:
    rms: float
    mean: float
    kurtosis: float | None
    linear_kurtosis: float | None
    margin: float | None
    min: float
    max: float
    peak_to_peak: float
    skewness: float | None
    root_square_amplitude: float
    absolute_mean: float
    variance: float
    waveform_indicator: float | None
    peak: float


@dataclass(frozen=True)
class WaveFeatures:
    fundamental_period_s: float | None
    am_period_s: float | None
    periodic_shock: bool
    shock_strength: float


def time_features(signal: SampledSignal) -> TimeFeatures:
    x = signal.samples
    mean = float(np.mean(x))
    rms = float(np.sqrt(np.mean(x * x)))
    centered = x - mean
    variance = float(np.mean(centered ** 2))
    absolute_mean = float(np.mean(np.abs(x)))
    root_square_amplitude = float(np.mean(np.sqrt(np.abs(x))) ** 2)
    peak = float(np.max(np.abs(x)))
    if variance > 0.0:
        m2 = variance
        m3 = float(np.mean(centered ** 3))
        m4 = float(np.mean(centered ** 4))
        kurtosis = m4 / m2 ** 2
        linear_kurtosis = kurtosis - 3.0
        skewness = m3 / m2 ** 1.5
    else:
        kurtosis = linear_kurtosis = skewness = None
    margin = peak / root_square_amplitude if root_square_amplitude > 0.0 else None
    waveform = rms / absolute_mean if absolute_mean > 0.0 else None
    return TimeFeatures(
        rms=rms, mean=mean, kurtosis=kurtosis, linear_kurtosis=linear_kurtosis,
        margin=margin, min=float(np.min(x)), max=float(np.max(x)),
        peak_to_peak=float(np.max(x) - np.min(x)), skewness=skewness,
        root_square_amplitude=root_square_amplitude, absolute_mean=absolute_mean,
        variance=variance, waveform_indicator=waveform, peak=peak,
    )


def _autocorr(x: np.ndarray) -> np.ndarray:
    """Biased autocorrelation, normalized to 1 at lag zero."""
    x = x - x.mean()
    n = x.size
    padded = np.fft.rfft(x, 2 * n)
    acf = np.fft.irfft(padded * np.conj(padded))[:n]
    if acf[0] <= 0.0:
        return np.zeros(n)
    return acf / acf[0]


def _first_acf_period(x: np.ndarray, sample_rate_hz: float) -> float | None:
    acf = _autocorr(x)
    if not np.any(acf):
        return None
    peaks, _ = find_peaks(acf, prominence=_ACF_PROMINENCE)
    peaks = peaks[acf[peaks] > 0.0]
    if peaks.size == 0:
        return None
    return float(peaks[0] / sample_rate_hz)


def wave_features(signal: SampledSignal) -> WaveFeatures:
    x = signal.samples
    if x.size < MIN_WAVE_SAMPLES:
        raise ValueError(f"need at least {MIN_WAVE_SAMPLES} samples, got {x.size}")
    fundamental = _first_acf_period(x, signal.sample_rate_hz)

    env = envelope(signal)
    env_centered = env - env.mean()
    am_period = None
    if np.std(env_centered) > 1e-12 * (np.std(x) + 1e-300):
        am_period = _first_acf_period(env_centered, signal.sample_rate_hz)

    tf_kurt = time_features(signal).kurtosis
    shock = False
    strength = 0.0
    if tf_kurt is not None:
        strength = max(0.0, tf_kurt - 3.0)
        if tf_kurt > SHOCK_KURTOSIS_MIN and np.any(env_centered):
            env_spec = spectrum(signal.with_samples(env_centered, meta={}))
            amps = env_spec.amplitudes[1:]
            med = float(np.median(amps))
            if med > 0.0 and float(np.max(amps)) >= SHOCK_PEAK_OVER_MEDIAN * med:
                shock = True
    return WaveFeatures(fundamental_period_s=fundamental, am_period_s=am_period,
                        periodic_shock=shock, shock_strength=strength)
