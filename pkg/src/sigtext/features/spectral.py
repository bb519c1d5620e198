"""Single-sided amplitude spectrum and envelope utilities.

The amplitude scaling is calibrated so a sinusoid of amplitude A occupying
an integer number of periods lands in one bin of amplitude A (windowed
spectra divide out the window's coherent gain).  Phases refer to a sine
basis, matching the generator convention x = A sin(2 pi f t + phase).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.signal import butter, filtfilt, hilbert

from ..signalio import DEFAULT_UNIT, SampledSignal

MIN_SPECTRUM_SAMPLES = 16

# A spectral line is significant when it clears both an absolute fraction
# of the strongest line and a multiple of the median (noise-floor) level.
FLOOR_MAX_FRACTION = 0.03
FLOOR_MEDIAN_MULTIPLE = 5.0

_WINDOWS = ("rectangular", "hann")


@dataclass(frozen=True)
class Spectrum:
    """Single-sided amplitude spectrum with sine-basis phases."""

    freqs_hz: np.ndarray
    amplitudes: np.ndarray
    phases_rad: np.ndarray
    resolution_hz: float
    sample_rate_hz: float
    unit: str = DEFAULT_UNIT

    @property
    def nyquist_hz(self) -> float:
        return self.sample_rate_hz / 2.0


def spectrum(signal: SampledSignal, window: str = "rectangular") -> Spectrum:
    """Amplitude spectrum of the signal under the chosen window."""
    if window not in _WINDOWS:
        raise ValueError(f"window must be one of {_WINDOWS}, got {window!r}")
    x = signal.samples
    n = x.size
    if n < MIN_SPECTRUM_SAMPLES:
        raise ValueError(f"need at least {MIN_SPECTRUM_SAMPLES} samples, got {n}")
    if window == "hann":
        w = 0.5 - 0.5 * np.cos(2.0 * np.pi * np.arange(n) / n)
    else:
        w = np.ones(n)
    coherent_gain = w.mean()
    raw = np.fft.rfft(x * w)
    amps = np.abs(raw) * 2.0 / (n * coherent_gain)
    amps[0] /= 2.0
    if n % 2 == 0:
        amps[-1] /= 2.0
    # Shift the FFT's cosine-basis angle to the sine convention.
    phases = np.angle(raw) + np.pi / 2.0
    phases = np.mod(phases + np.pi, 2.0 * np.pi) - np.pi
    freqs = np.fft.rfftfreq(n, 1.0 / signal.sample_rate_hz)
    return Spectrum(freqs, amps, phases, signal.sample_rate_hz / n,
                    signal.sample_rate_hz, signal.unit)


def significance_floor(amplitudes: np.ndarray) -> float:
    """Minimum amplitude for a line to count as a significant peak."""
    amplitudes = np.asarray(amplitudes)
    if amplitudes.size == 0 or np.max(amplitudes) == 0.0:
        return np.inf
    return max(FLOOR_MAX_FRACTION * float(np.max(amplitudes)),
               FLOOR_MEDIAN_MULTIPLE * float(np.median(amplitudes)))


def significant_peak_bins(spec: Spectrum) -> np.ndarray:
    """Bins that are interior local maxima above the significance floor."""
    a = spec.amplitudes
    if a.size < 3:
        return np.empty(0, dtype=int)
    floor = significance_floor(a)
    interior = (a[1:-1] > a[:-2]) & (a[1:-1] >= a[2:]) & (a[1:-1] > floor)
    return np.flatnonzero(interior) + 1


def interpolate_peak_freq(spec: Spectrum, bin_index: int) -> float:
    """Parabolic refinement of a peak's frequency between bins."""
    a = spec.amplitudes
    if bin_index <= 0 or bin_index >= a.size - 1:
        return float(spec.freqs_hz[bin_index])
    left, center, right = a[bin_index - 1], a[bin_index], a[bin_index + 1]
    denom = left - 2.0 * center + right
    delta = 0.0 if abs(denom) < 1e-30 else 0.5 * (left - right) / denom
    delta = float(np.clip(delta, -0.5, 0.5))
    return float((bin_index + delta) * spec.resolution_hz)


def envelope(signal: SampledSignal, method: str = "analytic") -> np.ndarray:
    """Amplitude envelope: analytic-signal magnitude or rectify + lowpass."""
    x = signal.samples
    if method == "analytic":
        return np.abs(hilbert(x))
    if method == "rectify":
        cutoff = signal.sample_rate_hz / 20.0
        b, a = butter(4, cutoff / (signal.sample_rate_hz / 2.0))
        return filtfilt(b, a, np.abs(x))
    raise ValueError(f"unknown envelope method {method!r}")


def envelope_spectrum(signal: SampledSignal, method: str = "analytic") -> Spectrum:
    """Spectrum of the mean-removed amplitude envelope."""
    env = envelope(signal, method)
    env_signal = SampledSignal(env - env.mean(), signal.sample_rate_hz, signal.unit)
    return spectrum(env_signal)
