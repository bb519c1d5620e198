"""Elementary signal units: harmonic, decaying impulse, wavelet, random.

Each unit is a parameter dataclass evaluated on a :class:`SampleGrid` by
:func:`eval_unit`.  Deterministic units with a characteristic frequency at
or above Nyquist are rejected with an :class:`AliasingError` instead of
silently folding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import singledispatch

import numpy as np

from ..signalio import DEFAULT_UNIT, SampleGrid, SampledSignal
from .streams import derive_rng

# Morlet angular center frequency; center frequency in Hz is 5/(2*pi*scale).
MORLET_OMEGA0 = 5.0


class AliasingError(ValueError):
    """A deterministic component was requested at or above Nyquist."""


def _check_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value}")
    return value


def _check_nyquist(freq_hz: float, grid: SampleGrid, what: str) -> None:
    if freq_hz >= grid.nyquist_hz:
        raise AliasingError(
            f"{what} frequency {freq_hz} Hz is at or above Nyquist "
            f"({grid.nyquist_hz} Hz for fs={grid.sample_rate_hz} Hz)"
        )


class MotherWavelet(str, Enum):
    MORLET = "morlet"
    MEXICAN_HAT = "mexican_hat"


class NoiseKind(str, Enum):
    WHITE_GAUSSIAN = "white_gaussian"
    BAND_LIMITED = "band_limited"


@dataclass(frozen=True)
class HarmonicParams:
    """A * sin(2*pi*f*t + phase)."""

    amplitude: float
    frequency_hz: float
    phase_rad: float = 0.0

    def __post_init__(self):
        if _check_finite("amplitude", self.amplitude) < 0:
            raise ValueError(f"amplitude must be >= 0, got {self.amplitude}")
        if _check_finite("frequency_hz", self.frequency_hz) <= 0:
            raise ValueError(f"frequency_hz must be > 0, got {self.frequency_hz}")
        _check_finite("phase_rad", self.phase_rad)


@dataclass(frozen=True)
class ImpulseDecayParams:
    """A * exp(-decay*t) * sin(2*pi*f*t + phase), zero before t = 0."""

    amplitude: float
    frequency_hz: float
    phase_rad: float = 0.0
    decay_per_s: float = 1.0

    def __post_init__(self):
        if _check_finite("amplitude", self.amplitude) < 0:
            raise ValueError(f"amplitude must be >= 0, got {self.amplitude}")
        if _check_finite("frequency_hz", self.frequency_hz) <= 0:
            raise ValueError(f"frequency_hz must be > 0, got {self.frequency_hz}")
        _check_finite("phase_rad", self.phase_rad)
        if _check_finite("decay_per_s", self.decay_per_s) <= 0:
            raise ValueError(f"decay_per_s must be > 0, got {self.decay_per_s}")


@dataclass(frozen=True)
class WaveletParams:
    """psi((t - shift)/scale) / sqrt(scale) for a mother wavelet psi."""

    scale: float
    shift_s: float = 0.0
    mother: MotherWavelet = MotherWavelet.MORLET

    def __post_init__(self):
        if _check_finite("scale", self.scale) <= 0:
            raise ValueError(f"scale must be > 0, got {self.scale}")
        _check_finite("shift_s", self.shift_s)

    @property
    def center_frequency_hz(self) -> float:
        if self.mother is MotherWavelet.MORLET:
            return MORLET_OMEGA0 / (2.0 * math.pi * self.scale)
        # Mexican hat: spectral peak of the second Gaussian derivative.
        return math.sqrt(2.0) / (2.0 * math.pi * self.scale)


@dataclass(frozen=True)
class RandomUnitParams:
    """Stationary random unit: white Gaussian or band-limited noise."""

    std: float
    kind: NoiseKind = NoiseKind.WHITE_GAUSSIAN
    band_hz: tuple[float, float] | None = None
    seed: int = 0

    def __post_init__(self):
        if _check_finite("std", self.std) < 0:
            raise ValueError(f"std must be >= 0, got {self.std}")
        if self.kind is NoiseKind.BAND_LIMITED:
            if self.band_hz is None:
                raise ValueError("band-limited noise requires band_hz=(f_lo, f_hi)")
            lo, hi = self.band_hz
            if not (0 <= lo < hi):
                raise ValueError(f"band must satisfy 0 <= f_lo < f_hi, got {self.band_hz}")


UnitParams = HarmonicParams | ImpulseDecayParams | WaveletParams | RandomUnitParams


def morlet(u: np.ndarray) -> np.ndarray:
    """Real Morlet wavelet, omega0 = 5."""
    return np.pi ** -0.25 * np.exp(-0.5 * u * u) * np.cos(MORLET_OMEGA0 * u)


def mexican_hat(u: np.ndarray) -> np.ndarray:
    """Mexican-hat (Ricker) wavelet, normalized to unit L2 energy."""
    norm = 2.0 / (math.sqrt(3.0) * np.pi ** 0.25)
    return norm * (1.0 - u * u) * np.exp(-0.5 * u * u)


_MOTHERS = {MotherWavelet.MORLET: morlet, MotherWavelet.MEXICAN_HAT: mexican_hat}


@singledispatch
def eval_unit(params, grid: SampleGrid, unit: str = DEFAULT_UNIT) -> SampledSignal:
    """Evaluate one signal unit on the grid."""
    raise TypeError(f"unsupported unit parameters: {type(params).__name__}")


@eval_unit.register
def _(params: HarmonicParams, grid: SampleGrid, unit: str = DEFAULT_UNIT) -> SampledSignal:
    _check_nyquist(params.frequency_hz, grid, "harmonic")
    t = grid.times()
    x = params.amplitude * np.sin(2.0 * np.pi * params.frequency_hz * t + params.phase_rad)
    return SampledSignal(x, grid.sample_rate_hz, unit)


@eval_unit.register
def _(params: ImpulseDecayParams, grid: SampleGrid, unit: str = DEFAULT_UNIT) -> SampledSignal:
    _check_nyquist(params.frequency_hz, grid, "impulse decay")
    t = grid.times()
    x = (params.amplitude * np.exp(-params.decay_per_s * t)
         * np.sin(2.0 * np.pi * params.frequency_hz * t + params.phase_rad))
    return SampledSignal(x, grid.sample_rate_hz, unit)


@eval_unit.register
def _(params: WaveletParams, grid: SampleGrid, unit: str = DEFAULT_UNIT) -> SampledSignal:
    _check_nyquist(params.center_frequency_hz, grid, "wavelet center")
    u = (grid.times() - params.shift_s) / params.scale
    x = _MOTHERS[params.mother](u) / math.sqrt(params.scale)
    return SampledSignal(x, grid.sample_rate_hz, unit)


@eval_unit.register
def _(params: RandomUnitParams, grid: SampleGrid, unit: str = DEFAULT_UNIT) -> SampledSignal:
    rng = derive_rng(params.seed)
    x = rng.normal(0.0, 1.0, grid.n_samples)
    if params.kind is NoiseKind.BAND_LIMITED:
        lo, hi = params.band_hz
        if hi > grid.nyquist_hz:
            raise AliasingError(
                f"band upper edge {hi} Hz exceeds Nyquist ({grid.nyquist_hz} Hz)"
            )
        spec = np.fft.rfft(x)
        freqs = np.fft.rfftfreq(grid.n_samples, 1.0 / grid.sample_rate_hz)
        spec[(freqs < lo) | (freqs > hi)] = 0.0
        x = np.fft.irfft(spec, n=grid.n_samples)
        rms = np.sqrt(np.mean(x * x))
        if rms > 0:
            x = x / rms
    return SampledSignal(params.std * x, grid.sample_rate_hz, unit)
