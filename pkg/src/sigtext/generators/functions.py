"""Composite signal functions built from harmonic units.

Three families: harmonics of a shared fundamental, superpositions of
unrelated sinusoids, and the combination of the two.  An amplitude-modulated
product signal is included for the modulation template class.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..signalio import DEFAULT_UNIT, SampleGrid, SampledSignal
from .units import AliasingError, HarmonicParams, eval_unit


class FunctionKind(str, Enum):
    MULTI_HARMONIC = "multi_harmonic"
    RANDOM_HARMONICS = "random_harmonics"
    COMPOSITE = "composite"


@dataclass(frozen=True)
class MultiHarmonicParams:
    """sum_i amps[i] * sin(2*pi * i * fundamental * t + phases[i]), i = 1..N."""

    fundamental_hz: float
    amplitudes: tuple[float, ...]
    phases: tuple[float, ...] | None = None

    def __post_init__(self):
        if not self.amplitudes:
            raise ValueError("at least one harmonic amplitude is required")
        if self.fundamental_hz <= 0:
            raise ValueError(f"fundamental_hz must be > 0, got {self.fundamental_hz}")
        if self.phases is None:
            object.__setattr__(self, "phases", (0.0,) * len(self.amplitudes))
        elif len(self.phases) != len(self.amplitudes):
            raise ValueError("phases and amplitudes must have the same length")


@dataclass(frozen=True)
class RandomHarmonicsParams:
    """sum_i amps[i] * sin(2*pi * freqs[i] * t + phases[i]) with unrelated freqs."""

    frequencies_hz: tuple[float, ...]
    amplitudes: tuple[float, ...]
    phases: tuple[float, ...] | None = None

    def __post_init__(self):
        if not self.frequencies_hz:
            raise ValueError("at least one component frequency is required")
        if len(self.amplitudes) != len(self.frequencies_hz):
            raise ValueError("amplitudes and frequencies must have the same length")
        if any(f <= 0 for f in self.frequencies_hz):
            raise ValueError("all component frequencies must be > 0")
        if self.phases is None:
            object.__setattr__(self, "phases", (0.0,) * len(self.frequencies_hz))
        elif len(self.phases) != len(self.frequencies_hz):
            raise ValueError("phases and frequencies must have the same length")


@dataclass(frozen=True)
class CompositeParams:
    multi: MultiHarmonicParams
    random: RandomHarmonicsParams


@dataclass(frozen=True)
class AmplitudeModulatedParams:
    """carrier_amp * [1 + sum_m depths[m] * cos(2*pi*m*mod*t + mod_phases[m])] * sin(carrier).

    The envelope may carry several modulation orders so the sideband family
    extends past the first pair.
    """

    carrier_hz: float
    carrier_amplitude: float
    modulation_hz: float
    depths: tuple[float, ...]
    carrier_phase_rad: float = 0.0
    mod_phases: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.carrier_hz <= 0 or self.modulation_hz <= 0:
            raise ValueError("carrier and modulation frequencies must be > 0")
        if self.modulation_hz >= self.carrier_hz:
            raise ValueError(
                f"modulation ({self.modulation_hz} Hz) must be below the carrier "
                f"({self.carrier_hz} Hz)"
            )
        if not self.depths:
            raise ValueError("at least one modulation depth is required")
        if self.mod_phases is None:
            object.__setattr__(self, "mod_phases", (0.0,) * len(self.depths))
        elif len(self.mod_phases) != len(self.depths):
            raise ValueError("mod_phases and depths must have the same length")


def synth_multi_harmonic(params: MultiHarmonicParams, grid: SampleGrid,
                         unit: str = DEFAULT_UNIT) -> SampledSignal:
    n = len(params.amplitudes)
    top = n * params.fundamental_hz
    if top >= grid.nyquist_hz:
        raise AliasingError(
            f"harmonic order {n} at {top} Hz is at or above Nyquist ({grid.nyquist_hz} Hz)"
        )
    t = grid.times()
    x = np.zeros_like(t)
    for i, (amp, phase) in enumerate(zip(params.amplitudes, params.phases), start=1):
        x += amp * np.sin(2.0 * np.pi * i * params.fundamental_hz * t + phase)
    return SampledSignal(x, grid.sample_rate_hz, unit)


def synth_random_harmonics(params: RandomHarmonicsParams, grid: SampleGrid,
                           unit: str = DEFAULT_UNIT) -> SampledSignal:
    t = grid.times()
    x = np.zeros_like(t)
    for f, amp, phase in zip(params.frequencies_hz, params.amplitudes, params.phases):
        if f >= grid.nyquist_hz:
            raise AliasingError(
                f"component at {f} Hz is at or above Nyquist ({grid.nyquist_hz} Hz)"
            )
        x += amp * np.sin(2.0 * np.pi * f * t + phase)
    meta: dict = {}
    # Components closer than one DFT bin blur into one line; record, don't merge.
    freqs = np.sort(np.asarray(params.frequencies_hz))
    close = np.diff(freqs) < grid.resolution_hz
    if np.any(close):
        pairs = [(freqs[i], freqs[i + 1]) for i in np.flatnonzero(close)]
        meta["warnings"] = [
            f"components within one bin ({grid.resolution_hz:.4g} Hz): {lo:.4g} and {hi:.4g} Hz"
            for lo, hi in pairs
        ]
    return SampledSignal(x, grid.sample_rate_hz, unit, meta)


def synth_composite(params: CompositeParams, grid: SampleGrid,
                    unit: str = DEFAULT_UNIT) -> SampledSignal:
    a = synth_multi_harmonic(params.multi, grid, unit)
    b = synth_random_harmonics(params.random, grid, unit)
    return SampledSignal(a.samples + b.samples, grid.sample_rate_hz, unit, dict(b.meta))


def synth_amplitude_modulated(params: AmplitudeModulatedParams, grid: SampleGrid,
                              unit: str = DEFAULT_UNIT) -> SampledSignal:
    n_orders = len(params.depths)
    top = params.carrier_hz + n_orders * params.modulation_hz
    if top >= grid.nyquist_hz:
        raise AliasingError(
            f"upper sideband at {top} Hz is at or above Nyquist ({grid.nyquist_hz} Hz)"
        )
    t = grid.times()
    envelope = np.ones_like(t)
    for m, (depth, phase) in enumerate(zip(params.depths, params.mod_phases), start=1):
        envelope += depth * np.cos(2.0 * np.pi * m * params.modulation_hz * t + phase)
    carrier = np.sin(2.0 * np.pi * params.carrier_hz * t + params.carrier_phase_rad)
    x = params.carrier_amplitude * envelope * carrier
    return SampledSignal(x, grid.sample_rate_hz, unit)


def synth_function(kind: FunctionKind, params, grid: SampleGrid,
                   unit: str = DEFAULT_UNIT) -> SampledSignal:
    """Dispatch on the composite-function kind."""
    kind = FunctionKind(kind)
    if kind is FunctionKind.MULTI_HARMONIC:
        return synth_multi_harmonic(params, grid, unit)
    if kind is FunctionKind.RANDOM_HARMONICS:
        return synth_random_harmonics(params, grid, unit)
    return synth_composite(params, grid, unit)


def single_harmonic(amplitude: float, frequency_hz: float, phase_rad: float,
                    grid: SampleGrid, unit: str = DEFAULT_UNIT) -> SampledSignal:
    """Convenience wrapper for the one-unit case."""
    return eval_unit(HarmonicParams(amplitude, frequency_hz, phase_rad), grid, unit)
