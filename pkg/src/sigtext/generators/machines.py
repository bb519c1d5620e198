"""Bearing and gear fault vibration models.

Bearing faults produce a train of decaying resonance bursts repeating at
the fault characteristic frequency; rolling-element faults start half a
period late.  Gear faults amplitude- and frequency-modulate the tooth-mesh
harmonics at the fault characteristic frequency, which puts sidebands
around every mesh order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..signalio import DEFAULT_UNIT, SampleGrid, SampledSignal
from .units import AliasingError

# Bursts are summed until the decaying envelope falls below this fraction
# of its initial value, so truncation error stays far under float noise.
_BURST_CUTOFF = 1e-12

MIN_FAULT_PERIODS = 5


class BearingFaultType(str, Enum):
    OUTER_RACE = "outer_race"
    INNER_RACE = "inner_race"
    ROLLING_ELEMENT = "rolling_element"

    @property
    def burst_offset_periods(self) -> float:
        """Fraction of a fault period before the first burst."""
        return 0.5 if self is BearingFaultType.ROLLING_ELEMENT else 0.0


@dataclass(frozen=True)
class BearingParams:
    impulse_amplitude: float
    natural_freq_hz: float
    fault_freq_hz: float
    decay_rate: float
    fault_type: BearingFaultType = BearingFaultType.OUTER_RACE

    def __post_init__(self):
        if self.impulse_amplitude < 0:
            raise ValueError(f"impulse_amplitude must be >= 0, got {self.impulse_amplitude}")
        if self.fault_freq_hz <= 0 or self.natural_freq_hz <= 0:
            raise ValueError("frequencies must be > 0")
        if self.fault_freq_hz >= self.natural_freq_hz:
            raise ValueError(
                f"fault frequency ({self.fault_freq_hz} Hz) must be below the "
                f"natural frequency ({self.natural_freq_hz} Hz)"
            )
        if self.decay_rate <= 0:
            raise ValueError(f"decay_rate must be > 0, got {self.decay_rate}")


@dataclass(frozen=True)
class GearParams:
    mesh_freq_hz: float
    fault_char_freq_hz: float
    am_amplitudes: tuple[float, ...]
    fm_amplitudes: tuple[float, ...]
    am_phases: tuple[float, ...] | None = None
    fm_phases: tuple[float, ...] | None = None
    carrier_phases: tuple[float, ...] | None = None

    def __post_init__(self):
        n = len(self.am_amplitudes)
        if n == 0:
            raise ValueError("at least one mesh order is required")
        if len(self.fm_amplitudes) != n:
            raise ValueError("am_amplitudes and fm_amplitudes must have the same length")
        if self.fault_char_freq_hz <= 0 or self.mesh_freq_hz <= 0:
            raise ValueError("frequencies must be > 0")
        if self.fault_char_freq_hz >= self.mesh_freq_hz:
            raise ValueError(
                f"fault characteristic frequency ({self.fault_char_freq_hz} Hz) must be "
                f"below the mesh frequency ({self.mesh_freq_hz} Hz)"
            )
        for name in ("am_phases", "fm_phases", "carrier_phases"):
            val = getattr(self, name)
            if val is None:
                object.__setattr__(self, name, (0.0,) * n)
            elif len(val) != n:
                raise ValueError(f"{name} must have length {n}")

    @property
    def max_order(self) -> int:
        return len(self.am_amplitudes)


def synth_bearing(params: BearingParams, grid: SampleGrid,
                  unit: str = DEFAULT_UNIT) -> SampledSignal:
    """Decaying resonance bursts repeating every 1/fault_freq seconds.

    Burst m starts at (m + offset)/fault_freq with offset 0 for race faults
    and 1/2 for rolling-element faults; each burst rings at the natural
    frequency under an exponential envelope.
    """
    duration = grid.duration_s
    if duration * params.fault_freq_hz < MIN_FAULT_PERIODS:
        raise ValueError(
            f"grid covers {duration * params.fault_freq_hz:.2f} fault periods; "
            f"need at least {MIN_FAULT_PERIODS}"
        )
    if params.natural_freq_hz >= grid.nyquist_hz:
        raise AliasingError(
            f"natural frequency {params.natural_freq_hz} Hz is at or above Nyquist "
            f"({grid.nyquist_hz} Hz)"
        )
    t = grid.times()
    x = np.zeros_like(t)
    if params.impulse_amplitude == 0.0:
        return SampledSignal(x, grid.sample_rate_hz, unit)
    period = 1.0 / params.fault_freq_hz
    offset = params.fault_type.burst_offset_periods * period
    # Bursts older than this no longer contribute above the cutoff.
    tail = -np.log(_BURST_CUTOFF) / params.decay_rate
    m = 0
    while True:
        start = m * period + offset
        if start > duration:
            break
        tau = t - start
        live = tau >= 0.0
        if start + tail >= 0.0:
            x[live] += (params.impulse_amplitude
                        * np.exp(-params.decay_rate * tau[live])
                        * np.cos(2.0 * np.pi * params.natural_freq_hz * tau[live]))
        m += 1
    return SampledSignal(x, grid.sample_rate_hz, unit)


def synth_gear(params: GearParams, grid: SampleGrid,
               unit: str = DEFAULT_UNIT) -> SampledSignal:
    """AM/FM-modulated mesh harmonics.

    Order i contributes
    [1 + am[i] cos(2 pi f_ch t + am_phase[i])]
      * cos(2 pi i f_m t + fm[i] sin(2 pi f_ch t + fm_phase[i]) + carrier_phase[i]).
    """
    n = params.max_order
    top = n * params.mesh_freq_hz + 5 * params.fault_char_freq_hz
    if top >= grid.nyquist_hz:
        raise AliasingError(
            f"mesh order {n} with sidebands reaches {top} Hz, at or above Nyquist "
            f"({grid.nyquist_hz} Hz)"
        )
    t = grid.times()
    x = np.zeros_like(t)
    two_pi = 2.0 * np.pi
    for i in range(1, n + 1):
        a = params.am_amplitudes[i - 1]
        b = params.fm_amplitudes[i - 1]
        envelope = 1.0 + a * np.cos(two_pi * params.fault_char_freq_hz * t
                                    + params.am_phases[i - 1])
        phase = (two_pi * i * params.mesh_freq_hz * t
                 + b * np.sin(two_pi * params.fault_char_freq_hz * t
                              + params.fm_phases[i - 1])
                 + params.carrier_phases[i - 1])
        x += envelope * np.cos(phase)
    return SampledSignal(x, grid.sample_rate_hz, unit)
