"""Randomized parameter sampling for labeled signal generation.

A :class:`ParamRanges` carries closed intervals and discrete choice sets
plus a master seed; :func:`sample_params` turns a draw index into concrete
generator parameters for one class.  Frequencies are snapped to the grid's
DFT bins so generated components sit on integer-period lines, and the
random / composite samplers reject draws that would blur class boundaries
(accidental harmonic relations or symmetric sideband-like triples).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ..signalio import SampleGrid, SampledSignal
from .functions import (AmplitudeModulatedParams, CompositeParams,
                        MultiHarmonicParams, RandomHarmonicsParams)
from .machines import BearingFaultType, BearingParams, GearParams
from .streams import derive_rng
from .units import HarmonicParams


class GeneratorClass(str, Enum):
    SINGLE_HARMONIC = "single_harmonic"
    MULTI_HARMONIC = "multi_harmonic"
    RANDOM_HARMONIC = "random_harmonic"
    COMPOSITE_HARMONIC = "composite_harmonic"
    AMPLITUDE_MODULATED = "amplitude_modulated"
    BEARING = "bearing"
    GEAR = "gear"


@dataclass(frozen=True)
class ParamRanges:
    """Closed intervals and discrete choice sets keyed by parameter name."""

    intervals: dict[str, tuple[float, float]] = field(default_factory=dict)
    choices: dict[str, tuple] = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        for name, (lo, hi) in self.intervals.items():
            if not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi:
                raise ValueError(f"interval for '{name}' must satisfy lo <= hi, got ({lo}, {hi})")
        for name, options in self.choices.items():
            if len(options) == 0:
                raise ValueError(f"choice set for '{name}' is empty")

    def interval(self, name: str) -> tuple[float, float]:
        try:
            return self.intervals[name]
        except KeyError:
            raise KeyError(f"no interval configured for parameter '{name}'") from None

    def choice_set(self, name: str) -> tuple:
        try:
            return self.choices[name]
        except KeyError:
            raise KeyError(f"no choice set configured for parameter '{name}'") from None


def default_ranges(kind: GeneratorClass, seed: int = 0) -> ParamRanges:
    """Stock sampling ranges per class (tuned for a 10 kHz, 1 s grid)."""
    kind = GeneratorClass(kind)
    common = {"phase_rad": (-math.pi, math.pi), "noise_snr_db": (25.0, 40.0)}
    if kind is GeneratorClass.SINGLE_HARMONIC:
        return ParamRanges(
            {"frequency_hz": (20.0, 2000.0), "amplitude": (0.5, 8.0), **common},
            {}, seed)
    if kind is GeneratorClass.MULTI_HARMONIC:
        return ParamRanges(
            {"fundamental_hz": (30.0, 400.0), "amplitude_1": (2.0, 5.0),
             "harmonic_ratio": (0.15, 0.6), **common},
            {"n_orders": (3, 4, 5)}, seed)
    if kind is GeneratorClass.RANDOM_HARMONIC:
        return ParamRanges(
            {"frequency_hz": (30.0, 3000.0), "amplitude": (0.5, 4.0), **common},
            {"n_components": (3, 4, 5, 6)}, seed)
    if kind is GeneratorClass.COMPOSITE_HARMONIC:
        return ParamRanges(
            {"fundamental_hz": (60.0, 350.0), "amplitude_1": (2.0, 5.0),
             "harmonic_ratio": (0.15, 0.6),
             "component_frequency_hz": (30.0, 3000.0),
             "component_amplitude": (0.6, 3.0), **common},
            {"n_orders": (2, 3, 4), "n_components": (2, 3)}, seed)
    if kind is GeneratorClass.AMPLITUDE_MODULATED:
        return ParamRanges(
            {"carrier_hz": (800.0, 2000.0), "modulation_hz": (20.0, 80.0),
             "carrier_amplitude": (1.0, 5.0),
             "depth_1": (0.5, 0.9), "depth_2": (0.25, 0.5), **common},
            {}, seed)
    if kind is GeneratorClass.BEARING:
        return ParamRanges(
            {"impulse_amplitude": (1.0, 5.0), "natural_freq_hz": (1500.0, 3000.0),
             "fault_freq_hz": (80.0, 150.0), "decay_rate": (300.0, 600.0), **common},
            {"fault_type": tuple(BearingFaultType)}, seed)
    return ParamRanges(
        {"mesh_freq_hz": (800.0, 1400.0), "fault_char_freq_hz": (20.0, 60.0),
         "am_amplitude": (0.5, 1.0), "fm_amplitude": (0.8, 1.6), **common},
        {"n_orders": (2, 3)}, seed)


def _pick(rng, options: tuple):
    return options[int(rng.integers(len(options)))]


# Drawn frequencies keep the full synthesized content below this fraction
# of Nyquist.
NYQUIST_HEADROOM = 0.9


def _snap(freq: float, lo: float, hi: float, grid: SampleGrid | None) -> float:
    """Snap a drawn frequency onto the nearest DFT bin, staying in range."""
    if grid is None:
        return freq
    df = grid.resolution_hz
    snapped = max(df, round(freq / df) * df)
    return snapped if lo - 1e-12 <= snapped <= hi + 1e-12 else freq


def _draw_freq(rng, ranges: ParamRanges, name: str, grid: SampleGrid | None,
               cap_hz: float | None = None) -> float:
    lo, hi = ranges.interval(name)
    if grid is not None:
        limit = NYQUIST_HEADROOM * grid.nyquist_hz if cap_hz is None else cap_hz
        if lo >= limit:
            raise ValueError(
                f"range for '{name}' ({lo}..{hi} Hz) does not fit below the grid "
                f"limit {limit:.6g} Hz")
        hi = min(hi, limit)
    return _snap(rng.uniform(lo, hi), lo, hi, grid)


def _harmonically_related(f1: float, f2: float, tol_rel: float = 0.03,
                          max_order: int = 20) -> bool:
    """Within tolerance of an integer or half-integer ratio."""
    lo, hi = sorted((f1, f2))
    for twice_k in range(2, 2 * max_order + 1):
        if abs(hi - 0.5 * twice_k * lo) <= tol_rel * lo:
            return True
    return hi / lo > max_order


def _forms_symmetric_triple(freqs: list[float], tol: float) -> bool:
    """True if any three lines sit in arithmetic progression (AM look-alike)."""
    n = len(freqs)
    fs = sorted(freqs)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if abs((fs[j] - fs[i]) - (fs[k] - fs[j])) <= tol:
                    return True
    return False


def _draw_unrelated_freqs(rng, ranges: ParamRanges, name: str, count: int,
                          grid: SampleGrid | None,
                          forbidden_fundamental: float | None = None,
                          max_tries: int = 200) -> list[float]:
    tol = 2.0 * (grid.resolution_hz if grid is not None else 1.0)
    freqs: list[float] = []
    tries = 0
    while len(freqs) < count:
        tries += 1
        if tries > max_tries:
            raise RuntimeError(f"could not draw {count} mutually unrelated frequencies")
        f = _draw_freq(rng, ranges, name, grid)
        if any(abs(f - g) < tol or _harmonically_related(f, g) for g in freqs):
            continue
        if forbidden_fundamental is not None and _harmonically_related(f, forbidden_fundamental):
            continue
        if _forms_symmetric_triple(freqs + [f], tol):
            continue
        freqs.append(f)
    return freqs


def _draw_multi(rng, ranges: ParamRanges, grid: SampleGrid | None) -> MultiHarmonicParams:
    n = int(_pick(rng, ranges.choice_set("n_orders")))
    cap = None if grid is None else NYQUIST_HEADROOM * grid.nyquist_hz / 2.0
    f0 = _draw_freq(rng, ranges, "fundamental_hz", grid, cap_hz=cap)
    if grid is not None:
        # Keep the top harmonic comfortably below Nyquist.
        while n * f0 >= NYQUIST_HEADROOM * grid.nyquist_hz and n > 2:
            n -= 1
    a1 = rng.uniform(*ranges.interval("amplitude_1"))
    r_lo, r_hi = ranges.interval("harmonic_ratio")
    amps = [a1] + [a1 * rng.uniform(r_lo, r_hi) for _ in range(n - 1)]
    p_lo, p_hi = ranges.interval("phase_rad")
    phases = [rng.uniform(p_lo, p_hi) for _ in range(n)]
    return MultiHarmonicParams(f0, tuple(amps), tuple(phases))


def sample_params(ranges: ParamRanges, kind: GeneratorClass,
                  grid: SampleGrid | None = None, index: int = 0):
    """Draw one concrete parameter set for ``kind``.

    Deterministic in (ranges.seed, index): repeating a draw reproduces it
    exactly.  When a grid is supplied, frequencies land on its DFT bins.
    """
    kind = GeneratorClass(kind)
    rng = derive_rng(ranges.seed, index)
    p_lo, p_hi = ranges.interval("phase_rad") if "phase_rad" in ranges.intervals else (0.0, 0.0)

    if kind is GeneratorClass.SINGLE_HARMONIC:
        return HarmonicParams(
            amplitude=rng.uniform(*ranges.interval("amplitude")),
            frequency_hz=_draw_freq(rng, ranges, "frequency_hz", grid),
            phase_rad=rng.uniform(p_lo, p_hi),
        )

    if kind is GeneratorClass.MULTI_HARMONIC:
        return _draw_multi(rng, ranges, grid)

    if kind is GeneratorClass.RANDOM_HARMONIC:
        n = int(_pick(rng, ranges.choice_set("n_components")))
        freqs = _draw_unrelated_freqs(rng, ranges, "frequency_hz", n, grid)
        a_lo, a_hi = ranges.interval("amplitude")
        return RandomHarmonicsParams(
            tuple(freqs),
            tuple(rng.uniform(a_lo, a_hi) for _ in range(n)),
            tuple(rng.uniform(p_lo, p_hi) for _ in range(n)),
        )

    if kind is GeneratorClass.COMPOSITE_HARMONIC:
        multi = _draw_multi(rng, ranges, grid)
        n = int(_pick(rng, ranges.choice_set("n_components")))
        freqs = _draw_unrelated_freqs(rng, ranges, "component_frequency_hz", n, grid,
                                      forbidden_fundamental=multi.fundamental_hz)
        a_lo, a_hi = ranges.interval("component_amplitude")
        random_part = RandomHarmonicsParams(
            tuple(freqs),
            tuple(rng.uniform(a_lo, a_hi) for _ in range(n)),
            tuple(rng.uniform(p_lo, p_hi) for _ in range(n)),
        )
        return CompositeParams(multi, random_part)

    if kind is GeneratorClass.AMPLITUDE_MODULATED:
        mod_hi = ranges.interval("modulation_hz")[1]
        carrier_cap = (None if grid is None
                       else NYQUIST_HEADROOM * grid.nyquist_hz - 2.0 * mod_hi)
        return AmplitudeModulatedParams(
            carrier_hz=_draw_freq(rng, ranges, "carrier_hz", grid, cap_hz=carrier_cap),
            carrier_amplitude=rng.uniform(*ranges.interval("carrier_amplitude")),
            modulation_hz=_draw_freq(rng, ranges, "modulation_hz", grid),
            depths=(rng.uniform(*ranges.interval("depth_1")),
                    rng.uniform(*ranges.interval("depth_2"))),
            carrier_phase_rad=rng.uniform(p_lo, p_hi),
            mod_phases=(rng.uniform(p_lo, p_hi), rng.uniform(p_lo, p_hi)),
        )

    if kind is GeneratorClass.BEARING:
        return BearingParams(
            impulse_amplitude=rng.uniform(*ranges.interval("impulse_amplitude")),
            natural_freq_hz=_draw_freq(rng, ranges, "natural_freq_hz", grid),
            fault_freq_hz=_draw_freq(rng, ranges, "fault_freq_hz", grid),
            decay_rate=rng.uniform(*ranges.interval("decay_rate")),
            fault_type=BearingFaultType(_pick(rng, ranges.choice_set("fault_type"))),
        )

    n = int(_pick(rng, ranges.choice_set("n_orders")))
    ch_hi = ranges.interval("fault_char_freq_hz")[1]
    mesh_cap = (None if grid is None
                else NYQUIST_HEADROOM * grid.nyquist_hz - 5.0 * ch_hi)
    mesh = _draw_freq(rng, ranges, "mesh_freq_hz", grid, cap_hz=mesh_cap)
    if grid is not None:
        while (n * mesh + 5.0 * ch_hi >= NYQUIST_HEADROOM * grid.nyquist_hz
               and n > 1):
            n -= 1
    am_lo, am_hi = ranges.interval("am_amplitude")
    fm_lo, fm_hi = ranges.interval("fm_amplitude")
    return GearParams(
        mesh_freq_hz=mesh,
        fault_char_freq_hz=_draw_freq(rng, ranges, "fault_char_freq_hz", grid),
        am_amplitudes=tuple(rng.uniform(am_lo, am_hi) for _ in range(n)),
        fm_amplitudes=tuple(rng.uniform(fm_lo, fm_hi) for _ in range(n)),
        am_phases=tuple(rng.uniform(p_lo, p_hi) for _ in range(n)),
        fm_phases=tuple(rng.uniform(p_lo, p_hi) for _ in range(n)),
        carrier_phases=tuple(rng.uniform(p_lo, p_hi) for _ in range(n)),
    )


def sample_noise_snr_db(ranges: ParamRanges, index: int = 0) -> float:
    """Noise level drawn from the same stream family, offset sub-stream."""
    rng = derive_rng(ranges.seed, index, 1)
    lo, hi = ranges.interval("noise_snr_db")
    return float(rng.uniform(lo, hi))


def add_noise(signal: SampledSignal, snr_db: float, seed: int,
              stream: int = 0) -> SampledSignal:
    """Add white Gaussian noise at the given SNR relative to the signal RMS."""
    rms = float(np.sqrt(np.mean(signal.samples ** 2)))
    if rms == 0.0:
        return signal
    std = rms / (10.0 ** (snr_db / 20.0))
    rng = derive_rng(seed, stream, 2)
    noisy = signal.samples + rng.normal(0.0, std, signal.samples.size)
    meta = dict(signal.meta)
    meta["noise_snr_db"] = snr_db
    return SampledSignal(noisy, signal.sample_rate_hz, signal.unit, meta)
