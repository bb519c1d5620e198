"""Standardized text rendering for each signal class.

Every description carries four sections in a fixed order: a qualitative
composition sentence, a quantitative time-domain sentence, a quantitative
frequency-domain enumeration, and a linking sentence that ties the
waveform shape to the spectral structure.  Numbers are formatted to
significant figures per quantity class, and every formatted number is
recorded in ``Description.values`` so rendered text can be re-checked
against the feature outputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .classify import SignalKind

SECTION_ORDER = ("composition", "time_quant", "freq_quant", "linking")

_ORDINAL_WORDS = ("first", "second", "third", "fourth", "fifth", "sixth",
                  "seventh", "eighth", "ninth", "tenth")


class MissingFeatureError(ValueError):
    """A template's required feature is absent from the bundle."""

    def __init__(self, feature: str, kind: SignalKind):
        self.feature = feature
        self.kind = kind
        super().__init__(f"template for {kind.value} requires feature '{feature}'")


@dataclass(frozen=True)
class Precision:
    """Significant figures per quantity class."""

    frequency: int = 4
    amplitude: int = 3
    period: int = 4
    phase: int = 3

    def __post_init__(self):
        for name in ("frequency", "amplitude", "period", "phase"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} precision must be >= 1")


@dataclass
class Description:
    """Rendered description plus the numbers that went into it."""

    kind: SignalKind
    sections: dict[str, str]
    rendered_text: str
    values: dict
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "rendered_text": self.rendered_text,
            "sections": dict(self.sections),
            "values": self.values,
        }


def fmt(value: float, sig_figs: int) -> str:
    """Positional significant-figure formatting; tiny values collapse to 0."""
    value = float(value)
    if abs(value) < 1e-12:
        return "0"
    return np.format_float_positional(value, precision=sig_figs, unique=False,
                                      fractional=False, trim="-")


def ordinal_word(n: int) -> str:
    if 1 <= n <= len(_ORDINAL_WORDS):
        return _ORDINAL_WORDS[n - 1]
    return ordinal_suffixed(n)


def ordinal_suffixed(n: int) -> str:
    if 10 <= n % 100 <= 20:
        suffix = "th"
    else:
        suffix = {1: "st", 2: "nd", 3: "rd"}.get(n % 10, "th")
    return f"{n}{suffix}"


class _Renderer:
    """Collects formatted numbers into the values dict as it writes text."""

    def __init__(self, precision: Precision, unit: str):
        self.p = precision
        self.unit = unit
        self.values: dict = {}

    def num(self, key: str, value: float, sig_figs: int) -> str:
        self.values[key] = float(value)
        return fmt(value, sig_figs)

    def freq(self, key: str, value: float) -> str:
        return self.num(key, value, self.p.frequency)

    def amp(self, key: str, value: float) -> str:
        return self.num(key, value, self.p.amplitude)

    def period(self, key: str, value: float) -> str:
        return self.num(key, value, self.p.period)

    def phase(self, key: str, value: float) -> str:
        return self.num(key, value, self.p.phase)

    def count(self, key: str, value: int) -> str:
        self.values[key] = int(value)
        return str(int(value))


def _require(value, feature: str, kind: SignalKind):
    if value is None:
        raise MissingFeatureError(feature, kind)
    return value


def render_description(kind: SignalKind, bundle, precision: Precision | None = None,
                       unit: str | None = None) -> Description:
    """Fill the template for ``kind`` from a computed feature bundle."""
    precision = precision or Precision()
    unit = unit or bundle.signal.unit
    r = _Renderer(precision, unit)
    kind = SignalKind(kind)
    if kind is SignalKind.SINGLE_HARMONIC:
        sections = _render_single(r, bundle)
    elif kind is SignalKind.MULTI_HARMONIC:
        sections = _render_multi(r, bundle)
    elif kind is SignalKind.RANDOM_HARMONIC:
        sections = _render_random(r, bundle)
    elif kind is SignalKind.COMPOSITE_HARMONIC:
        sections = _render_composite(r, bundle)
    elif kind is SignalKind.AMPLITUDE_MODULATED:
        sections = _render_am(r, bundle)
    else:
        sections = _render_fallback(r, bundle)
    rendered = "\n".join(sections[name] for name in SECTION_ORDER if sections[name])
    desc = Description(kind=kind, sections=sections, rendered_text=rendered,
                       values=r.values)
    _note_period_discrepancy(desc, bundle)
    return desc


def _note_period_discrepancy(desc: Description, bundle) -> None:
    spectral = desc.values.get("period_s")
    acf = bundle.wave.fundamental_period_s
    if spectral and acf and abs(acf - spectral) > 0.02 * spectral:
        desc.notes.append(
            f"autocorrelation period {acf:.6g} s deviates more than 2% from "
            f"the spectral period {spectral:.6g} s"
        )


def _render_single(r: _Renderer, bundle) -> dict[str, str]:
    harm = bundle.harmonics
    entry = _require(harm.entries[0] if harm.entries else None, "fundamental_hz",
                     SignalKind.SINGLE_HARMONIC)
    freq = r.freq("frequency_hz", entry.freq_hz)
    period = r.period("period_s", 1.0 / entry.freq_hz)
    time_amp = r.amp("time_amplitude", bundle.time.peak)
    spec_amp = r.amp("frequency_amplitude", entry.amplitude)
    phase = r.phase("phase_rad", entry.phase_rad)
    return {
        "composition": "This signal is a simple harmonic periodic signal.",
        "time_quant": (
            f"In the time-domain waveform of this signal, the period is {period} "
            f"seconds, the amplitude is {time_amp} {r.unit}, and the phase is "
            f"{phase} radians."
        ),
        "freq_quant": (
            f"In the spectrum of this signal, the frequency is {freq} Hz, the "
            f"amplitude of the frequency is {spec_amp} {r.unit}, and the phase "
            f"is {phase} radians."
        ),
        "linking": (
            "In the time-domain waveform of this signal, the waveform is a "
            "harmonic signal, so in the frequency spectrum, only a single "
            f"frequency of {freq} Hz can be observed."
        ),
    }


def _harmonic_clause(r: _Renderer, entry, key_prefix: str, with_phase: bool = True) -> str:
    if entry.order == 1:
        name = "the frequency of the fundamental (1st harmonic)"
    else:
        name = f"the frequency of the {ordinal_suffixed(entry.order)} harmonic"
    clause = (f"{name} is {r.freq(f'{key_prefix}_hz', entry.freq_hz)} Hz, "
              f"amplitude is {r.amp(f'{key_prefix}_amplitude', entry.amplitude)} {r.unit}")
    if with_phase:
        clause += f", phase is {r.phase(f'{key_prefix}_phase_rad', entry.phase_rad)} radians"
    return clause


def _render_multi(r: _Renderer, bundle) -> dict[str, str]:
    harm = bundle.harmonics
    _require(harm.fundamental_hz if harm.entries else None, "fundamental_hz",
             SignalKind.MULTI_HARMONIC)
    f0 = harm.entries[0].freq_hz if harm.entries[0].order == 1 else harm.fundamental_hz
    period = r.period("period_s", 1.0 / f0)
    time_amp = r.amp("time_amplitude", bundle.time.peak)
    clauses = [_harmonic_clause(r, e, f"harmonic_{e.order}") for e in bundle.harmonics.entries]
    f0_str = r.freq("fundamental_hz", f0)
    return {
        "composition": (
            "This signal is a multi-harmonic periodic signal, that is, a "
            "non-simple harmonic periodic signal."
        ),
        "time_quant": (
            f"In the time-domain waveform of this signal, the signal period is "
            f"{period} seconds, and the amplitude is {time_amp} {r.unit}."
        ),
        "freq_quant": "In the frequency spectrum of this signal, " + "; ".join(clauses) + ".",
        "linking": (
            "In the time-domain waveform of this signal, the waveform is "
            "distorted or asymmetric, that is, non-simple harmonic but periodic, "
            f"so in the frequency spectrum, harmonics of {f0_str} Hz can be observed."
        ),
    }


def _render_random(r: _Renderer, bundle) -> dict[str, str]:
    peaks = sorted(bundle.all_peaks, key=lambda p: p.freq_hz)
    if not peaks:
        raise MissingFeatureError("peaks", SignalKind.RANDOM_HARMONIC)
    clauses = []
    for i, peak in enumerate(peaks, start=1):
        clauses.append(
            f"the {ordinal_word(i)} frequency is {r.freq(f'component_{i}_hz', peak.freq_hz)} Hz, "
            f"amplitude is {r.amp(f'component_{i}_amplitude', peak.amplitude)} {r.unit}"
        )
    n = r.count("n_components", len(peaks))
    return {
        "composition": (
            "This signal is a random harmonic signal, that is, a signal obtained "
            "by superimposing multiple random harmonic signals."
        ),
        "time_quant": (
            "In the time-domain waveform of this signal, the waveform is more "
            "complex and may be periodic or non-periodic, which needs to be "
            "determined based on the relationships between the random frequencies."
        ),
        "freq_quant": "In the frequency spectrum of this signal, " + "; ".join(clauses) + ".",
        "linking": (
            f"This signal is a superposition of {n} random harmonic components, "
            f"so {n} random frequencies can be observed in the frequency spectrum."
        ),
    }


def _render_composite(r: _Renderer, bundle) -> dict[str, str]:
    res = bundle.spectrum.resolution_hz
    families = [fam for fam in bundle.families
                if sum(fam.is_member(p.freq_hz, res) for p in bundle.all_peaks) >= 2]
    if not families:
        raise MissingFeatureError("families", SignalKind.COMPOSITE_HARMONIC)
    leftovers = [p for p in sorted(bundle.all_peaks, key=lambda p: p.freq_hz)
                 if not any(fam.claims(p.freq_hz, res) for fam in families)]

    main = families[0]
    period = r.period("period_s", 1.0 / main.fundamental_hz)
    time_amp = r.amp("time_amplitude", bundle.time.peak)

    parts = ["In the frequency spectrum of this signal:"]
    for j, fam in enumerate(families, start=1):
        parts.append(f"For the {ordinal_word(j)} multi-harmonic signal:")
        for e in fam.entries:
            prefix = f"family_{j}_harmonic_{e.order}"
            if e.order == 1:
                parts.append(
                    f"- Fundamental frequency: {r.freq(f'{prefix}_hz', e.freq_hz)} Hz, "
                    f"amplitude: {r.amp(f'{prefix}_amplitude', e.amplitude)} {r.unit};"
                )
            else:
                parts.append(
                    f"- {ordinal_suffixed(e.order)} harmonic: {r.freq(f'{prefix}_hz', e.freq_hz)} Hz, "
                    f"amplitude: {r.amp(f'{prefix}_amplitude', e.amplitude)} {r.unit}, "
                    f"phase: {r.phase(f'{prefix}_phase_rad', e.phase_rad)} radians;"
                )
    if leftovers:
        parts.append("Random harmonic components:")
        for i, peak in enumerate(leftovers, start=1):
            parts.append(
                f"- {ordinal_suffixed(i)} frequency: {r.freq(f'random_{i}_hz', peak.freq_hz)} Hz, "
                f"amplitude: {r.amp(f'random_{i}_amplitude', peak.amplitude)} {r.unit};"
            )
    n_fam = r.count("n_families", len(families))
    n_rand = r.count("n_random", len(leftovers))
    return {
        "composition": (
            "This signal is a composite harmonic signal, obtained by "
            "superimposing multi-harmonic signals and random harmonic signals."
        ),
        "time_quant": (
            f"In the time-domain waveform of this signal, the primary signal "
            f"period is {period} seconds, and the amplitude is {time_amp} {r.unit}."
        ),
        "freq_quant": "\n".join(parts),
        "linking": (
            f"This signal is a superposition of {n_fam} multi-harmonic signals "
            f"and {n_rand} random harmonic components, so multiple fundamental "
            "harmonics and random frequencies can be observed in the frequency "
            "spectrum."
        ),
    }


def _render_am(r: _Renderer, bundle) -> dict[str, str]:
    pattern = _require(bundle.sidebands[0] if bundle.sidebands else None,
                       "sidebands", SignalKind.AMPLITUDE_MODULATED)
    carrier_period = r.period("carrier_period_s", 1.0 / pattern.carrier_hz)
    am_period = r.period("am_period_s", 1.0 / pattern.spacing_hz)
    carrier = r.freq("carrier_hz", pattern.carrier_hz)
    carrier_amp = r.amp("carrier_amplitude", pattern.carrier_amplitude)
    spacing = r.freq("modulation_hz", pattern.spacing_hz)
    multi_block = len(pattern.blocks) > 1
    carrier_clause = ("a non-simple harmonic periodic signal" if multi_block
                      else "a simple harmonic signal")

    parts = [
        "In the frequency spectrum of this signal:",
        f"- Carrier fundamental frequency: {carrier} Hz, amplitude: {carrier_amp} {r.unit};",
        f"- Modulation frequency: {spacing} Hz;",
    ]
    for block in pattern.blocks:
        if block.order == 1:
            parts.append(
                f"- Sidebands appear on both sides of the carrier frequency "
                f"{carrier} Hz at intervals of {spacing} Hz."
            )
            prefix = "carrier"
        else:
            center = r.freq(f"carrier_harmonic_{block.order}_hz", block.center_hz)
            parts.append(
                f"- Sidebands also appear around the {ordinal_word(block.order)} "
                f"harmonic of the carrier at {center} Hz at intervals of {spacing} Hz."
            )
            prefix = f"carrier_harmonic_{block.order}"
        left = ", ".join(r.amp(f"{prefix}_left_{m}", a)
                         for m, a in enumerate(block.left, start=1))
        right = ", ".join(r.amp(f"{prefix}_right_{m}", a)
                          for m, a in enumerate(block.right, start=1))
        parts.append(f"  - Left sideband amplitudes (first five): {left} {r.unit};")
        parts.append(f"  - Right sideband amplitudes (first five): {right} {r.unit};")

    if multi_block:
        linking = (
            "The carrier waveform in the time domain is distorted and "
            "asymmetric, indicating a non-simple harmonic signal; therefore, "
            f"harmonics at {carrier} Hz and sidebands at intervals of {spacing} Hz "
            "are visible in the spectrum."
        )
    else:
        linking = (
            "The periodic amplitude variation of the time-domain envelope "
            f"indicates amplitude modulation; therefore, sidebands at intervals "
            f"of {spacing} Hz appear around the carrier at {carrier} Hz in the "
            "spectrum."
        )
    return {
        "composition": (
            f"This signal is an amplitude-modulated signal, where the carrier is "
            f"{carrier_clause}, and the modulating wave is a simple harmonic signal."
        ),
        "time_quant": (
            f"In the time-domain waveform of this signal, the carrier period is "
            f"{carrier_period} seconds, and the amplitude modulation period is "
            f"{am_period} seconds."
        ),
        "freq_quant": "\n".join(parts),
        "linking": linking,
    }


def _render_fallback(r: _Renderer, bundle) -> dict[str, str]:
    peaks = sorted(bundle.all_peaks, key=lambda p: -p.amplitude)
    if not peaks:
        return {
            "composition": "This signal has no significant spectral content.",
            "time_quant": (
                f"In the time-domain waveform of this signal, the RMS value is "
                f"{r.amp('rms', bundle.time.rms)} {r.unit} and the peak value is "
                f"{r.amp('peak', bundle.time.peak)} {r.unit}."
            ),
            "freq_quant": (
                "In the frequency spectrum of this signal, no line rises above "
                "the significance floor."
            ),
            "linking": (
                "Without significant spectral lines, the signal cannot be "
                "assigned to a standard class."
            ),
        }
    clauses = [
        f"{r.freq(f'peak_{i}_hz', p.freq_hz)} Hz at "
        f"{r.amp(f'peak_{i}_amplitude', p.amplitude)} {r.unit}"
        for i, p in enumerate(peaks, start=1)
    ]
    return {
        "composition": "This signal does not match a standard signal class.",
        "time_quant": (
            f"In the time-domain waveform of this signal, the RMS value is "
            f"{r.amp('rms', bundle.time.rms)} {r.unit} and the peak value is "
            f"{r.amp('peak', bundle.time.peak)} {r.unit}."
        ),
        "freq_quant": ("In the frequency spectrum of this signal, the most "
                       "significant lines are: " + "; ".join(clauses) + "."),
        "linking": ("No single template structure explains the spectrum; the "
                    "listed lines summarize its content."),
    }
