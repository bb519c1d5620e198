"""Template-class decision for a signal's spectral structure.

Order of tests: a single line is a simple harmonic; a sideband cluster of
at least two symmetric pairs whose spacing frequency has no line of its
own is amplitude modulation (a plain harmonic train always carries a line
at its own spacing, which is what separates the two); one family covering
every line is multi-harmonic; no family at all is a random superposition;
a family plus leftovers is composite.
"""

from __future__ import annotations

from enum import Enum

from ..features import (HarmonicSeries, PeakList, SidebandPattern, Spectrum,
                        harmonic_families, spacing_line_amplitude)

AM_MIN_PAIRS = 2
# A line at the spacing frequency this strong (relative to the carrier)
# marks the cluster as a plain harmonic train rather than modulation.
SPACING_LINE_REL = 0.2


class SignalKind(str, Enum):
    SINGLE_HARMONIC = "single_harmonic"
    MULTI_HARMONIC = "multi_harmonic"
    RANDOM_HARMONIC = "random_harmonic"
    COMPOSITE_HARMONIC = "composite_harmonic"
    AMPLITUDE_MODULATED = "amplitude_modulated"
    UNKNOWN = "unknown"

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    SignalKind.SINGLE_HARMONIC: "simple harmonic periodic signal",
    SignalKind.MULTI_HARMONIC: "multi-harmonic periodic signal",
    SignalKind.RANDOM_HARMONIC: "random harmonic signal",
    SignalKind.COMPOSITE_HARMONIC: "composite harmonic signal",
    SignalKind.AMPLITUDE_MODULATED: "amplitude-modulated signal",
    SignalKind.UNKNOWN: "unclassified signal",
}


def classify(spec: Spectrum, harm: HarmonicSeries,
             side: list[SidebandPattern], peaks: PeakList,
             families: list[HarmonicSeries] | None = None) -> SignalKind:
    """Assign one template class from features of the same signal."""
    if len(peaks) == 0:
        return SignalKind.UNKNOWN
    if len(peaks) == 1:
        return SignalKind.SINGLE_HARMONIC
    for pattern in side:
        if (pattern.max_pairs >= AM_MIN_PAIRS
                and spacing_line_amplitude(spec, pattern.spacing_hz)
                < SPACING_LINE_REL * pattern.carrier_amplitude):
            return SignalKind.AMPLITUDE_MODULATED
    if families is None:
        families = harmonic_families(spec)
    res = spec.resolution_hz
    rich = [fam for fam in families
            if sum(fam.is_member(p.freq_hz, res) for p in peaks) >= 2]
    if not rich:
        return SignalKind.RANDOM_HARMONIC
    main = rich[0]
    if all(main.claims(p.freq_hz, res) for p in peaks):
        return SignalKind.MULTI_HARMONIC
    return SignalKind.COMPOSITE_HARMONIC
