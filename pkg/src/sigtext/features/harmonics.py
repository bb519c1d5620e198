"""Spectrum structure: harmonic families, sidebands and top peaks.

Harmonic matching uses a relative tolerance of the fundamental (never
tighter than one DFT bin).  Sideband search scans candidate spacings taken
from the distances between a carrier and its significant neighbours and
keeps the spacing that matches the most symmetric left/right pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .spectral import (Spectrum, interpolate_peak_freq,
                       significant_peak_bins)

DEFAULT_N1 = 10          # harmonic orders enumerated per family
DEFAULT_N2 = 5           # top peaks reported
SIDEBAND_PAIRS = 5       # sideband orders per side
CARRIER_BLOCKS = 3       # carrier harmonics scanned for sideband blocks
HARMONIC_TOL_REL = 0.02
SUBHARMONIC_RATIOS = (0.5, 1.5, 2.5)


@dataclass(frozen=True)
class Peak:
    freq_hz: float
    amplitude: float


@dataclass(frozen=True)
class PeakList:
    peaks: tuple[Peak, ...]

    def __len__(self) -> int:
        return len(self.peaks)

    def __iter__(self):
        return iter(self.peaks)


@dataclass(frozen=True)
class HarmonicEntry:
    order: int
    freq_hz: float
    amplitude: float
    phase_rad: float


@dataclass(frozen=True)
class Subharmonic:
    ratio: float
    freq_hz: float
    amplitude: float


@dataclass(frozen=True)
class HarmonicSeries:
    fundamental_hz: float | None
    entries: tuple[HarmonicEntry, ...]
    subharmonics: tuple[Subharmonic, ...] = ()

    def tolerance_hz(self, resolution_hz: float) -> float:
        if self.fundamental_hz is None:
            return resolution_hz
        return max(HARMONIC_TOL_REL * self.fundamental_hz, resolution_hz)

    def is_member(self, freq_hz: float, resolution_hz: float) -> bool:
        """Does a line at freq_hz sit on an integer order of this family?"""
        if self.fundamental_hz is None:
            return False
        tol = self.tolerance_hz(resolution_hz)
        nearest = round(freq_hz / self.fundamental_hz)
        return nearest >= 1 and abs(freq_hz - nearest * self.fundamental_hz) <= tol

    def claims(self, freq_hz: float, resolution_hz: float) -> bool:
        """Integer-order membership or one of the recorded subharmonics."""
        if self.is_member(freq_hz, resolution_hz):
            return True
        tol = self.tolerance_hz(resolution_hz)
        return any(abs(freq_hz - sub.freq_hz) <= tol for sub in self.subharmonics)


@dataclass(frozen=True)
class CarrierBlock:
    order: int
    center_hz: float
    center_amplitude: float
    left: tuple[float, ...]
    right: tuple[float, ...]
    n_pairs: int


@dataclass(frozen=True)
class SidebandPattern:
    carrier_hz: float
    carrier_amplitude: float
    spacing_hz: float
    blocks: tuple[CarrierBlock, ...]

    @property
    def max_pairs(self) -> int:
        return max(b.n_pairs for b in self.blocks)


def _peak_table(spec: Spectrum) -> list[tuple[int, float, float]]:
    """(bin, freq, amplitude) for every significant peak."""
    return [(int(b), float(spec.freqs_hz[b]), float(spec.amplitudes[b]))
            for b in significant_peak_bins(spec)]


def top_peaks(spec: Spectrum, n: int = DEFAULT_N2) -> PeakList:
    """The n strongest significant peaks, ties broken toward lower frequency."""
    table = _peak_table(spec)
    table.sort(key=lambda row: (-row[2], row[1]))
    peaks = tuple(Peak(interpolate_peak_freq(spec, b), amp) for b, _, amp in table[:n])
    return PeakList(peaks)


def _match_peak(table, target_hz: float, tol_hz: float):
    """Closest significant peak within tol of the target, or None."""
    best = None
    for row in table:
        gap = abs(row[1] - target_hz)
        if gap <= tol_hz and (best is None or gap < best[0]):
            best = (gap, row)
    return None if best is None else best[1]


def _family_from(f0: float, table, spec: Spectrum, n1: int) -> HarmonicSeries:
    tol = max(HARMONIC_TOL_REL * f0, spec.resolution_hz)
    entries = []
    for k in range(1, n1 + 1):
        hit = _match_peak(table, k * f0, tol)
        if hit is not None:
            b, freq, amp = hit
            entries.append(HarmonicEntry(k, interpolate_peak_freq(spec, b), amp,
                                         float(spec.phases_rad[b])))
    taken = {round(e.freq_hz / f0) for e in entries}
    subs = []
    for ratio in SUBHARMONIC_RATIOS:
        if ratio in taken:
            continue
        hit = _match_peak(table, ratio * f0, tol)
        if hit is not None:
            b, freq, amp = hit
            subs.append(Subharmonic(ratio, interpolate_peak_freq(spec, b), amp))
    return HarmonicSeries(f0, tuple(entries), tuple(subs))


def _family_score(f0: float, table, resolution_hz: float, nyquist_hz: float) -> float:
    """Total amplitude collected by the family rooted at f0."""
    tol = max(HARMONIC_TOL_REL * f0, resolution_hz)
    k_max = int(nyquist_hz / f0)
    score = 0.0
    for _, freq, amp in table:
        k = round(freq / f0)
        if 1 <= k <= k_max and abs(freq - k * f0) <= tol:
            score += amp
    return score


def detect_harmonics(spec: Spectrum, f0_hint: float | None = None,
                     n1: int = DEFAULT_N1) -> HarmonicSeries:
    """Harmonic family rooted at the hint, or at the best-scoring peak.

    Without a hint, every significant peak is tried as a fundamental and
    the one collecting the largest summed family amplitude wins; exact ties
    go to the lowest frequency.
    """
    table = _peak_table(spec)
    if not table:
        return HarmonicSeries(None, ())
    if f0_hint is not None:
        hit = _match_peak(table, f0_hint,
                          max(HARMONIC_TOL_REL * f0_hint, spec.resolution_hz))
        f0 = hit[1] if hit is not None else float(f0_hint)
        return _family_from(f0, table, spec, n1)
    best_f0 = None
    best_score = -1.0
    for _, freq, _ in sorted(table, key=lambda row: row[1]):
        score = _family_score(freq, table, spec.resolution_hz, spec.nyquist_hz)
        if score > best_score + 1e-12 * max(best_score, 1.0):
            best_score = score
            best_f0 = freq
    return _family_from(best_f0, table, spec, n1)


def harmonic_families(spec: Spectrum, max_families: int = 4,
                      n1: int = DEFAULT_N1) -> list[HarmonicSeries]:
    """Iteratively peel harmonic families off the significant-peak set.

    Families are returned in detection order (best-scoring first); peaks
    claimed by one family are excluded from the next search.  Leftover
    isolated lines come back as single-entry series.
    """
    table = _peak_table(spec)
    families: list[HarmonicSeries] = []
    while table and len(families) < max_families:
        sub_spec = spec
        best_f0, best_score = None, -1.0
        for _, freq, _ in sorted(table, key=lambda row: row[1]):
            score = _family_score(freq, table, spec.resolution_hz, spec.nyquist_hz)
            if score > best_score + 1e-12 * max(best_score, 1.0):
                best_score, best_f0 = score, freq
        family = _family_from(best_f0, table, sub_spec, n1)
        families.append(family)
        table = [row for row in table
                 if not family.claims(row[1], spec.resolution_hz)]
    return families


def _dedupe_spacings(cands: list[float], resolution_hz: float) -> list[float]:
    out: list[float] = []
    for d in sorted(cands):
        if not out or d - out[-1] > resolution_hz:
            out.append(d)
    return out


def _block_for(table, center_hz: float, center_amp: float, order: int,
               spacing: float, tol: float) -> CarrierBlock:
    left, right = [], []
    pairs = 0
    for m in range(1, SIDEBAND_PAIRS + 1):
        lo = _match_peak(table, center_hz - m * spacing, tol)
        hi = _match_peak(table, center_hz + m * spacing, tol)
        left.append(lo[2] if lo is not None else 0.0)
        right.append(hi[2] if hi is not None else 0.0)
        if lo is not None and hi is not None:
            pairs += 1
    return CarrierBlock(order, center_hz, center_amp, tuple(left), tuple(right), pairs)


def detect_sidebands(spec: Spectrum,
                     carrier_hint: float | None = None) -> list[SidebandPattern]:
    """Symmetric sideband patterns around dominant carriers.

    Every dominant peak is tried as a carrier; a candidate pattern needs at
    least one fully matched left/right pair at its winning spacing.  The
    candidates are then ranked by matched pairs (strength as tie-break) and
    a pattern whose carrier sits on a better pattern's sideband grid is
    dropped as redundant.
    """
    table = _peak_table(spec)
    if len(table) < 3:
        return []
    tol = 1.5 * spec.resolution_hz
    if carrier_hint is not None:
        hit = _match_peak(table, carrier_hint, max(tol, HARMONIC_TOL_REL * carrier_hint))
        carriers = [hit] if hit is not None else []
    else:
        carriers = sorted(table, key=lambda row: (-row[2], row[1]))[:DEFAULT_N2]
    candidates: list[SidebandPattern] = []
    for _, c_freq, c_amp in carriers:
        cands = [abs(freq - c_freq) for _, freq, _ in table
                 if 2.0 * spec.resolution_hz <= abs(freq - c_freq) < c_freq]
        best = None
        for d in _dedupe_spacings(cands, spec.resolution_hz):
            block = _block_for(table, c_freq, c_amp, 1, d, tol)
            if best is None or block.n_pairs > best[1].n_pairs:
                best = (d, block)
        if best is None or best[1].n_pairs < 1:
            continue
        spacing = _refine_spacing(table, c_freq, best[0], tol)
        blocks = [_block_for(table, c_freq, c_amp, 1, spacing, tol)]
        for order in range(2, CARRIER_BLOCKS + 1):
            hit = _match_peak(table, order * c_freq, max(tol, HARMONIC_TOL_REL * c_freq))
            if hit is not None:
                blocks.append(_block_for(table, hit[1], hit[2], order, spacing, tol))
        candidates.append(SidebandPattern(c_freq, c_amp, spacing, tuple(blocks)))
    candidates.sort(key=lambda p: (-p.max_pairs, -p.carrier_amplitude))
    patterns: list[SidebandPattern] = []
    for cand in candidates:
        if not any(_on_pattern(kept, cand.carrier_hz, tol) for kept in patterns):
            patterns.append(cand)
    return patterns


def _on_pattern(pattern: SidebandPattern, freq: float, tol: float) -> bool:
    for block in pattern.blocks:
        for m in range(1, SIDEBAND_PAIRS + 1):
            if (abs(freq - (block.center_hz - m * pattern.spacing_hz)) <= tol
                    or abs(freq - (block.center_hz + m * pattern.spacing_hz)) <= tol):
                return True
    return False


def _refine_spacing(table, carrier_hz: float, spacing: float, tol: float) -> float:
    """Average the measured left/right gaps over all matched pairs."""
    gaps = []
    for m in range(1, SIDEBAND_PAIRS + 1):
        lo = _match_peak(table, carrier_hz - m * spacing, tol)
        hi = _match_peak(table, carrier_hz + m * spacing, tol)
        if lo is not None and hi is not None:
            gaps.append((hi[1] - lo[1]) / (2.0 * m))
    return float(np.mean(gaps)) if gaps else spacing


def spacing_line_amplitude(spec: Spectrum, spacing_hz: float) -> float:
    """Amplitude of the significant line at the spacing frequency (0 if none).

    Distinguishes a true modulation cluster (no energy at the modulation
    frequency) from a plain harmonic train, whose 'spacing' is just the
    fundamental and therefore appears as a strong line of its own.
    """
    table = _peak_table(spec)
    tol = max(1.5 * spec.resolution_hz, HARMONIC_TOL_REL * spacing_hz)
    hit = _match_peak(table, spacing_hz, tol)
    return 0.0 if hit is None else hit[2]


def spacing_line_present(spec: Spectrum, spacing_hz: float) -> bool:
    return spacing_line_amplitude(spec, spacing_hz) > 0.0
