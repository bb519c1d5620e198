"""Singular-spectrum decomposition of sampled signals.

The signal is embedded as a Hankel trajectory matrix, decomposed by SVD,
and the singular triples are grouped by the dominant DFT frequency of
their left singular vectors into configured (or automatically selected)
frequency bands.  Each group is reconstructed by rank-subset synthesis
followed by anti-diagonal averaging; whatever no group claims stays in the
residual, so components plus residual always rebuild the input exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import hankel

from ..signalio import SampledSignal

DEFAULT_ENERGY_FRACTION = 0.95
DEFAULT_MAX_COMPONENTS = 8
DEFAULT_AUTO_PEAKS = 3
# Auto bands fall back to this many DFT bins of half-width when a peak's
# half-power width cannot be measured.
AUTO_HALFWIDTH_BINS = 3


@dataclass(frozen=True)
class AutoBands:
    """Derive bands from the strongest peaks of the signal's own spectrum."""

    top_k: int = DEFAULT_AUTO_PEAKS
    delta_f_hz: float | None = None

    def __post_init__(self):
        if self.top_k < 1:
            raise ValueError(f"top_k must be >= 1, got {self.top_k}")
        if self.delta_f_hz is not None and self.delta_f_hz <= 0:
            raise ValueError(f"delta_f_hz must be > 0, got {self.delta_f_hz}")


@dataclass(frozen=True)
class SsaConfig:
    """Window length, target bands and grouping thresholds.

    ``window_len=None`` picks L = min(N/2, fs/min_half_width), which makes
    the narrowest configured band resolvable by the window's DFT.
    """

    window_len: int | None = None
    bands: tuple[tuple[float, float], ...] | AutoBands = AutoBands()
    energy_fraction: float = DEFAULT_ENERGY_FRACTION
    max_components_per_band: int = DEFAULT_MAX_COMPONENTS

    def __post_init__(self):
        if not 0.0 < self.energy_fraction <= 1.0:
            raise ValueError(f"energy_fraction must be in (0, 1], got {self.energy_fraction}")
        if self.max_components_per_band < 1:
            raise ValueError("max_components_per_band must be >= 1")
        if not isinstance(self.bands, AutoBands):
            bands = tuple((float(f), float(d)) for f, d in self.bands)
            for f_max, delta in bands:
                if delta <= 0:
                    raise ValueError(f"band half-width must be > 0, got {delta}")
                if f_max < 0:
                    raise ValueError(f"band center must be >= 0, got {f_max}")
            object.__setattr__(self, "bands", bands)


@dataclass(frozen=True)
class SsaComponent:
    indices: tuple[int, ...]
    singular_values: np.ndarray
    band_hz: tuple[float, float]
    dominant_freq_hz: float | None
    series: SampledSignal
    empty: bool = False


@dataclass(frozen=True)
class HankelDecomposition:
    components: tuple[SsaComponent, ...]
    residual: SampledSignal
    window_len: int


def hankel_embed(signal: SampledSignal | np.ndarray, window_len: int) -> np.ndarray:
    """L x (N-L+1) trajectory matrix with entry (i, j) = x[i + j]."""
    x = signal.samples if isinstance(signal, SampledSignal) else np.asarray(signal, float)
    n = x.size
    if not 2 <= window_len <= n - 1:
        raise ValueError(f"window_len must lie in [2, {n - 1}], got {window_len}")
    return hankel(x[:window_len], x[window_len - 1:])


def diagonal_average(mat: np.ndarray) -> np.ndarray:
    """Series of length L+K-1 whose entry s is the mean over anti-diagonal i+j=s."""
    mat = np.asarray(mat, dtype=np.float64)
    if mat.ndim != 2:
        raise ValueError(f"expected a matrix, got array of order {mat.ndim}")
    rows, cols = mat.shape
    diag_index = (np.arange(rows)[:, None] + np.arange(cols)[None, :]).ravel()
    sums = np.bincount(diag_index, weights=mat.ravel(), minlength=rows + cols - 1)
    counts = np.bincount(diag_index, minlength=rows + cols - 1)
    return sums / counts


def dominant_frequency_hz(vector: np.ndarray, sample_rate_hz: float) -> float:
    """Argmax bin of the magnitude DFT; ties resolve toward lower frequency."""
    mags = np.abs(np.fft.rfft(np.asarray(vector, float)))
    return float(np.fft.rfftfreq(len(vector), 1.0 / sample_rate_hz)[int(np.argmax(mags))])


def _auto_bands(signal: SampledSignal, spec: AutoBands) -> tuple[tuple[float, float], ...]:
    """Bands around the strongest local maxima of the signal's own DFT."""
    x = signal.samples - np.mean(signal.samples)
    mags = np.abs(np.fft.rfft(x))
    freqs = np.fft.rfftfreq(x.size, 1.0 / signal.sample_rate_hz)
    df = signal.sample_rate_hz / x.size
    interior = (mags[1:-1] > mags[:-2]) & (mags[1:-1] >= mags[2:])
    peak_bins = np.flatnonzero(interior) + 1
    if peak_bins.size == 0:
        return ((freqs[int(np.argmax(mags))], AUTO_HALFWIDTH_BINS * df),)
    order = peak_bins[np.argsort(mags[peak_bins])[::-1]]
    bands = []
    for b in order[: spec.top_k]:
        if spec.delta_f_hz is not None:
            half = spec.delta_f_hz
        else:
            # Half-width where the peak falls to half its height.
            half_height = mags[b] / 2.0
            left = b
            while left > 0 and mags[left] > half_height:
                left -= 1
            right = b
            while right < mags.size - 1 and mags[right] > half_height:
                right += 1
            half = max((right - left) / 2.0, AUTO_HALFWIDTH_BINS) * df
        bands.append((float(freqs[b]), float(half)))
    return tuple(bands)


def default_window_len(n_samples: int, sample_rate_hz: float,
                       min_half_width_hz: float) -> int:
    length = int(min(n_samples // 2, sample_rate_hz / min_half_width_hz))
    return max(2, min(length, n_samples - 1))


def ssa_decompose(signal: SampledSignal, config: SsaConfig | None = None) -> HankelDecomposition:
    """Band-grouped singular-spectrum decomposition.

    For each band, singular triples whose left vector's dominant frequency
    falls inside it are taken in descending singular-value order until
    ``energy_fraction`` of the in-band energy is covered (capped per band);
    each index is claimed by at most one band.
    """
    config = config or SsaConfig()
    x = signal.samples
    if isinstance(config.bands, AutoBands):
        bands = _auto_bands(signal, config.bands)
    else:
        bands = config.bands
    if config.window_len is not None:
        window = config.window_len
    else:
        window = default_window_len(x.size, signal.sample_rate_hz,
                                    min(d for _, d in bands))
    if x.size < 2 * window:
        raise ValueError(f"signal length {x.size} must be at least twice the window {window}")

    traj = hankel_embed(signal, window)
    u, sigma, vt = np.linalg.svd(traj, full_matrices=False)
    vec_freqs = np.array([dominant_frequency_hz(u[:, i], signal.sample_rate_hz)
                          for i in range(sigma.size)])
    # Numerical-rank floor keeps noise-level triples out of every band.
    rank_tol = (sigma[0] * max(traj.shape) * np.finfo(float).eps
                if sigma.size and sigma[0] > 0 else 0.0)

    claimed = np.zeros(sigma.size, dtype=bool)
    components = []
    for f_max, delta in bands:
        in_band = (~claimed & (vec_freqs >= f_max - delta) & (vec_freqs <= f_max + delta)
                   & (sigma > rank_tol))
        candidates = np.flatnonzero(in_band)  # already in descending-sigma order
        if candidates.size == 0:
            components.append(SsaComponent(
                indices=(), singular_values=np.empty(0),
                band_hz=(f_max - delta, f_max + delta), dominant_freq_hz=None,
                series=signal.with_samples(np.zeros_like(x), meta={}), empty=True))
            continue
        energy = sigma[candidates] ** 2
        target = config.energy_fraction * energy.sum()
        cum = np.cumsum(energy)
        keep = int(np.searchsorted(cum, target - 1e-12)) + 1
        keep = min(keep, config.max_components_per_band)
        chosen = candidates[:keep]
        claimed[chosen] = True
        group = (u[:, chosen] * sigma[chosen]) @ vt[chosen, :]
        series = diagonal_average(group)
        components.append(SsaComponent(
            indices=tuple(int(i) for i in chosen),
            singular_values=sigma[chosen].copy(),
            band_hz=(f_max - delta, f_max + delta),
            dominant_freq_hz=dominant_frequency_hz(series, signal.sample_rate_hz),
            series=signal.with_samples(series, meta={}),
        ))

    total = np.zeros_like(x)
    for comp in components:
        total = total + comp.series.samples
    residual = signal.with_samples(x - total, meta={})
    return HankelDecomposition(tuple(components), residual, window)


def denoise(signal: SampledSignal,
            config: SsaConfig | None = None) -> tuple[SampledSignal, SampledSignal]:
    """Keep the banded components, return (clean, residual)."""
    decomp = ssa_decompose(signal, config)
    clean = np.zeros_like(signal.samples)
    for comp in decomp.components:
        clean = clean + comp.series.samples
    meta = dict(signal.meta)
    meta["denoised"] = {
        "window_len": decomp.window_len,
        "bands_hz": [list(c.band_hz) for c in decomp.components],
        "n_components": [len(c.indices) for c in decomp.components],
    }
    return (SampledSignal(clean, signal.sample_rate_hz, signal.unit, meta),
            decomp.residual)
