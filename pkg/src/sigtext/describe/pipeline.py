"""End-to-end signal-to-text pipeline.

``describe(signal, config)`` optionally denoises, computes the full
feature bundle, classifies the spectral structure and renders the matching
template.  Failures carry the pipeline stage that raised them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..decompose import SsaConfig, denoise as ssa_denoise
from ..features import (FreqStatFeatures, HarmonicSeries, PeakList,
                        SidebandPattern, Spectrum, TimeFeatures, WaveFeatures,
                        detect_harmonics, detect_sidebands, freq_features,
                        harmonic_families, spectrum, time_features, top_peaks,
                        wave_features)
from ..signalio import SampledSignal
from .classify import classify
from .templates import Description, Precision, render_description

# Peaks examined for classification and enumeration (not the report's N2).
CLASSIFY_PEAK_LIMIT = 40


class PipelineError(RuntimeError):
    """Failure tagged with the stage of the signal-to-text pipeline."""

    def __init__(self, stage: str, cause: Exception):
        self.stage = stage
        super().__init__(f"{stage}: {cause}")


@dataclass(frozen=True)
class DescribeConfig:
    denoise_first: bool = False
    ssa: SsaConfig = field(default_factory=SsaConfig)
    window: str = "rectangular"
    precision: Precision = field(default_factory=Precision)
    unit: str | None = None
    n1: int = 10
    n2: int = 5


@dataclass(frozen=True)
class FeatureBundle:
    """Everything the classifier and the templates consume, computed once."""

    signal: SampledSignal
    spectrum: Spectrum
    time: TimeFeatures
    freq: FreqStatFeatures
    wave: WaveFeatures
    harmonics: HarmonicSeries
    families: tuple[HarmonicSeries, ...]
    sidebands: tuple[SidebandPattern, ...]
    peaks: PeakList
    all_peaks: PeakList


def compute_features(signal: SampledSignal,
                     config: DescribeConfig | None = None) -> FeatureBundle:
    config = config or DescribeConfig()
    spec = spectrum(signal, config.window)
    return FeatureBundle(
        signal=signal,
        spectrum=spec,
        time=time_features(signal),
        freq=freq_features(spec),
        wave=wave_features(signal),
        harmonics=detect_harmonics(spec, n1=config.n1),
        families=tuple(harmonic_families(spec, n1=config.n1)),
        sidebands=tuple(detect_sidebands(spec)),
        peaks=top_peaks(spec, config.n2),
        all_peaks=top_peaks(spec, CLASSIFY_PEAK_LIMIT),
    )


def describe(signal: SampledSignal,
             config: DescribeConfig | None = None) -> Description:
    """Render the standardized description of a sampled signal."""
    config = config or DescribeConfig()
    if config.denoise_first:
        try:
            signal, _ = ssa_denoise(signal, config.ssa)
        except Exception as exc:
            raise PipelineError("denoise", exc) from exc
    try:
        bundle = compute_features(signal, config)
    except Exception as exc:
        raise PipelineError("features", exc) from exc
    try:
        kind = classify(bundle.spectrum, bundle.harmonics, list(bundle.sidebands),
                        bundle.all_peaks, families=list(bundle.families))
    except Exception as exc:
        raise PipelineError("classify", exc) from exc
    try:
        return render_description(kind, bundle, config.precision, config.unit)
    except Exception as exc:
        raise PipelineError("render", exc) from exc
