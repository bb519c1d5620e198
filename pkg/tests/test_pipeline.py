"""End-to-end describe pipeline: denoising, stage-tagged failures."""

import numpy as np
import pytest

from sigtext.decompose import SsaConfig
from sigtext.describe import DescribeConfig, PipelineError, SignalKind, describe
from sigtext.generators import add_noise, single_harmonic
from sigtext.signalio import SampledSignal, SampleGrid


def test_denoise_first_recovers_single_harmonic():
    grid = SampleGrid(1000.0, 2000)
    clean = single_harmonic(2.0, 50.0, 0.0, grid)
    noisy = add_noise(clean, 3.0, seed=77)
    config = DescribeConfig(denoise_first=True, ssa=SsaConfig(bands=((50.0, 5.0),)))
    desc = describe(noisy, config)
    assert desc.kind is SignalKind.SINGLE_HARMONIC
    assert desc.values["frequency_hz"] == pytest.approx(50.0, abs=grid.resolution_hz)


def test_describe_determinism(grid_1k):
    sig = single_harmonic(4.0, 30.0, 0.0, grid_1k)
    a = describe(sig)
    b = describe(sig)
    assert a.rendered_text == b.rendered_text
    assert a.values == b.values


def test_feature_stage_error_tagged():
    tiny = SampledSignal(np.zeros(8), 100.0)
    with pytest.raises(PipelineError, match="features"):
        describe(tiny)


def test_denoise_stage_error_tagged(grid_1k):
    sig = single_harmonic(1.0, 50.0, 0.0, grid_1k)
    bad = DescribeConfig(denoise_first=True, ssa=SsaConfig(window_len=999))
    with pytest.raises(PipelineError, match="denoise"):
        describe(sig, bad)


def test_period_discrepancy_noted(grid_10k):
    # spectral period wins; the autocorrelation cross-check lands in notes
    from sigtext.generators import MultiHarmonicParams, synth_multi_harmonic
    sig = synth_multi_harmonic(
        MultiHarmonicParams(100.0, (0.4, 4.0)), grid_10k)  # 2nd harmonic dominates
    desc = describe(sig)
    assert desc.kind is SignalKind.MULTI_HARMONIC
    # the rendered period is the spectral one
    assert desc.values["period_s"] == pytest.approx(0.01, rel=1e-6)
    # the autocorrelation locks to the strong 200 Hz component instead
    assert any("deviates" in note for note in desc.notes)


def test_no_discrepancy_note_for_clean_fixture(grid_1k):
    desc = describe(single_harmonic(4.0, 30.0, 0.0, grid_1k))
    assert not any("deviates" in note for note in desc.notes)
