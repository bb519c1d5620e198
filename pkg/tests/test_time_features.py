"""Time-domain statistics against analytic values and moment integration."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sigtext.features import time_features, wave_features
from sigtext.generators import BearingParams, single_harmonic, synth_bearing
from sigtext.signalio import SampledSignal, SampleGrid

# fs = 40 samples/period puts samples exactly on the sine extrema
SINE_GRID = SampleGrid(1200.0, 1200)


def sine_moment_oracle():
    """Kurtosis of a sine by dense numerical moment integration."""
    t = np.linspace(0.0, 1.0, 2_000_001)
    x = np.sin(2 * np.pi * 5.0 * t)  # exactly 5 periods
    m2 = np.trapezoid(x ** 2, t)
    m4 = np.trapezoid(x ** 4, t)
    return m4 / m2 ** 2


def test_sine_statistics():
    sig = single_harmonic(4.0, 30.0, 0.0, SINE_GRID)
    tf = time_features(sig)
    assert tf.rms == pytest.approx(4.0 / np.sqrt(2.0), abs=1e-3)
    assert tf.peak_to_peak == 8.0
    assert tf.peak == 4.0
    assert tf.mean == pytest.approx(0.0, abs=1e-12)
    assert tf.kurtosis == pytest.approx(sine_moment_oracle(), abs=0.01)
    assert tf.kurtosis == pytest.approx(1.5, abs=0.01)
    assert tf.linear_kurtosis == pytest.approx(-1.5, abs=0.01)
    assert tf.skewness == pytest.approx(0.0, abs=1e-9)
    assert tf.variance == pytest.approx(8.0, abs=1e-9)


def test_constant_signal_degenerate_markers():
    tf = time_features(SampledSignal(np.full(100, 3.0), 100.0))
    assert tf.rms == pytest.approx(3.0)
    assert tf.mean == pytest.approx(3.0)
    assert tf.variance == 0.0
    assert tf.kurtosis is None
    assert tf.skewness is None
    assert tf.margin == pytest.approx(1.0)
    assert tf.waveform_indicator == pytest.approx(1.0)


def test_zero_signal_markers_not_errors():
    tf = time_features(SampledSignal(np.zeros(100), 100.0))
    assert tf.rms == 0.0
    assert tf.margin is None
    assert tf.waveform_indicator is None


def test_shape_factor_ordering(rng):
    for _ in range(20):
        x = rng.normal(size=500) * rng.uniform(0.1, 10.0)
        tf = time_features(SampledSignal(x, 1000.0))
        assert tf.margin >= tf.waveform_indicator >= 1.0
        assert tf.rms ** 2 >= tf.mean ** 2 - 1e-12


@settings(max_examples=40, deadline=None)
@given(scale=st.floats(1e-3, 1e3), seed=st.integers(0, 2**31))
def test_scaling_equivariance(scale, seed):
    x = np.random.default_rng(seed).normal(size=256)
    base = time_features(SampledSignal(x, 1000.0))
    scaled = time_features(SampledSignal(scale * x, 1000.0))
    rel = 1e-9
    assert scaled.rms == pytest.approx(scale * base.rms, rel=rel)
    assert scaled.mean == pytest.approx(scale * base.mean, rel=rel, abs=1e-12)
    assert scaled.min == pytest.approx(scale * base.min, rel=rel)
    assert scaled.max == pytest.approx(scale * base.max, rel=rel)
    assert scaled.peak == pytest.approx(scale * base.peak, rel=rel)
    assert scaled.peak_to_peak == pytest.approx(scale * base.peak_to_peak, rel=rel)
    assert scaled.absolute_mean == pytest.approx(scale * base.absolute_mean, rel=rel)
    assert scaled.root_square_amplitude == pytest.approx(
        scale * base.root_square_amplitude, rel=rel)
    assert scaled.variance == pytest.approx(scale ** 2 * base.variance, rel=rel)
    assert scaled.kurtosis == pytest.approx(base.kurtosis, rel=rel)
    assert scaled.skewness == pytest.approx(base.skewness, rel=rel, abs=1e-9)
    assert scaled.margin == pytest.approx(base.margin, rel=rel)
    assert scaled.waveform_indicator == pytest.approx(base.waveform_indicator, rel=rel)


def test_wave_fundamental_period(grid_1k):
    sig = single_harmonic(4.0, 30.0, 0.0, grid_1k)
    wf = wave_features(sig)
    assert wf.fundamental_period_s == pytest.approx(1.0 / 30.0, abs=1.0 / 1000.0)


def test_wave_features_min_length():
    with pytest.raises(ValueError, match="at least 64"):
        wave_features(SampledSignal(np.zeros(32), 100.0))


def test_bearing_shock_detection():
    grid = SampleGrid(20000.0, 20000)
    sig = synth_bearing(BearingParams(1.0, 2000.0, 100.0, 400.0), grid)
    wf = wave_features(sig)
    assert wf.periodic_shock
    assert wf.shock_strength > 0.5
    assert wf.am_period_s == pytest.approx(0.01, rel=0.1)


def test_white_noise_no_shock(rng):
    sig = SampledSignal(rng.normal(size=4096), 10000.0)
    wf = wave_features(sig)
    assert not wf.periodic_shock


def test_pure_tone_no_shock(grid_1k):
    wf = wave_features(single_harmonic(2.0, 50.0, 0.0, grid_1k))
    assert not wf.periodic_shock
    assert wf.shock_strength == 0.0
