"""Frequency-domain statistics, pinned by hand-computed weighted means."""

import numpy as np
import pytest

from sigtext.features import freq_features, spectrum
from sigtext.generators import MultiHarmonicParams, single_harmonic, synth_multi_harmonic
from sigtext.signalio import SampledSignal


def test_single_line_gravity_center(grid_1k):
    spec = spectrum(single_harmonic(2.0, 30.0, 0.0, grid_1k))
    ff = freq_features(spec)
    assert ff.gravity_center_freq_hz == pytest.approx(30.0, abs=1e-6)
    assert ff.freq_variance == pytest.approx(0.0, abs=1e-4)
    assert ff.energy == pytest.approx(4.0, rel=1e-6)


def test_two_equal_lines_centroid(grid_10k):
    grid = grid_10k
    a = single_harmonic(1.0, 100.0, 0.0, grid)
    b = single_harmonic(1.0, 300.0, 0.0, grid)
    spec = spectrum(a.with_samples(a.samples + b.samples))
    ff = freq_features(spec)
    assert ff.gravity_center_freq_hz == pytest.approx(200.0, abs=1e-6)
    # variance of equal weights at +-100 Hz around the centroid
    assert ff.freq_variance == pytest.approx(100.0 ** 2, rel=1e-6)


def test_reference_three_line_gravity_center(grid_10k):
    amps = (4.02, 0.689, 0.344)
    sig = synth_multi_harmonic(MultiHarmonicParams(100.0, amps), grid_10k)
    ff = freq_features(spectrum(sig))
    # hand-derived weighted mean of the three lines
    expected = (100 * 4.02 + 200 * 0.689 + 300 * 0.344) / sum(amps)
    assert expected == pytest.approx(127.25, abs=0.01)
    assert ff.gravity_center_freq_hz == pytest.approx(expected, abs=0.5)
    assert abs(ff.gravity_center_freq_hz - 127.2) <= 0.5


def test_zero_spectrum_markers():
    ff = freq_features(spectrum(SampledSignal(np.zeros(256), 1000.0)))
    assert ff.gravity_center_freq_hz is None
    assert ff.freq_variance is None
    assert ff.freq_std_dev is None
    assert ff.kurtosis is None
    assert ff.energy == 0.0
    assert ff.rms == 0.0


def test_frequency_std_consistency(grid_1k):
    spec = spectrum(single_harmonic(1.0, 100.0, 0.3, grid_1k))
    ff = freq_features(spec)
    assert ff.freq_std_dev == pytest.approx(np.sqrt(ff.freq_variance), rel=1e-12)
    assert ff.std_dev == pytest.approx(np.std(spec.amplitudes), rel=1e-12)
    assert ff.mean == pytest.approx(np.mean(spec.amplitudes), rel=1e-12)
