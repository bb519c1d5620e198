"""Signal units against their closed forms."""

import math

import numpy as np
import pytest

from sigtext.generators import (AliasingError, HarmonicParams,
                                ImpulseDecayParams, MotherWavelet, NoiseKind,
                                RandomUnitParams, WaveletParams, eval_unit)
from sigtext.signalio import SampleGrid


def test_harmonic_closed_form(grid_1k):
    sig = eval_unit(HarmonicParams(4.0, 30.0, 0.5), grid_1k)
    expected = [4.0 * math.sin(2 * math.pi * 30.0 * i / 1000.0 + 0.5)
                for i in range(1000)]
    assert np.allclose(sig.samples, expected, rtol=0, atol=1e-12)


def test_harmonic_quarter_period_peak():
    # fs = 120 Hz puts sample 1 exactly at t = 1/120 s, the sine peak
    sig = eval_unit(HarmonicParams(4.0, 30.0, 0.0), SampleGrid(120.0, 8))
    assert sig.samples[1] == pytest.approx(4.0, abs=1e-12)


def test_harmonic_zero_amplitude(grid_1k):
    sig = eval_unit(HarmonicParams(0.0, 123.0, 1.0), grid_1k)
    assert np.all(sig.samples == 0.0)


def test_harmonic_nyquist_rejected(grid_1k):
    with pytest.raises(AliasingError, match="Nyquist"):
        eval_unit(HarmonicParams(1.0, 500.0, 0.0), grid_1k)
    eval_unit(HarmonicParams(1.0, 499.0, 0.0), grid_1k)  # just below is fine


def test_harmonic_param_validation():
    with pytest.raises(ValueError):
        HarmonicParams(-1.0, 30.0, 0.0)
    with pytest.raises(ValueError):
        HarmonicParams(1.0, 0.0, 0.0)
    with pytest.raises(ValueError, match="finite"):
        HarmonicParams(float("inf"), 30.0, 0.0)
    with pytest.raises(ValueError, match="finite"):
        HarmonicParams(1.0, 30.0, float("nan"))


def test_impulse_decay_closed_form(grid_1k):
    params = ImpulseDecayParams(2.0, 40.0, 0.3, decay_per_s=5.0)
    sig = eval_unit(params, grid_1k)
    t = grid_1k.times()
    expected = 2.0 * np.exp(-5.0 * t) * np.sin(2 * np.pi * 40.0 * t + 0.3)
    assert np.allclose(sig.samples, expected, atol=1e-12)
    with pytest.raises(ValueError):
        ImpulseDecayParams(1.0, 40.0, 0.0, decay_per_s=0.0)


def test_morlet_wavelet_shape(grid_1k):
    params = WaveletParams(scale=0.02, shift_s=0.5)
    sig = eval_unit(params, grid_1k)
    # peak value psi(0)/sqrt(a) at t = shift
    peak_idx = int(np.argmax(np.abs(sig.samples)))
    assert peak_idx == 500
    assert sig.samples[500] == pytest.approx(np.pi ** -0.25 / math.sqrt(0.02), rel=1e-9)


def test_mexican_hat_wavelet(grid_1k):
    params = WaveletParams(scale=0.01, shift_s=0.2, mother=MotherWavelet.MEXICAN_HAT)
    sig = eval_unit(params, grid_1k)
    expected_peak = 2.0 / (math.sqrt(3.0) * np.pi ** 0.25) / math.sqrt(0.01)
    assert sig.samples[200] == pytest.approx(expected_peak, rel=1e-9)
    # zero crossings of (1 - u^2) at u = +-1, i.e. t = shift +- scale
    assert sig.samples[190] == pytest.approx(0.0, abs=1e-9)
    assert sig.samples[210] == pytest.approx(0.0, abs=1e-9)


def test_wavelet_scale_validation():
    with pytest.raises(ValueError):
        WaveletParams(scale=0.0)


def test_random_unit_reproducible(grid_1k):
    a = eval_unit(RandomUnitParams(1.5, seed=42), grid_1k)
    b = eval_unit(RandomUnitParams(1.5, seed=42), grid_1k)
    c = eval_unit(RandomUnitParams(1.5, seed=43), grid_1k)
    assert np.array_equal(a.samples, b.samples)
    assert not np.array_equal(a.samples, c.samples)


def test_random_unit_std_scaling(grid_1k):
    sig = eval_unit(RandomUnitParams(2.0, seed=7), SampleGrid(1000.0, 50000))
    assert np.std(sig.samples) == pytest.approx(2.0, rel=0.02)


def test_band_limited_noise(grid_1k):
    params = RandomUnitParams(1.0, NoiseKind.BAND_LIMITED, band_hz=(100.0, 200.0), seed=3)
    sig = eval_unit(params, grid_1k)
    mags = np.abs(np.fft.rfft(sig.samples))
    freqs = np.fft.rfftfreq(len(sig), 1.0 / 1000.0)
    in_band = (freqs >= 100.0) & (freqs <= 200.0)
    assert np.sum(mags[~in_band] ** 2) <= 1e-20 * np.sum(mags[in_band] ** 2)
    assert np.sqrt(np.mean(sig.samples ** 2)) == pytest.approx(1.0, rel=1e-9)
    with pytest.raises(ValueError):
        RandomUnitParams(1.0, NoiseKind.BAND_LIMITED, band_hz=(200.0, 100.0))
    with pytest.raises(AliasingError):
        eval_unit(RandomUnitParams(1.0, NoiseKind.BAND_LIMITED,
                                   band_hz=(100.0, 600.0), seed=1), grid_1k)
