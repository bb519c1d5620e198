"""Composite signal functions, checked against a direct DFT oracle."""

import numpy as np
import pytest

from sigtext.generators import (AliasingError, AmplitudeModulatedParams,
                                CompositeParams, FunctionKind, HarmonicParams,
                                MultiHarmonicParams, RandomHarmonicsParams,
                                eval_unit, synth_amplitude_modulated,
                                synth_composite, synth_function,
                                synth_multi_harmonic, synth_random_harmonics)
from sigtext.signalio import SampleGrid


def dft_amplitude(x: np.ndarray, fs: float, freq: float) -> float:
    """Single-bin amplitude by direct correlation with the complex exponential."""
    n = x.size
    t = np.arange(n) / fs
    coeff = np.sum(x * np.exp(-2j * np.pi * freq * t)) / n
    return 2.0 * abs(coeff)


def test_single_term_reduces_to_unit(grid_10k):
    multi = synth_multi_harmonic(MultiHarmonicParams(100.0, (4.0,), (0.3,)), grid_10k)
    unit = eval_unit(HarmonicParams(4.0, 100.0, 0.3), grid_10k)
    assert np.max(np.abs(multi.samples - unit.samples)) < 1e-12


def test_multi_harmonic_line_amplitudes(grid_10k):
    params = MultiHarmonicParams(100.0, (4.02, 0.689, 0.344))
    sig = synth_multi_harmonic(params, grid_10k)
    for freq, amp in [(100.0, 4.02), (200.0, 0.689), (300.0, 0.344)]:
        assert dft_amplitude(sig.samples, 10000.0, freq) == pytest.approx(amp, rel=0.005)
    assert dft_amplitude(sig.samples, 10000.0, 400.0) < 0.005 * 4.02


def test_multi_harmonic_nyquist_guard():
    with pytest.raises(AliasingError):
        synth_multi_harmonic(MultiHarmonicParams(300.0, (1.0,) * 20),
                             SampleGrid(1000.0, 1000))


def test_random_harmonics_lines(grid_10k):
    params = RandomHarmonicsParams((137.0, 411.0), (2.0, 1.0), (0.2, 1.4))
    sig = synth_random_harmonics(params, grid_10k)
    assert dft_amplitude(sig.samples, 10000.0, 137.0) == pytest.approx(2.0, rel=1e-6)
    assert dft_amplitude(sig.samples, 10000.0, 411.0) == pytest.approx(1.0, rel=1e-6)
    assert "warnings" not in sig.meta


def test_random_harmonics_duplicate_warning(grid_10k):
    params = RandomHarmonicsParams((150.0, 150.5), (1.0, 1.0))
    sig = synth_random_harmonics(params, grid_10k)
    assert any("within one bin" in w for w in sig.meta["warnings"])
    # merging is not performed: both contributions present
    assert dft_amplitude(sig.samples, 10000.0, 150.25) > 1.0


def test_composite_contains_both_families(grid_10k):
    params = CompositeParams(
        MultiHarmonicParams(100.0, (4.02, 0.689, 0.344)),
        RandomHarmonicsParams((137.0,), (1.5,)),
    )
    sig = synth_composite(params, grid_10k)
    assert dft_amplitude(sig.samples, 10000.0, 100.0) == pytest.approx(4.02, rel=0.005)
    assert dft_amplitude(sig.samples, 10000.0, 300.0) == pytest.approx(0.344, rel=0.005)
    assert dft_amplitude(sig.samples, 10000.0, 137.0) == pytest.approx(1.5, rel=0.005)


def test_synth_function_dispatch(grid_10k):
    params = MultiHarmonicParams(100.0, (1.0,))
    a = synth_function(FunctionKind.MULTI_HARMONIC, params, grid_10k)
    b = synth_multi_harmonic(params, grid_10k)
    assert np.array_equal(a.samples, b.samples)
    with pytest.raises(ValueError):
        synth_function("no_such_kind", params, grid_10k)


def test_am_sideband_identity(grid_10k):
    # [1 + d cos(2 pi fm t)] sin(2 pi fc t) has sidebands of amplitude A*d/2
    params = AmplitudeModulatedParams(1000.0, 2.0, 25.0, (0.5,))
    sig = synth_amplitude_modulated(params, grid_10k)
    assert dft_amplitude(sig.samples, 10000.0, 1000.0) == pytest.approx(2.0, rel=1e-6)
    assert dft_amplitude(sig.samples, 10000.0, 975.0) == pytest.approx(0.5, rel=1e-6)
    assert dft_amplitude(sig.samples, 10000.0, 1025.0) == pytest.approx(0.5, rel=1e-6)


def test_am_validation():
    with pytest.raises(ValueError, match="below the carrier"):
        AmplitudeModulatedParams(100.0, 1.0, 100.0, (0.5,))
    with pytest.raises(ValueError):
        MultiHarmonicParams(100.0, ())
    with pytest.raises(ValueError):
        RandomHarmonicsParams((), ())
