"""Template-class decisions for fixtures and randomized generator draws."""

import numpy as np
import pytest

from sigtext.describe import SignalKind, classify, compute_features, describe
from sigtext.generators import (AmplitudeModulatedParams, BearingParams,
                                CompositeParams, GearParams, GeneratorClass,
                                MultiHarmonicParams, RandomHarmonicsParams,
                                add_noise, default_ranges, sample_noise_snr_db,
                                sample_params, single_harmonic,
                                synth_amplitude_modulated, synth_bearing,
                                synth_composite, synth_gear,
                                synth_multi_harmonic, synth_random_harmonics,
                                synthesize)
from sigtext.qa import EXPECTED_KIND
from sigtext.signalio import SampledSignal, SampleGrid


def classify_signal(sig):
    bundle = compute_features(sig)
    return classify(bundle.spectrum, bundle.harmonics, list(bundle.sidebands),
                    bundle.all_peaks, families=list(bundle.families))


def test_single_line(grid_1k):
    assert classify_signal(single_harmonic(4.0, 30.0, 0.0, grid_1k)) \
        is SignalKind.SINGLE_HARMONIC


def test_reference_family_is_multi(grid_10k):
    sig = synth_multi_harmonic(MultiHarmonicParams(100.0, (4.02, 0.689, 0.344)), grid_10k)
    assert classify_signal(sig) is SignalKind.MULTI_HARMONIC


def test_symmetric_pairs_are_am(grid_10k):
    sig = synth_amplitude_modulated(
        AmplitudeModulatedParams(1000.0, 2.0, 25.0, (0.6, 0.3)), grid_10k)
    assert classify_signal(sig) is SignalKind.AMPLITUDE_MODULATED


def test_unrelated_lines_are_random(grid_10k):
    sig = synth_random_harmonics(
        RandomHarmonicsParams((137.0, 229.0, 349.0), (2.0, 1.5, 1.0)), grid_10k)
    assert classify_signal(sig) is SignalKind.RANDOM_HARMONIC


def test_family_plus_outsider_is_composite(grid_10k):
    sig = synth_composite(CompositeParams(
        MultiHarmonicParams(100.0, (4.0, 1.0, 0.7)),
        RandomHarmonicsParams((137.0, 411.0), (1.5, 1.2))), grid_10k)
    assert classify_signal(sig) is SignalKind.COMPOSITE_HARMONIC


def test_empty_spectrum_unknown():
    assert classify_signal(SampledSignal(np.zeros(256), 1000.0)) is SignalKind.UNKNOWN


def test_bearing_and_gear_read_as_modulation(grid_10k):
    bearing = synth_bearing(BearingParams(1.0, 2000.0, 100.0, 400.0),
                            SampleGrid(20000.0, 20000))
    assert classify_signal(bearing) is SignalKind.AMPLITUDE_MODULATED
    gear = synth_gear(GearParams(1000.0, 25.0, (0.7, 0.6), (1.0, 1.1)), grid_10k)
    assert classify_signal(gear) is SignalKind.AMPLITUDE_MODULATED


def test_deep_harmonic_train_stays_multi(grid_10k):
    # five consecutive harmonics offer symmetric neighbours, but the spacing
    # frequency is the (strong) fundamental itself
    sig = synth_multi_harmonic(
        MultiHarmonicParams(100.0, (4.0, 2.0, 1.5, 1.0, 0.8)), grid_10k)
    assert classify_signal(sig) is SignalKind.MULTI_HARMONIC


@pytest.mark.parametrize("cls", list(GeneratorClass))
def test_round_trip_sampled_draws(cls, grid_10k):
    ranges = default_ranges(cls, seed=4242)
    for i in range(10):
        params = sample_params(ranges, cls, grid_10k, index=i)
        sig = synthesize(cls, params, grid_10k)
        sig = add_noise(sig, sample_noise_snr_db(ranges, index=i), seed=4242, stream=i)
        assert describe(sig).kind is EXPECTED_KIND[cls]
