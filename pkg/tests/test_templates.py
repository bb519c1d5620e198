"""Template rendering: fixture texts, number faithfulness, fallbacks."""

import re

import numpy as np
import pytest

from sigtext.describe import (MissingFeatureError, Precision, SignalKind,
                              compute_features, describe, fmt,
                              ordinal_suffixed, ordinal_word, render_description)
from sigtext.generators import (AmplitudeModulatedParams, CompositeParams,
                                MultiHarmonicParams, RandomHarmonicsParams,
                                single_harmonic, synth_amplitude_modulated,
                                synth_composite, synth_multi_harmonic,
                                synth_random_harmonics)
from sigtext.signalio import SampledSignal, SampleGrid

# numbers not immediately followed by an ordinal suffix
NUMBER_RE = re.compile(r"-?\d+(?:\.\d+)?(?!\d)(?!st|nd|rd|th)")


def all_number_tokens(text: str) -> list[str]:
    return NUMBER_RE.findall(text)


def formatted_value_set(desc) -> set[str]:
    out = set()
    for value in desc.values.values():
        if isinstance(value, int):
            out.add(str(value))
        else:
            for figs in (3, 4):
                out.add(fmt(value, figs))
    return out


def test_fmt_significant_figures():
    assert fmt(1 / 30, 4) == "0.03333"
    assert fmt(4.02, 3) == "4.02"
    assert fmt(100.0, 4) == "100"
    assert fmt(0.0, 3) == "0"
    assert fmt(2.5e-15, 3) == "0"
    assert fmt(1234.5, 3) == "1230"


def test_ordinals():
    assert ordinal_word(1) == "first"
    assert ordinal_word(10) == "tenth"
    assert ordinal_word(11) == "11th"
    assert [ordinal_suffixed(n) for n in (1, 2, 3, 4, 11, 12, 13, 21, 22, 23)] == \
        ["1st", "2nd", "3rd", "4th", "11th", "12th", "13th", "21st", "22nd", "23rd"]


def test_example_a_text(grid_1k):
    desc = describe(single_harmonic(4.0, 30.0, 0.0, grid_1k))
    assert desc.kind is SignalKind.SINGLE_HARMONIC
    text = desc.rendered_text
    assert "This signal is a simple harmonic periodic signal." in text
    assert "the period is 0.03333 seconds" in text
    assert "the frequency is 30 Hz" in text
    assert "the amplitude is 4 mm/sec" in text
    assert "only a single frequency of 30 Hz can be observed" in text
    assert desc.values["period_s"] == pytest.approx(1 / 30, rel=1e-6)


def test_example_b_text(grid_10k):
    sig = synth_multi_harmonic(MultiHarmonicParams(100.0, (4.02, 0.689, 0.344)), grid_10k)
    desc = describe(sig)
    assert desc.kind is SignalKind.MULTI_HARMONIC
    text = desc.rendered_text
    assert ("This signal is a multi-harmonic periodic signal, that is, a "
            "non-simple harmonic periodic signal.") in text
    assert "the signal period is 0.01 seconds" in text
    assert "the frequency of the fundamental (1st harmonic) is 100 Hz" in text
    assert "amplitude is 4.02 mm/sec" in text
    assert "the frequency of the 2nd harmonic is 200 Hz" in text
    assert "amplitude is 0.689 mm/sec" in text
    assert "the frequency of the 3rd harmonic is 300 Hz" in text
    assert "amplitude is 0.344 mm/sec" in text
    assert "harmonics of 100 Hz can be observed" in text


def test_sections_in_figure_order(grid_1k):
    desc = describe(single_harmonic(4.0, 30.0, 0.0, grid_1k))
    text = desc.rendered_text
    positions = [text.index(desc.sections[name])
                 for name in ("composition", "time_quant", "freq_quant", "linking")]
    assert positions == sorted(positions)


@pytest.mark.parametrize("maker", [
    lambda g: single_harmonic(4.0, 30.0, 0.5, g),
    lambda g: synth_multi_harmonic(MultiHarmonicParams(100.0, (4.02, 0.689, 0.344)), g),
    lambda g: synth_random_harmonics(
        RandomHarmonicsParams((137.0, 229.0, 349.0), (2.0, 1.5, 1.0)), g),
    lambda g: synth_composite(CompositeParams(
        MultiHarmonicParams(100.0, (4.0, 1.0, 0.7)),
        RandomHarmonicsParams((137.0, 411.0), (1.5, 1.2))), g),
    lambda g: synth_amplitude_modulated(
        AmplitudeModulatedParams(1000.0, 2.0, 25.0, (0.6, 0.3)), g),
])
def test_every_rendered_number_is_a_feature_value(maker):
    grid = SampleGrid(10000.0, 10000)
    desc = describe(maker(grid))
    allowed = formatted_value_set(desc)
    for token in all_number_tokens(desc.rendered_text):
        assert token.lstrip("-") in allowed or token in allowed, \
            f"unexplained number {token!r} in {desc.kind}"


def test_template_totality():
    # each class opens with its own fixed composition sentence and never
    # borrows another template's
    grid = SampleGrid(10000.0, 10000)
    openers = {
        SignalKind.SINGLE_HARMONIC: "This signal is a simple harmonic periodic signal.",
        SignalKind.MULTI_HARMONIC: "This signal is a multi-harmonic periodic signal",
        SignalKind.RANDOM_HARMONIC: "This signal is a random harmonic signal",
        SignalKind.COMPOSITE_HARMONIC: "This signal is a composite harmonic signal",
        SignalKind.AMPLITUDE_MODULATED: "This signal is an amplitude-modulated signal",
    }
    makers = {
        SignalKind.SINGLE_HARMONIC: single_harmonic(4.0, 30.0, 0.0, grid),
        SignalKind.MULTI_HARMONIC: synth_multi_harmonic(
            MultiHarmonicParams(100.0, (4.02, 0.689, 0.344)), grid),
        SignalKind.RANDOM_HARMONIC: synth_random_harmonics(
            RandomHarmonicsParams((137.0, 229.0, 349.0), (2.0, 1.5, 1.0)), grid),
        SignalKind.COMPOSITE_HARMONIC: synth_composite(CompositeParams(
            MultiHarmonicParams(100.0, (4.0, 1.0, 0.7)),
            RandomHarmonicsParams((137.0, 411.0), (1.5, 1.2))), grid),
        SignalKind.AMPLITUDE_MODULATED: synth_amplitude_modulated(
            AmplitudeModulatedParams(1000.0, 2.0, 25.0, (0.6, 0.3)), grid),
    }
    for kind, sig in makers.items():
        desc = describe(sig)
        assert desc.kind is kind
        assert desc.rendered_text.startswith(openers[kind])
        for other, opener in openers.items():
            if other is not kind:
                assert opener not in desc.rendered_text


def test_render_is_deterministic(grid_1k):
    sig = single_harmonic(4.0, 30.0, 0.0, grid_1k)
    assert describe(sig).rendered_text == describe(sig).rendered_text


def test_zero_signal_fallback():
    desc = describe(SampledSignal(np.zeros(256), 1000.0))
    assert desc.kind is SignalKind.UNKNOWN
    assert "no significant spectral content" in desc.rendered_text


def test_unknown_with_peaks_lists_them(grid_10k):
    # force the fallback template on a signal with peaks
    bundle = compute_features(
        synth_random_harmonics(RandomHarmonicsParams((137.0, 229.0), (2.0, 1.0)),
                               grid_10k))
    desc = render_description(SignalKind.UNKNOWN, bundle)
    assert "does not match a standard signal class" in desc.rendered_text
    assert "137 Hz" in desc.rendered_text


def test_missing_feature_error(grid_10k):
    bundle = compute_features(SampledSignal(np.zeros(256), 1000.0))
    with pytest.raises(MissingFeatureError, match="fundamental_hz"):
        render_description(SignalKind.MULTI_HARMONIC, bundle)
    with pytest.raises(MissingFeatureError, match="sidebands"):
        render_description(SignalKind.AMPLITUDE_MODULATED, bundle)


def test_precision_is_configurable(grid_1k):
    sig = single_harmonic(4.0, 30.0, 0.0, grid_1k)
    bundle = compute_features(sig)
    desc = render_description(SignalKind.SINGLE_HARMONIC, bundle,
                              Precision(period=2), unit="V")
    assert "the period is 0.033 seconds" in desc.rendered_text
    assert "V" in desc.rendered_text
    with pytest.raises(ValueError):
        Precision(frequency=0)


def test_json_serialization(grid_1k):
    desc = describe(single_harmonic(4.0, 30.0, 0.0, grid_1k))
    payload = desc.to_json()
    assert set(payload) == {"kind", "rendered_text", "sections", "values"}
    assert payload["kind"] == "single_harmonic"
    assert set(payload["sections"]) == {"composition", "time_quant",
                                        "freq_quant", "linking"}
