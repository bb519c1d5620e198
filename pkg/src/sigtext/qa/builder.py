"""Question-answer pair construction from generated signals.

A pair couples a generated signal (or its feature digest) with a question
and the toolkit's own answer: the standardized description, the class
label, or a single named feature value.  Everything needed to regenerate
the pair lives in its ``meta`` block, so datasets can be re-validated
against the code that produced them.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from enum import Enum

from ..describe import (DescribeConfig, SignalKind, classify, compute_features,
                        fmt, render_description)
from ..generators import (AmplitudeModulatedParams, BearingFaultType,
                          BearingParams, CompositeParams, GeneratorClass,
                          GearParams, HarmonicParams, MultiHarmonicParams,
                          RandomHarmonicsParams, add_noise, synthesize)
from ..signalio import DEFAULT_UNIT, SampleGrid

INSTRUCTION = ("You are currently an excellent vibration analysis model, "
               "please answer the following questions:")

# Template class each generator class should be recognized as.
EXPECTED_KIND = {
    GeneratorClass.SINGLE_HARMONIC: SignalKind.SINGLE_HARMONIC,
    GeneratorClass.MULTI_HARMONIC: SignalKind.MULTI_HARMONIC,
    GeneratorClass.RANDOM_HARMONIC: SignalKind.RANDOM_HARMONIC,
    GeneratorClass.COMPOSITE_HARMONIC: SignalKind.COMPOSITE_HARMONIC,
    GeneratorClass.AMPLITUDE_MODULATED: SignalKind.AMPLITUDE_MODULATED,
    GeneratorClass.BEARING: SignalKind.AMPLITUDE_MODULATED,
    GeneratorClass.GEAR: SignalKind.AMPLITUDE_MODULATED,
}


class QuestionStyle(str, Enum):
    DESCRIBE_SIGNAL = "describe_signal"
    IDENTIFY_KIND = "identify_kind"
    READ_FEATURE = "read_feature"


# Phrasings are versioned so a dataset manifest pins the exact wording.
STYLE_VERSIONS = {
    QuestionStyle.DESCRIBE_SIGNAL: "describe_signal/1",
    QuestionStyle.IDENTIFY_KIND: "identify_kind/1",
    QuestionStyle.READ_FEATURE: "read_feature/1",
}


@dataclass(frozen=True)
class QAPair:
    instruction: str
    input: str
    output: str
    meta: dict

    def to_json(self) -> dict:
        return {"instruction": self.instruction, "input": self.input,
                "output": self.output, "meta": self.meta}


_PARAM_TYPES = {
    GeneratorClass.SINGLE_HARMONIC: HarmonicParams,
    GeneratorClass.MULTI_HARMONIC: MultiHarmonicParams,
    GeneratorClass.RANDOM_HARMONIC: RandomHarmonicsParams,
    GeneratorClass.AMPLITUDE_MODULATED: AmplitudeModulatedParams,
    GeneratorClass.BEARING: BearingParams,
    GeneratorClass.GEAR: GearParams,
}


def params_to_dict(params) -> dict:
    if isinstance(params, CompositeParams):
        return {"multi": params_to_dict(params.multi),
                "random": params_to_dict(params.random)}
    out = asdict(params)
    for key, val in out.items():
        if isinstance(val, Enum):
            out[key] = val.value
        elif isinstance(val, tuple):
            out[key] = list(val)
    return out


def params_from_dict(kind: GeneratorClass, data: dict):
    kind = GeneratorClass(kind)
    if kind is GeneratorClass.COMPOSITE_HARMONIC:
        return CompositeParams(
            params_from_dict(GeneratorClass.MULTI_HARMONIC, data["multi"]),
            params_from_dict(GeneratorClass.RANDOM_HARMONIC, data["random"]))
    cls = _PARAM_TYPES[kind]
    kwargs = {}
    for key, val in data.items():
        if key == "fault_type":
            kwargs[key] = BearingFaultType(val)
        elif isinstance(val, list):
            kwargs[key] = tuple(val)
        else:
            kwargs[key] = val
    return cls(**kwargs)


def _feature_digest(bundle, unit: str) -> str:
    lines = ", ".join(f"{fmt(p.freq_hz, 4)} Hz at {fmt(p.amplitude, 3)} {unit}"
                      for p in bundle.peaks)
    fs = bundle.signal.sample_rate_hz
    return (f"The signal was sampled at {fmt(fs, 4)} Hz for "
            f"{fmt(bundle.signal.duration_s, 4)} seconds (unit: {unit}). "
            f"Its RMS value is {fmt(bundle.time.rms, 3)} {unit} and its most "
            f"significant spectral lines are: {lines}.")


def _read_feature_qa(bundle, unit: str, index: int) -> tuple[str, str]:
    candidates = [
        ("RMS value", bundle.time.rms, unit),
        ("peak-to-peak value", bundle.time.peak_to_peak, unit),
        ("kurtosis", bundle.time.kurtosis, ""),
        ("center of gravity frequency", bundle.freq.gravity_center_freq_hz, "Hz"),
        ("peak value", bundle.time.peak, unit),
    ]
    name, value, suffix = candidates[index % len(candidates)]
    if value is None:
        name, value, suffix = candidates[0]
    rendered = fmt(value, 4) if suffix == "Hz" else fmt(value, 3)
    answer = f"The {name} of this signal is {rendered}"
    if suffix:
        answer += f" {suffix}"
    return (f"What is the {name} of this signal?", answer + ".")


def build_qa_pair(kind: GeneratorClass, params, grid: SampleGrid,
                  style: QuestionStyle, *, unit: str = DEFAULT_UNIT,
                  seed: int = 0, index: int = 0,
                  noise_snr_db: float | None = None,
                  signal_ref: str | None = None,
                  describe_config: DescribeConfig | None = None) -> QAPair:
    """Generate the signal, describe it, and fill the question template."""
    kind = GeneratorClass(kind)
    style = QuestionStyle(style)
    signal = synthesize(kind, params, grid, unit)
    if noise_snr_db is not None:
        signal = add_noise(signal, noise_snr_db, seed=seed, stream=index)
    config = describe_config or DescribeConfig()
    bundle = compute_features(signal, config)
    signal_kind = classify(bundle.spectrum, bundle.harmonics, list(bundle.sidebands),
                           bundle.all_peaks, families=list(bundle.families))
    description = render_description(signal_kind, bundle, config.precision, unit)

    digest = (f"the signal stored at {signal_ref}" if signal_ref is not None
              else _feature_digest(bundle, unit))
    if style is QuestionStyle.DESCRIBE_SIGNAL:
        if signal_ref is not None:
            question = (f"Consider {digest}. Provide the standardized textual "
                        f"description of this signal.")
        else:
            question = (f"{digest} Provide the standardized textual description "
                        f"of this signal.")
        answer = description.rendered_text
    elif style is QuestionStyle.IDENTIFY_KIND:
        question = (f"{digest} Which standard signal class does this signal "
                    f"belong to?")
        answer = f"This signal is a {signal_kind.label}."
    else:
        q, answer = _read_feature_qa(bundle, unit, index)
        question = f"{digest} {q}"

    meta = {
        "generator_class": kind.value,
        "kind": signal_kind.value,
        "style": style.value,
        "seed": seed,
        "index": index,
        "grid": {"sample_rate_hz": grid.sample_rate_hz, "n_samples": grid.n_samples},
        "unit": unit,
        "params": params_to_dict(params),
        "noise_snr_db": noise_snr_db,
        "signal_ref": signal_ref,
    }
    return QAPair(INSTRUCTION, question, answer, meta)


def rebuild_qa_pair(meta: dict) -> QAPair:
    """Reconstruct a pair from its meta block (for validation)."""
    kind = GeneratorClass(meta["generator_class"])
    params = params_from_dict(kind, meta["params"])
    grid = SampleGrid(meta["grid"]["sample_rate_hz"], int(meta["grid"]["n_samples"]))
    return build_qa_pair(
        kind, params, grid, QuestionStyle(meta["style"]),
        unit=meta.get("unit", DEFAULT_UNIT), seed=int(meta["seed"]),
        index=int(meta["index"]), noise_snr_db=meta.get("noise_snr_db"),
        signal_ref=meta.get("signal_ref"),
    )
