"""Dataset emission: stratified class allocation, JSONL output, manifest.

A dataset is fully determined by (config, master seed): class counts come
from largest-remainder allocation of the mix weights, the order is a
seeded permutation, and every pair derives its parameters and noise from
its own index, so reruns are byte-identical.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

from .. import __version__
from ..generators import (GeneratorClass, ParamRanges, default_ranges,
                          derive_rng, sample_noise_snr_db, sample_params,
                          synthesize)
from ..signalio import DEFAULT_UNIT, SampleGrid, save_signal
from .builder import STYLE_VERSIONS, QAPair, QuestionStyle, build_qa_pair

DEFAULT_CLASS_MIX = {cls: 1.0 for cls in GeneratorClass}
DEFAULT_STYLES = (QuestionStyle.DESCRIBE_SIGNAL, QuestionStyle.IDENTIFY_KIND,
                  QuestionStyle.READ_FEATURE)
SCHEMA_VERSION = 1


@dataclass(frozen=True)
class DatasetConfig:
    n_pairs: int
    output_path: str | Path
    class_mix: dict = field(default_factory=lambda: dict(DEFAULT_CLASS_MIX))
    question_styles: tuple[QuestionStyle, ...] = DEFAULT_STYLES
    master_seed: int = 0
    sample_rate_hz: float = 10000.0
    n_samples: int = 10000
    unit: str = DEFAULT_UNIT
    noise: bool = True
    emit_signals: bool = False
    param_ranges: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.n_pairs < 1:
            raise ValueError(f"n_pairs must be >= 1, got {self.n_pairs}")
        mix = {GeneratorClass(k): float(v) for k, v in self.class_mix.items()}
        if any(w < 0 for w in mix.values()) or sum(mix.values()) <= 0:
            raise ValueError("class_mix weights must be non-negative with positive sum")
        object.__setattr__(self, "class_mix", mix)
        styles = tuple(QuestionStyle(s) for s in self.question_styles)
        if not styles:
            raise ValueError("question_styles must not be empty")
        object.__setattr__(self, "question_styles", styles)

    @property
    def grid(self) -> SampleGrid:
        return SampleGrid(self.sample_rate_hz, self.n_samples)

    def to_json(self) -> dict:
        return {
            "n_pairs": self.n_pairs,
            "output_path": str(self.output_path),
            "class_mix": {k.value: v for k, v in self.class_mix.items()},
            "question_styles": [s.value for s in self.question_styles],
            "master_seed": self.master_seed,
            "sample_rate_hz": self.sample_rate_hz,
            "n_samples": self.n_samples,
            "unit": self.unit,
            "noise": self.noise,
            "emit_signals": self.emit_signals,
            "param_ranges": self.param_ranges,
        }

    @staticmethod
    def from_json(data: dict) -> "DatasetConfig":
        known = {"n_pairs", "output_path", "class_mix", "question_styles",
                 "master_seed", "sample_rate_hz", "n_samples", "unit", "noise",
                 "emit_signals", "param_ranges"}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown dataset config fields: {sorted(unknown)}")
        return DatasetConfig(**{k: (tuple(v) if k == "question_styles" else v)
                                for k, v in data.items()})


def _config_hash(config: DatasetConfig) -> str:
    canon = json.dumps(config.to_json(), sort_keys=True, ensure_ascii=False)
    return hashlib.sha256(canon.encode("utf-8")).hexdigest()


def allocate_classes(config: DatasetConfig) -> list[GeneratorClass]:
    """Largest-remainder allocation, then a seeded deterministic shuffle."""
    classes = [cls for cls in GeneratorClass if config.class_mix.get(cls, 0.0) > 0]
    total_weight = sum(config.class_mix[cls] for cls in classes)
    quotas = {cls: config.n_pairs * config.class_mix[cls] / total_weight
              for cls in classes}
    counts = {cls: int(quotas[cls]) for cls in classes}
    shortfall = config.n_pairs - sum(counts.values())
    by_remainder = sorted(classes, key=lambda c: (-(quotas[c] - counts[c]), c.value))
    for cls in by_remainder[:shortfall]:
        counts[cls] += 1
    sequence = [cls for cls in classes for _ in range(counts[cls])]
    rng = derive_rng(config.master_seed, 0)
    order = rng.permutation(len(sequence))
    return [sequence[i] for i in order]


def _ranges_for(config: DatasetConfig, cls: GeneratorClass) -> ParamRanges:
    base = default_ranges(cls, seed=config.master_seed)
    overrides = config.param_ranges.get(cls.value, {})
    if not overrides:
        return base
    intervals = dict(base.intervals)
    choices = dict(base.choices)
    for name, value in overrides.items():
        if isinstance(value, dict) and "choices" in value:
            choices[name] = tuple(value["choices"])
        else:
            intervals[name] = (float(value[0]), float(value[1]))
    return ParamRanges(intervals, choices, seed=config.master_seed)


def generate_pair(config: DatasetConfig, cls: GeneratorClass, index: int,
                  signal_ref: str | None = None) -> QAPair:
    ranges = _ranges_for(config, cls)
    params = sample_params(ranges, cls, config.grid, index=index)
    snr = sample_noise_snr_db(ranges, index=index) if config.noise else None
    style = config.question_styles[index % len(config.question_styles)]
    return build_qa_pair(cls, params, config.grid, style, unit=config.unit,
                         seed=config.master_seed, index=index,
                         noise_snr_db=snr, signal_ref=signal_ref)


@dataclass(frozen=True)
class EmitResult:
    dataset_path: Path
    manifest_path: Path
    class_counts: dict
    n_pairs: int


def emit_dataset(config: DatasetConfig) -> EmitResult:
    """Write the JSONL dataset and its manifest; returns their paths."""
    out_path = Path(config.output_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    try:
        probe = out_path.open("w", encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write dataset to {out_path}: {exc}") from exc

    signals_dir = None
    if config.emit_signals:
        signals_dir = out_path.parent / (out_path.stem + "_signals")
        signals_dir.mkdir(parents=True, exist_ok=True)

    assignment = allocate_classes(config)
    counts: dict[str, int] = {}
    with probe as fh:
        for index, cls in enumerate(assignment):
            signal_ref = None
            if signals_dir is not None:
                signal_ref = str(Path(signals_dir.name) / f"pair_{index:05d}.json")
            pair = generate_pair(config, cls, index, signal_ref=signal_ref)
            if signals_dir is not None:
                _write_pair_signal(config, cls, index, signals_dir)
            fh.write(json.dumps(pair.to_json(), ensure_ascii=False,
                                separators=(",", ":")))
            fh.write("\n")
            counts[cls.value] = counts.get(cls.value, 0) + 1

    manifest_path = out_path.with_name(out_path.stem + ".manifest.json")
    manifest = {
        "schema_version": SCHEMA_VERSION,
        "generator_version": __version__,
        "master_seed": config.master_seed,
        "config_hash": _config_hash(config),
        "config": config.to_json(),
        "n_pairs": config.n_pairs,
        "class_counts": dict(sorted(counts.items())),
        "style_versions": {s.value: STYLE_VERSIONS[s] for s in config.question_styles},
    }
    manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n",
                             encoding="utf-8")
    return EmitResult(out_path, manifest_path, counts, config.n_pairs)


def _write_pair_signal(config: DatasetConfig, cls: GeneratorClass, index: int,
                       signals_dir: Path) -> None:
    from ..generators import add_noise  # local import to keep module load light

    ranges = _ranges_for(config, cls)
    params = sample_params(ranges, cls, config.grid, index=index)
    signal = synthesize(cls, params, config.grid, config.unit)
    if config.noise:
        snr = sample_noise_snr_db(ranges, index=index)
        signal = add_noise(signal, snr, seed=config.master_seed, stream=index)
    meta = dict(signal.meta)
    meta.update({"generator_class": cls.value, "index": index,
                 "master_seed": config.master_seed})
    save_signal(signal.with_samples(signal.samples, meta),
                signals_dir / f"pair_{index:05d}.json")
