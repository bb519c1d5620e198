"""Command-line interface.

Subcommands: ``generate`` (synthesize a labeled signal file), ``denoise``
(singular-spectrum band denoising), ``features`` (JSON feature report),
``describe`` (standardized text description), ``dataset`` (instruction
Q&A JSONL), ``diagnose`` (chain-of-thought prompt, optionally sent to a
chat endpoint) and ``plot`` (waveform + spectrum image).

Failures print a single-line JSON error on stderr and exit nonzero.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from . import __version__
from .decompose import AutoBands, SsaConfig, denoise
from .describe import DescribeConfig, compute_features, describe
from .generators import (AmplitudeModulatedParams, BearingFaultType,
                         BearingParams, CompositeParams, GearParams,
                         HarmonicParams, ImpulseDecayParams, MotherWavelet,
                         MultiHarmonicParams, NoiseKind, RandomHarmonicsParams,
                         RandomUnitParams, WaveletParams, eval_unit,
                         synth_amplitude_modulated, synth_bearing,
                         synth_composite, synth_gear, synth_multi_harmonic,
                         synth_random_harmonics)
from .llm import LlmConfig, assemble_cot_prompt, chat_complete
from .qa import DatasetConfig, emit_dataset, validate_dataset
from .signalio import SampleGrid, SampledSignal, load_signal, save_signal


def _floats(text: str) -> tuple[float, ...]:
    return tuple(float(v) for v in text.split(",") if v.strip() != "")


def _band(text: str) -> tuple[float, float]:
    try:
        center, half = text.split(":")
        return float(center), float(half)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"band must look like CENTER:HALFWIDTH, got {text!r}") from None


def _grid(args) -> SampleGrid:
    n = args.samples if args.samples is not None else int(round(args.fs * args.duration))
    return SampleGrid(args.fs, n)


def _ssa_config(args) -> SsaConfig:
    if args.band:
        bands = tuple(args.band)
    else:
        bands = AutoBands(top_k=args.auto_peaks)
    return SsaConfig(window_len=args.window_len, bands=bands,
                     energy_fraction=args.energy_fraction,
                     max_components_per_band=args.max_components)


def _dataclass_json(obj) -> dict:
    out = {}
    for f in dataclasses.fields(obj):
        val = getattr(obj, f.name)
        out[f.name] = val
    return out


# --- generate ---------------------------------------------------------------

# CLI kind names of the randomized generator classes
_RANDOM_CLASSES = {
    "harmonic": "single_harmonic",
    "multi": "multi_harmonic",
    "random-harmonics": "random_harmonic",
    "composite": "composite_harmonic",
    "am": "amplitude_modulated",
    "bearing": "bearing",
    "gear": "gear",
}


def _cmd_generate(args) -> int:
    grid = _grid(args)
    kind = args.kind
    if args.random_params:
        from .generators import default_ranges, sample_params, synthesize
        from .qa import params_to_dict
        if kind not in _RANDOM_CLASSES:
            raise SystemExit2(f"--random-params does not support kind {kind!r}")
        cls = _RANDOM_CLASSES[kind]
        params = sample_params(default_ranges(cls, seed=args.seed), cls, grid,
                               index=args.index)
        signal = synthesize(cls, params, grid, args.unit)
        meta = dict(signal.meta)
        meta.update({"kind": kind, "params": params_to_dict(params),
                     "seed": args.seed, "index": args.index})
        out = Path(args.out)
        save_signal(signal.with_samples(signal.samples, meta), out)
        print(str(out))
        return 0
    if kind == "harmonic":
        params = HarmonicParams(args.amp, args.freq, args.phase)
        signal = eval_unit(params, grid, args.unit)
    elif kind == "impulse":
        params = ImpulseDecayParams(args.amp, args.freq, args.phase, args.decay)
        signal = eval_unit(params, grid, args.unit)
    elif kind == "wavelet":
        params = WaveletParams(args.scale, args.shift, MotherWavelet(args.mother))
        signal = eval_unit(params, grid, args.unit)
    elif kind == "noise":
        band = tuple(args.noise_band) if args.noise_band else None
        noise_kind = NoiseKind.BAND_LIMITED if band else NoiseKind.WHITE_GAUSSIAN
        params = RandomUnitParams(args.std, noise_kind, band, args.seed)
        signal = eval_unit(params, grid, args.unit)
    elif kind == "multi":
        params = MultiHarmonicParams(args.f0, _floats(args.amps),
                                     _floats(args.phases) if args.phases else None)
        signal = synth_multi_harmonic(params, grid, args.unit)
    elif kind == "random-harmonics":
        params = RandomHarmonicsParams(_floats(args.freqs), _floats(args.amps),
                                       _floats(args.phases) if args.phases else None)
        signal = synth_random_harmonics(params, grid, args.unit)
    elif kind == "composite":
        params = CompositeParams(
            MultiHarmonicParams(args.f0, _floats(args.amps)),
            RandomHarmonicsParams(_floats(args.freqs), _floats(args.rand_amps)))
        signal = synth_composite(params, grid, args.unit)
    elif kind == "am":
        params = AmplitudeModulatedParams(args.carrier, args.carrier_amp,
                                          args.mod_freq, _floats(args.depths),
                                          args.carrier_phase)
        signal = synth_amplitude_modulated(params, grid, args.unit)
    elif kind == "bearing":
        params = BearingParams(args.amp, args.natural_freq, args.fault_freq,
                               args.decay, BearingFaultType(args.fault_type))
        signal = synth_bearing(params, grid, args.unit)
    else:  # gear
        n = len(_floats(args.am_amps))
        params = GearParams(args.mesh_freq, args.char_freq, _floats(args.am_amps),
                            _floats(args.fm_amps) if args.fm_amps else (0.0,) * n)
        signal = synth_gear(params, grid, args.unit)
    from .qa import params_to_dict
    meta_params = params_to_dict(params)
    meta = dict(signal.meta)
    meta.update({"kind": kind, "params": meta_params})
    out = Path(args.out)
    save_signal(signal.with_samples(signal.samples, meta), out)
    print(str(out))
    return 0


# --- denoise ----------------------------------------------------------------

def _cmd_denoise(args) -> int:
    signal = load_signal(args.signal)
    clean, residual = denoise(signal, _ssa_config(args))
    stem = Path(args.signal)
    out_clean = Path(args.out_clean) if args.out_clean else stem.with_name(stem.stem + ".clean.json")
    out_resid = Path(args.out_residual) if args.out_residual else stem.with_name(stem.stem + ".residual.json")
    save_signal(clean, out_clean)
    save_signal(residual, out_resid)
    print(json.dumps({"clean": str(out_clean), "residual": str(out_resid)}))
    return 0


# --- features ---------------------------------------------------------------

def _feature_report(signal: SampledSignal) -> dict:
    bundle = compute_features(signal)
    harm = bundle.harmonics
    return {
        "sample_rate_hz": signal.sample_rate_hz,
        "n_samples": len(signal),
        "unit": signal.unit,
        "time": _dataclass_json(bundle.time),
        "frequency": _dataclass_json(bundle.freq),
        "wave": _dataclass_json(bundle.wave),
        "harmonics": {
            "fundamental_hz": harm.fundamental_hz,
            "entries": [_dataclass_json(e) for e in harm.entries],
            "subharmonics": [_dataclass_json(s) for s in harm.subharmonics],
        },
        "sidebands": [
            {
                "carrier_hz": p.carrier_hz,
                "carrier_amplitude": p.carrier_amplitude,
                "spacing_hz": p.spacing_hz,
                "blocks": [_dataclass_json(b) for b in p.blocks],
            }
            for p in bundle.sidebands
        ],
        "peaks": [{"freq_hz": p.freq_hz, "amplitude": p.amplitude}
                  for p in bundle.peaks],
    }


def _cmd_features(args) -> int:
    signal = load_signal(args.signal)
    report = _feature_report(signal)
    text = json.dumps(report, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
        print(args.out)
    else:
        print(text)
    return 0


# --- describe ---------------------------------------------------------------

def _cmd_describe(args) -> int:
    signal = load_signal(args.signal)
    config = DescribeConfig(denoise_first=args.denoise, ssa=_ssa_config(args))
    desc = describe(signal, config)
    if args.json:
        print(json.dumps(desc.to_json(), indent=2, ensure_ascii=False))
    else:
        print(desc.rendered_text)
    return 0


# --- dataset ----------------------------------------------------------------

def _cmd_dataset(args) -> int:
    if args.validate:
        report = validate_dataset(args.validate)
        print(json.dumps(report.to_json(), indent=2))
        return 0 if report.ok else 1
    if args.config:
        config = DatasetConfig.from_json(
            json.loads(Path(args.config).read_text(encoding="utf-8")))
    else:
        if not args.out or args.n_pairs is None:
            raise SystemExit2("dataset needs --config, or both --n-pairs and --out")
        config = DatasetConfig(n_pairs=args.n_pairs, output_path=args.out,
                               master_seed=args.seed,
                               emit_signals=args.emit_signals)
    result = emit_dataset(config)
    print(json.dumps({
        "dataset": str(result.dataset_path),
        "manifest": str(result.manifest_path),
        "n_pairs": result.n_pairs,
        "class_counts": result.class_counts,
    }, indent=2))
    return 0


class SystemExit2(RuntimeError):
    """Usage error raised after parsing (maps to exit code 2)."""


# --- diagnose ---------------------------------------------------------------

def _cmd_diagnose(args) -> int:
    signal = load_signal(args.signal)
    desc = describe(signal, DescribeConfig(denoise_first=args.denoise,
                                           ssa=_ssa_config(args)))
    context = ""
    if args.context:
        context = Path(args.context).read_text(encoding="utf-8").strip()
    prompt = assemble_cot_prompt(desc, context, args.question)
    if not args.send:
        print(prompt.rendered)
        return 0
    cfg = LlmConfig(endpoint=args.endpoint, model=args.model,
                    credential_env=args.credential_env,
                    timeout_s=args.timeout, max_retries=args.retries)
    answer = chat_complete(prompt, cfg)
    if args.transcript:
        Path(args.transcript).write_text(
            json.dumps(answer.transcript, indent=2, ensure_ascii=False) + "\n",
            encoding="utf-8")
    print(json.dumps({"reply": answer.raw_reply, "choice": answer.choice},
                     ensure_ascii=False, indent=2))
    return 0


# --- plot -------------------------------------------------------------------

def _cmd_plot(args) -> int:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    from .features import spectrum as make_spectrum

    signal = load_signal(args.signal)
    spec = make_spectrum(signal)
    fig, (ax_t, ax_f) = plt.subplots(2, 1, figsize=(10, 6))
    ax_t.plot(signal.times(), signal.samples, linewidth=0.7)
    ax_t.set_xlabel("time [s]")
    ax_t.set_ylabel(f"amplitude [{signal.unit}]")
    ax_t.set_title("waveform")
    ax_f.plot(spec.freqs_hz, spec.amplitudes, linewidth=0.8)
    ax_f.set_xlabel("frequency [Hz]")
    ax_f.set_ylabel(f"amplitude [{signal.unit}]")
    ax_f.set_title("single-sided spectrum")
    fig.tight_layout()
    out = Path(args.out) if args.out else Path(args.signal).with_suffix(".svg")
    fig.savefig(out)
    plt.close(fig)
    print(str(out))
    return 0


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sigtext",
        description="Signal-to-text toolkit for machinery condition monitoring.")
    parser.add_argument("--version", action="version", version=f"sigtext {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="synthesize a labeled signal file")
    gen.add_argument("--kind", required=True,
                     choices=["harmonic", "impulse", "wavelet", "noise", "multi",
                              "random-harmonics", "composite", "am", "bearing", "gear"])
    gen.add_argument("--fs", type=float, default=10000.0)
    gen.add_argument("--samples", type=int, default=None)
    gen.add_argument("--duration", type=float, default=1.0)
    gen.add_argument("--unit", default="mm/sec")
    gen.add_argument("--out", required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--random-params", action="store_true",
                     help="draw parameters from the stock ranges for this kind")
    gen.add_argument("--index", type=int, default=0,
                     help="draw index under --random-params")
    gen.add_argument("--freq", type=float, help="harmonic/impulse frequency [Hz]")
    gen.add_argument("--amp", type=float, help="amplitude")
    gen.add_argument("--phase", type=float, default=0.0, help="phase [rad]")
    gen.add_argument("--decay", type=float, help="decay rate [1/s]")
    gen.add_argument("--scale", type=float, help="wavelet scale")
    gen.add_argument("--shift", type=float, default=0.0, help="wavelet time shift [s]")
    gen.add_argument("--mother", default="morlet", choices=[m.value for m in MotherWavelet])
    gen.add_argument("--std", type=float, help="noise standard deviation")
    gen.add_argument("--noise-band", type=_band, help="band-limited noise LO:HI [Hz]")
    gen.add_argument("--f0", type=float, help="fundamental frequency [Hz]")
    gen.add_argument("--amps", help="comma-separated amplitudes")
    gen.add_argument("--phases", help="comma-separated phases [rad]")
    gen.add_argument("--freqs", help="comma-separated frequencies [Hz]")
    gen.add_argument("--rand-amps", help="comma-separated random-component amplitudes")
    gen.add_argument("--carrier", type=float, help="AM carrier frequency [Hz]")
    gen.add_argument("--carrier-amp", type=float, default=1.0)
    gen.add_argument("--carrier-phase", type=float, default=0.0)
    gen.add_argument("--mod-freq", type=float, help="AM modulation frequency [Hz]")
    gen.add_argument("--depths", help="comma-separated AM depths per order")
    gen.add_argument("--natural-freq", type=float, help="bearing resonance [Hz]")
    gen.add_argument("--fault-freq", type=float, help="bearing fault frequency [Hz]")
    gen.add_argument("--fault-type", default="outer_race",
                     choices=[t.value for t in BearingFaultType])
    gen.add_argument("--mesh-freq", type=float, help="gear mesh frequency [Hz]")
    gen.add_argument("--char-freq", type=float, help="gear fault characteristic frequency [Hz]")
    gen.add_argument("--am-amps", help="comma-separated gear AM amplitudes")
    gen.add_argument("--fm-amps", help="comma-separated gear FM amplitudes")
    gen.set_defaults(func=_cmd_generate)

    def add_ssa_flags(p):
        p.add_argument("--window-len", type=int, default=None)
        p.add_argument("--band", type=_band, action="append",
                       help="frequency band CENTER:HALFWIDTH [Hz]; repeatable")
        p.add_argument("--auto-peaks", type=int, default=3,
                       help="bands from the K strongest spectral peaks")
        p.add_argument("--energy-fraction", type=float, default=0.95)
        p.add_argument("--max-components", type=int, default=8)

    den = sub.add_parser("denoise", help="singular-spectrum band denoising")
    den.add_argument("signal")
    den.add_argument("--out-clean")
    den.add_argument("--out-residual")
    add_ssa_flags(den)
    den.set_defaults(func=_cmd_denoise)

    feat = sub.add_parser("features", help="JSON feature report")
    feat.add_argument("signal")
    feat.add_argument("--out")
    feat.set_defaults(func=_cmd_features)

    desc = sub.add_parser("describe", help="standardized text description")
    desc.add_argument("signal")
    desc.add_argument("--json", action="store_true", help="emit the JSON form")
    desc.add_argument("--denoise", action="store_true")
    add_ssa_flags(desc)
    desc.set_defaults(func=_cmd_describe)

    data = sub.add_parser("dataset", help="emit or validate a Q&A JSONL dataset")
    data.add_argument("--config", help="dataset config JSON file")
    data.add_argument("--n-pairs", type=int)
    data.add_argument("--out")
    data.add_argument("--seed", type=int, default=0)
    data.add_argument("--emit-signals", action="store_true")
    data.add_argument("--validate", metavar="DATASET",
                      help="validate an existing dataset instead of emitting")
    data.set_defaults(func=_cmd_dataset)

    diag = sub.add_parser("diagnose", help="assemble (and optionally send) a diagnostic prompt")
    diag.add_argument("signal")
    diag.add_argument("--context", help="equipment context text file")
    diag.add_argument("--question", required=True)
    diag.add_argument("--denoise", action="store_true")
    add_ssa_flags(diag)
    diag.add_argument("--send", action="store_true")
    diag.add_argument("--endpoint", default="http://localhost:8000/v1/chat/completions")
    diag.add_argument("--model", default="diagnosis-model")
    diag.add_argument("--credential-env", default="SIGTEXT_API_KEY")
    diag.add_argument("--timeout", type=float, default=30.0)
    diag.add_argument("--retries", type=int, default=2)
    diag.add_argument("--transcript", help="write the request/response log here")
    diag.set_defaults(func=_cmd_diagnose)

    plot = sub.add_parser("plot", help="waveform + spectrum image")
    plot.add_argument("signal")
    plot.add_argument("--out")
    plot.set_defaults(func=_cmd_plot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit2 as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(json.dumps({"error": str(exc),
                          "path": getattr(exc, "filename", None) or str(exc)}),
              file=sys.stderr)
        return 1
    except Exception as exc:
        print(json.dumps({"error": f"{type(exc).__name__}: {exc}"}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
