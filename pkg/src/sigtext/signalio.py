"""Sampled-signal container and file I/O.

A :class:`SampledSignal` is the currency passed between the generator,
denoiser, feature extractor and text renderer: a uniformly sampled series
with a sample rate and a physical unit.  Signals round-trip through a JSON
container file; two-column CSV (time, value) is accepted on input with the
sample rate inferred from the time column.
"""

from __future__ import annotations

import csv
import errno
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

DEFAULT_UNIT = "mm/sec"

# Relative non-uniformity tolerated in a CSV time column.
CSV_UNIFORMITY_RTOL = 1e-6


@dataclass(frozen=True)
class SampleGrid:
    """Uniform time grid: t_i = i / sample_rate_hz for i = 0..n_samples-1."""

    sample_rate_hz: float
    n_samples: int

    def __post_init__(self):
        if not np.isfinite(self.sample_rate_hz) or self.sample_rate_hz <= 0:
            raise ValueError(f"sample_rate_hz must be positive, got {self.sample_rate_hz}")
        if self.n_samples < 2:
            raise ValueError(f"n_samples must be >= 2, got {self.n_samples}")

    @property
    def nyquist_hz(self) -> float:
        return self.sample_rate_hz / 2.0

    @property
    def duration_s(self) -> float:
        return self.n_samples / self.sample_rate_hz

    @property
    def resolution_hz(self) -> float:
        return self.sample_rate_hz / self.n_samples

    def times(self) -> np.ndarray:
        return np.arange(self.n_samples) / self.sample_rate_hz


@dataclass(frozen=True)
class SampledSignal:
    """Uniformly sampled real-valued time series.

    ``meta`` carries provenance (ground-truth parameters for simulated
    signals, generator warnings); it travels with the container file.
    Sample arrays are frozen after construction.
    """

    samples: np.ndarray
    sample_rate_hz: float
    unit: str = DEFAULT_UNIT
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        arr = np.asarray(self.samples, dtype=np.float64)
        if arr.ndim != 1:
            raise ValueError(f"samples must be one-dimensional, got shape {arr.shape}")
        if arr.size < 2:
            raise ValueError(f"signal needs at least 2 samples, got {arr.size}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("samples contain non-finite values")
        if not np.isfinite(self.sample_rate_hz) or self.sample_rate_hz <= 0:
            raise ValueError(f"sample_rate_hz must be positive, got {self.sample_rate_hz}")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "samples", arr)

    def __len__(self) -> int:
        return self.samples.size

    @property
    def grid(self) -> SampleGrid:
        return SampleGrid(self.sample_rate_hz, self.samples.size)

    @property
    def duration_s(self) -> float:
        return self.samples.size / self.sample_rate_hz

    def times(self) -> np.ndarray:
        return self.grid.times()

    def with_samples(self, samples: np.ndarray, meta: dict | None = None) -> "SampledSignal":
        """Same grid and unit, new sample values."""
        return SampledSignal(samples, self.sample_rate_hz, self.unit,
                             dict(self.meta) if meta is None else meta)


def save_signal(signal: SampledSignal, path: str | Path) -> Path:
    """Write the JSON container: sample_rate_hz, unit, samples, meta."""
    path = Path(path)
    payload = {
        "sample_rate_hz": signal.sample_rate_hz,
        "unit": signal.unit,
        "samples": [float(v) for v in signal.samples],
        "meta": signal.meta,
    }
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path


def _load_csv(path: Path) -> SampledSignal:
    times = []
    values = []
    with path.open(newline="", encoding="utf-8") as fh:
        for row in csv.reader(fh):
            if not row or row[0].strip().lower() in ("time_s", "time", "t"):
                continue
            times.append(float(row[0]))
            values.append(float(row[1]))
    if len(times) < 2:
        raise ValueError(f"{path}: need at least two CSV rows to infer a sample rate")
    t = np.asarray(times)
    dt = t[1] - t[0]
    if dt <= 0:
        raise ValueError(f"{path}: time column must be strictly increasing")
    steps = np.diff(t)
    if np.any(np.abs(steps - dt) > CSV_UNIFORMITY_RTOL * abs(dt)):
        bad = int(np.argmax(np.abs(steps - dt)))
        raise ValueError(
            f"{path}: non-uniform sampling at row {bad + 1} "
            f"(step {steps[bad]:.9g} s vs {dt:.9g} s)"
        )
    return SampledSignal(np.asarray(values), 1.0 / dt)


def load_signal(path: str | Path) -> SampledSignal:
    """Read a signal container (JSON) or two-column time,value CSV."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(errno.ENOENT, "signal file not found", str(path))
    if path.suffix.lower() == ".csv":
        return _load_csv(path)
    payload = json.loads(path.read_text(encoding="utf-8"))
    for key in ("sample_rate_hz", "samples"):
        if key not in payload:
            raise ValueError(f"{path}: container missing required field '{key}'")
    return SampledSignal(
        np.asarray(payload["samples"], dtype=np.float64),
        float(payload["sample_rate_hz"]),
        payload.get("unit", DEFAULT_UNIT),
        payload.get("meta", {}),
    )
