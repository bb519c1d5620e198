"""Dataset validation: schema conformance and answer reproducibility."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .builder import rebuild_qa_pair

MAX_ERROR_SAMPLES = 5

PAIR_SCHEMA = {
    "type": "object",
    "required": ["instruction", "input", "output", "meta"],
    "properties": {
        "instruction": {"type": "string", "minLength": 1},
        "input": {"type": "string", "minLength": 1},
        "output": {"type": "string", "minLength": 1},
        "meta": {"type": "object"},
    },
}


@dataclass
class ValidationReport:
    n_checked: int = 0
    n_schema_errors: int = 0
    n_answer_mismatches: int = 0
    error_samples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.n_schema_errors == 0 and self.n_answer_mismatches == 0

    def _note(self, message: str) -> None:
        if len(self.error_samples) < MAX_ERROR_SAMPLES:
            self.error_samples.append(message)

    def to_json(self) -> dict:
        return {
            "n_checked": self.n_checked,
            "n_schema_errors": self.n_schema_errors,
            "n_answer_mismatches": self.n_answer_mismatches,
            "error_samples": list(self.error_samples),
            "ok": self.ok,
        }


def _check_schema(record) -> str | None:
    if not isinstance(record, dict):
        return "record is not an object"
    for key in PAIR_SCHEMA["required"]:
        if key not in record:
            return f"missing field '{key}'"
    for key in ("instruction", "input", "output"):
        if not isinstance(record[key], str) or not record[key]:
            return f"field '{key}' must be a non-empty string"
    if not isinstance(record["meta"], dict):
        return "field 'meta' must be an object"
    return None


def validate_dataset(path: str | Path) -> ValidationReport:
    """Parse every line and re-derive answers from the stored ground truth."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"dataset file not found: {path}")
    report = ValidationReport()
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            report.n_checked += 1
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                report.n_schema_errors += 1
                report._note(f"line {lineno}: invalid JSON ({exc})")
                continue
            problem = _check_schema(record)
            if problem is not None:
                report.n_schema_errors += 1
                report._note(f"line {lineno}: {problem}")
                continue
            meta = record["meta"]
            if not meta.get("generator_class") or not meta.get("params"):
                continue  # no ground truth to replay
            try:
                rebuilt = rebuild_qa_pair(meta)
            except Exception as exc:
                report.n_answer_mismatches += 1
                report._note(f"line {lineno}: rebuild failed ({exc})")
                continue
            if (rebuilt.instruction != record["instruction"]
                    or rebuilt.input != record["input"]
                    or rebuilt.output != record["output"]):
                report.n_answer_mismatches += 1
                report._note(f"line {lineno}: regenerated answer differs")
    return report
