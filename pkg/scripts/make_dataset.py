#!/usr/bin/env python3
"""Emit a sample instruction-tuning dataset and validate it."""

import argparse
import json
from pathlib import Path

from sigtext.qa import DatasetConfig, emit_dataset, validate_dataset


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-pairs", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default="dataset/qa_pairs.jsonl")
    parser.add_argument("--emit-signals", action="store_true")
    args = parser.parse_args()

    config = DatasetConfig(n_pairs=args.n_pairs, output_path=Path(args.out),
                           master_seed=args.seed, emit_signals=args.emit_signals)
    result = emit_dataset(config)
    print(f"dataset : {result.dataset_path}")
    print(f"manifest: {result.manifest_path}")
    print("class counts:", json.dumps(result.class_counts, indent=2, sort_keys=True))

    report = validate_dataset(result.dataset_path)
    print("validation:", json.dumps(report.to_json(), indent=2))


if __name__ == "__main__":
    main()
