#!/usr/bin/env python3
"""Fit all six models to a level dataset and compare with published values.

Example:
    python scripts/reproduce_tables.py --output results/hf
"""

import argparse
import json
import sys
from datetime import datetime
from pathlib import Path

# Add src to path for development
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

import pandas as pd

from qrotor.core.config import load_config
from qrotor.core.types import FitConfig, ModelKind
from qrotor.fitting import fit_all, load_bundled_levels, load_levels
from qrotor.fitting.data import PUBLISHED_SIGMA
from qrotor.reporting.tables import (
    format_parameter_table,
    format_prediction_table,
    prediction_frame,
    rounded_prediction_frame,
    scaled_parameters,
    write_csv,
)


def main():
    parser = argparse.ArgumentParser(description="Reproduce the HF parameter and prediction tables")
    parser.add_argument("--data", "-d", help="Level CSV (default: bundled HF v=0 levels)")
    parser.add_argument("--models", "-m", nargs="+", help="Specific models to fit (flags such as I, Ip)")
    parser.add_argument("--config", "-c", help="YAML file with fit settings")
    parser.add_argument("--output", "-o", default="results/hf", help="Output directory")
    args = parser.parse_args()

    data = load_levels(args.data) if args.data else load_bundled_levels()
    config = load_config(args.config) if args.config else FitConfig()
    kinds = [ModelKind(m) for m in args.models] if args.models else list(ModelKind)

    print(f"Fitting {len(kinds)} model(s) to {len(data)} levels of band {data.band}")
    print()

    output_path = Path(args.output)
    output_path.mkdir(parents=True, exist_ok=True)

    results = fit_all(data, kinds, config)
    rows = []
    for result in results:
        published = PUBLISHED_SIGMA.get(result.kind)
        rows.append({
            "model": result.kind.label,
            **dict(scaled_parameters(result.params)),
            "sigma": round(result.sigma, 4),
            "published_sigma": published,
            "converged": result.converged,
            "evaluations": result.iterations,
        })

    parameters = format_parameter_table(results)
    print(parameters)
    print()

    frame = prediction_frame(data, results)
    write_csv(frame, output_path / "predictions_full.csv")
    write_csv(rounded_prediction_frame(frame), output_path / "predictions.csv")
    (output_path / "parameters.txt").write_text(parameters + "\n")
    (output_path / "predictions.txt").write_text(format_prediction_table(frame) + "\n")
    pd.DataFrame(rows).to_csv(output_path / "summary.csv", index=False)

    summary = {
        "timestamp": datetime.now().isoformat(),
        "band": data.band,
        "fits": [r.to_dict() for r in results],
    }
    with open(output_path / "summary.json", "w") as f:
        json.dump(summary, f, indent=2)

    # Deviation of sigma from the published value
    print("=" * 40)
    print(f"{'Model':<6} {'sigma':>10} {'published':>10} {'diff':>10}")
    print("-" * 40)
    for row in rows:
        diff = row["sigma"] - row["published_sigma"]
        print(f"{row['model']:<6} {row['sigma']:>10.4f} {row['published_sigma']:>10.3f} {diff:>+10.4f}")
    print("=" * 40)
    print(f"\nResults saved to: {output_path}")

    if not all(r.converged for r in results):
        sys.exit(3)


if __name__ == "__main__":
    main()
