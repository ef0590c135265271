#!/usr/bin/env python3
"""
@file recompute_risk_columns.py
@brief Recompute the derived columns of the risks fixture.

The risks situation carries risk_exposure (likelihood x cost_deviation) and
risk_magnitude (likelihood x schedule_deviation) as plain input columns. This
tool recomputes both from the other columns and either checks the fixture
(default) or rewrites it (--write).
"""

import argparse
import json
import sys
from pathlib import Path

DEFAULT_FIXTURE = (
    Path(__file__).resolve().parent.parent
    / "mcdm_engine"
    / "fixtures"
    / "rup"
    / "risks"
    / "situation.json"
)

DERIVED = {
    "risk_exposure": ("likelihood", "cost_deviation"),
    "risk_magnitude": ("likelihood", "schedule_deviation"),
}


def recompute(document):
    """
    @brief Recompute the derived columns in place.
    @return List of (alternative, column, stored value, recomputed value) mismatches
    """
    names = [c["name"] for c in document["criteria"]]
    index = {name: names.index(name) for name in names}
    mismatches = []
    for alternative, row in document["performance"].items():
        for column, (left, right) in DERIVED.items():
            value = round(row[index[left]] * row[index[right]], 2)
            stored = row[index[column]]
            if abs(stored - value) > 1e-9:
                mismatches.append((alternative, column, stored, value))
            row[index[column]] = value
    return mismatches


def main():
    parser = argparse.ArgumentParser(description="Check or rewrite the derived risk columns")
    parser.add_argument("--fixture", default=str(DEFAULT_FIXTURE))
    parser.add_argument("--write", action="store_true", help="Rewrite the fixture in place")
    args = parser.parse_args()

    path = Path(args.fixture)
    with open(path, "r", encoding="utf-8") as f:
        document = json.load(f)

    mismatches = recompute(document)
    for alternative, column, stored, value in mismatches:
        print(f"{alternative}: {column} is {stored}, expected {value}")

    if args.write:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(document, f, indent=2)
            f.write("\n")
        print(f"Rewrote {path}")
        return 0

    if not mismatches:
        print("Derived risk columns are consistent.")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
