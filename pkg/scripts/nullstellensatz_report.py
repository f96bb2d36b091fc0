#!/usr/bin/env python3
"""Run the executable Nullstellensatz consequences on the shipped quantum
plane presentations and print the full reports."""

import json
import sys

sys.path.insert(0, "src")

from orecodes.spbw import load_presentation
from orecodes.spbwsets import nullstellensatz_check


def run(path, gens_text):
    pres = load_presentation(path)
    gens = [pres.parse(t) for t in gens_text.split(",")]
    report = nullstellensatz_check(gens, degree=4, sample_budget=40, seed=1)
    print(f"== {path}: I = <{gens_text}> ==")
    print(json.dumps(report, indent=2, sort_keys=True, default=str))


if __name__ == "__main__":
    run("presentations/qplane9.json", "x^2-1,y")
    run("presentations/qplane4.json", "x^3-1,y")
    run("presentations/qplane9.json", "x-1,y")
