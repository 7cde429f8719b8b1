#!/usr/bin/env python3
"""Run the bundled worked-example corpus and print a result table.

Usage: python scripts/certify_examples.py [--timings]
"""
import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from psicert.fixtures import bundled_dir
from psicert.jobs import load_job, run_job


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--timings", action="store_true", help="print per-stage timings")
    args = parser.parse_args()

    root = bundled_dir()
    names = sorted(p.name for p in root.iterdir() if (p / "job.json").is_file())
    for name in names:
        job = load_job(root / name / "job.json")
        report = run_job(job, want_timings=args.timings)
        chi = report.result.charpoly
        factors = " * ".join(
            f"({q})^{m}" if m > 1 else f"({q})" for q, m in report.result.factors)
        certs = [c.prime for c in report.result.certificates if c is not None]
        print(f"== {name} (genus {job.genus}, k={job.k}, {job.pipeline})")
        if report.observed_depth is not None:
            print(f"   depth: {report.observed_depth}")
        print(f"   charpoly: {chi}")
        print(f"   factors:  {factors}")
        if certs:
            print(f"   irreducibility certificates mod: {certs}")
        print(f"   verdict:  {report.result.verdict}")
        if args.timings:
            print(f"   timings:  {report.timings}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
