"""Run every verification suite over a range of dimensions and print a CSV table.

    python scripts/suite_sweep.py --dims 1 2 3 4 5 --samples 100 --seed 0
"""
import argparse
import csv
import sys

from opdisk.suites import SUITES, RunConfig, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dims", type=int, nargs="+", default=[1, 2, 3, 4, 5])
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--norm-cap", type=float, default=0.9)
    args = ap.parse_args()

    w = csv.writer(sys.stdout)
    w.writerow(["suite", "n", "samples", "max_residual", "errors", "elapsed_ms"])
    for name in SUITES:
        for n in args.dims:
            cfg = RunConfig(dim=n, samples=args.samples, seed=args.seed, norm_cap=args.norm_cap)
            rep = run_suite(name, cfg, raise_on_failure=False)
            w.writerow([name, n, args.samples, rep["max_residual"],
                        len(rep["outputs"]["errors"]), round(rep["elapsed_ms"], 1)])


if __name__ == "__main__":
    main()
