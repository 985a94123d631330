"""Convergence of the geodesic through z0 and z1 to its boundary limit.

Prints ||delta(t) - limit|| against t in units of 1/lambda_min(|alpha|),
and the geodesic itself as CSV when --csv is given.
"""
import argparse
import sys

import numpy as np

from opdisk import sampling
from opdisk.cli import geodesic_csv, geodesic_rows
from opdisk.disk import geodesic
from opdisk.linalg import DEFAULT_TOL


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--csv", action="store_true")
    args = ap.parse_args()
    rng = sampling.rng_for(args.seed, 0)
    z0 = sampling.random_disk_point(rng, args.n, 0.5)
    z1 = sampling.random_disk_point(rng, args.n, 0.9)
    if args.csv:
        rows = geodesic_rows(z0, z1, -3.0, 3.0, 25, DEFAULT_TOL)
        sys.stdout.write(geodesic_csv(rows))
        return
    geo = geodesic(z0, z1)
    lam = np.linalg.eigvalsh(geo.base.modulus_alpha)[0]
    hi, lo = geo.limit(+1), geo.limit(-1)
    print(f"lambda_min(|alpha|) = {lam:.4f}")
    print(f"{'t*lambda':>9} {'|d(t)-lim+|':>12} {'|d(-t)-lim-|':>13}")
    for s in (0.5, 1, 2, 4, 8, 16, 30):
        t = s / lam
        a = np.linalg.norm(geo.sample(t) - hi, 2)
        b = np.linalg.norm(geo.sample(-t) - lo, 2)
        print(f"{s:9.1f} {a:12.2e} {b:13.2e}")


if __name__ == "__main__":
    main()
