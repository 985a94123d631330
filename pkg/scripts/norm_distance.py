"""Norm of the canonical cross ratio against the invariant distance.

For z = r * (random direction) with r swept in (0, 1), prints ||cr(0, z)||,
exp(2 d(0, z)) and the four-line construction residual.
"""
import argparse

import numpy as np

from opdisk import sampling
from opdisk.cross_ratio import cr0, cross_ratio_set, endo_norm, geodesic_tuple
from opdisk.disk import dist


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = sampling.rng_for(args.seed, 0)
    d = sampling.complex_gaussian(rng, args.n)
    d /= np.linalg.norm(d, 2)
    print(f"{'r':>5} {'||cr0||':>12} {'exp(2d)':>12} {'set residual':>13}")
    for r in (0.1, 0.3, 0.5, 0.7, 0.9, 0.99):
        z = r * d
        c = cr0(z)
        s = cross_ratio_set(geodesic_tuple(z)).coefficient - c.coefficient
        print(f"{r:5.2f} {endo_norm(c):12.6f} {np.exp(2 * dist(0, z)):12.6f} "
              f"{np.linalg.norm(s, 2):13.2e}")


if __name__ == "__main__":
    main()
