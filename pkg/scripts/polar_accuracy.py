"""Accuracy of |z| and omega near rank deficiency: SVD versus eigh(z*z).

Builds z = U diag(s) V with one singular value swept towards 0 and reports
the reconstruction error ||omega |z| - z|| for both routes.
"""
import argparse

import numpy as np

from opdisk import sampling
from opdisk.linalg import adj, polar, sqrt_psd


def polar_eig(z, eps_rank=1e-10):
    """Reference route: |z| = sqrt(z*z), omega = z |z|^+ (pseudo-inverse)."""
    m = sqrt_psd(adj(z) @ z)
    w, V = np.linalg.eigh(m)
    keep = w > eps_rank
    pinv = (V[:, keep] / w[keep]) @ adj(V[:, keep])
    return z @ pinv, m


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = sampling.rng_for(args.seed, 0)
    U, V = sampling.random_unitary(rng, args.n), sampling.random_unitary(rng, args.n)
    print(f"{'s_min':>9} {'svd err':>10} {'eig err':>10}")
    for k in range(2, 16):
        s = np.linspace(0.9, 0.3, args.n)
        s[-1] = 10.0 ** -k
        z = U @ np.diag(s) @ V
        p = polar(z)
        om, m = polar_eig(z)
        e_svd = np.linalg.norm(p.omega @ p.modulus - z, 2)
        e_eig = np.linalg.norm(om @ m - z, 2)
        print(f"{s[-1]:9.0e} {e_svd:10.2e} {e_eig:10.2e}")


if __name__ == "__main__":
    main()
