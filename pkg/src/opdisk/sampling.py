"""Seeded random instances.

Every instance draws from its own Philox stream keyed by (seed, index), so a
suite gives the same instances whatever the thread count or run order.
"""
from __future__ import annotations

import numpy as np

from .module import BlockMatrix, BorelParams, borel_element
from .tracial import BlockAlgebra

PRNG_NAME = "numpy.random.Philox(SeedSequence([seed, index]))"


def rng_for(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, index])))


def complex_gaussian(rng: np.random.Generator, n: int, m: int | None = None) -> np.ndarray:
    m = n if m is None else m
    return (rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))) / np.sqrt(2)


def random_disk_point(rng: np.random.Generator, n: int, norm_cap: float) -> np.ndarray:
    """Complex Gaussian rescaled to an operator norm uniform in (0, norm_cap]."""
    z = complex_gaussian(rng, n)
    r = norm_cap * (1.0 - rng.random())
    return z * (r / np.linalg.norm(z, 2))


def random_diagonal_point(rng: np.random.Generator, n: int, norm_cap: float) -> np.ndarray:
    d = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    r = norm_cap * (1.0 - rng.random(n))
    return np.diag(d / np.abs(d) * r)


def random_block_point(rng: np.random.Generator, alg: BlockAlgebra, norm_cap: float) -> np.ndarray:
    z = np.zeros((alg.n, alg.n), dtype=complex)
    for s in alg.slices:
        z[s, s] = complex_gaussian(rng, s.stop - s.start)
    r = norm_cap * (1.0 - rng.random())
    return z * (r / np.linalg.norm(z, 2))


def random_blocks(rng: np.random.Generator, n: int) -> tuple[int, ...]:
    """Random composition of n into parts of size at most 3."""
    dims = []
    while n > 0:
        d = int(rng.integers(1, min(3, n) + 1))
        dims.append(d)
        n -= d
    return tuple(dims)


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    q, r = np.linalg.qr(complex_gaussian(rng, n))
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_invertible(rng: np.random.Generator, n: int, cond: float = 10.0) -> np.ndarray:
    """U diag(s) V with s log-uniform so that the condition number is at most cond."""
    h = 0.5 * np.log(cond)
    s = np.exp(rng.uniform(-h, h, n))
    return random_unitary(rng, n) @ np.diag(s) @ random_unitary(rng, n)


def random_anti_hermitian(rng: np.random.Generator, n: int, norm_cap: float = 1.0) -> np.ndarray:
    a = complex_gaussian(rng, n)
    x = 0.5 * (a - a.conj().T)
    nx = np.linalg.norm(x, 2)
    return x * (norm_cap * (1.0 - rng.random()) / nx) if nx > 0 else x


def random_borel_params(rng: np.random.Generator, n: int) -> BorelParams:
    return BorelParams(random_invertible(rng, n), random_anti_hermitian(rng, n))


def random_theta_unitary(rng: np.random.Generator, n: int) -> BlockMatrix:
    """Borel element (cond g <= 10, ||x|| <= 1) times diag(u1, u2)."""
    b = borel_element(random_borel_params(rng, n))
    return b @ BlockMatrix.diag(random_unitary(rng, n), random_unitary(rng, n))
