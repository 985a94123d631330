"""Commutative and central-trace specialisations.

A block algebra is a direct sum of full matrix blocks; its centre is the
scalars-per-block and the central trace is the normalised trace per block.
Identities here carry the factor 2 of ``log cr = 2 |Log|``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bundle import cr_at_base, gamma_inner, log_tangent
from .cross_ratio import cr
from .disk import alpha_of, translate_to_origin
from .errors import BlockPatternViolation, CoincidentPoints, InputError, NotDiagonal
from .linalg import (
    DEFAULT_TOL,
    Tolerances,
    adj,
    as_matrix,
    check_disk_pair,
    fun_calc,
    logm_pd,
    op_norm,
    polar,
)


@dataclass(frozen=True)
class BlockAlgebra:
    block_dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.block_dims)
        if not dims or min(dims) < 1:
            raise InputError("block dimensions must be positive")
        object.__setattr__(self, "block_dims", dims)

    @property
    def n(self) -> int:
        return sum(self.block_dims)

    @property
    def slices(self) -> list[slice]:
        edges = np.cumsum((0,) + self.block_dims)
        return [slice(a, b) for a, b in zip(edges[:-1], edges[1:])]

    def mask(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=bool)
        for s in self.slices:
            m[s, s] = True
        return m

    def check(self, x, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
        x = as_matrix(x)
        if x.shape[0] != self.n:
            raise BlockPatternViolation(f"expected size {self.n}, got {x.shape[0]}")
        off = np.where(self.mask(), 0, x)
        if op_norm(off) > tol.eps_check:
            raise BlockPatternViolation(f"off-block mass {op_norm(off):.3e}")
        return np.where(self.mask(), x, 0)

    @classmethod
    def commutative(cls, n: int) -> "BlockAlgebra":
        return cls((1,) * n)


def central_trace(alg: BlockAlgebra, x, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Normalised trace of each block times that block's identity."""
    x = alg.check(x, tol)
    out = np.zeros_like(x)
    for s in alg.slices:
        d = s.stop - s.start
        out[s, s] = np.trace(x[s, s]) / d * np.eye(d)
    return out


def _check_diagonal(z, tol):
    z = as_matrix(z)
    off = z - np.diag(np.diag(z))
    if op_norm(off) > tol.eps_check:
        raise NotDiagonal(f"off-diagonal mass {op_norm(off):.3e}")
    return np.diag(np.diag(z))


def _distinct(z0, z1, tol):
    z0, z1 = check_disk_pair(z0, z1, tol)
    if op_norm(z0 - z1) <= tol.eps_check:
        raise CoincidentPoints("z0 = z1")
    return z0, z1


def commutative_sides(z0, z1, tol: Tolerances = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """``(2 |Log_{z0} z1|, log cr(z0, z1))`` as diagonal matrices."""
    z0, z1 = _distinct(_check_diagonal(z0, tol), _check_diagonal(z1, tol), tol)
    lhs = 2 * polar(alpha_of(translate_to_origin(z0, z1, tol), tol), tol).modulus
    c = cr(z0, z1, tol).coefficient
    return lhs, logm_pd(0.5 * (c + adj(c)), tol)


def verify_commutative(z0, z1, tol: Tolerances = DEFAULT_TOL) -> float:
    lhs, rhs = commutative_sides(z0, z1, tol)
    return op_norm(lhs - rhs)


def tracial_sides(alg: BlockAlgebra, z0, z1, tol: Tolerances = DEFAULT_TOL
                  ) -> tuple[np.ndarray, np.ndarray]:
    """Both sides of the central-trace identity, each a central element.

    lhs = ``2 tr(<Log, Log>)^{1/2}`` and rhs = ``tr((log cr_{z0})^2)^{1/2}``,
    with cr(z0, z1) transported back to z0 along the geodesic.
    """
    z0, z1 = _distinct(z0, z1, tol)
    z0, z1 = alg.check(z0, tol), alg.check(z1, tol)
    X, x0 = log_tangent(z0, z1, tol)
    root = lambda t: np.sqrt(np.clip(t, 0, None))  # noqa: E731
    gram = gamma_inner(X, X, x0, tol).coefficient
    lhs = 2 * fun_calc(central_trace(alg, gram, tol), root, tol)
    c = cr_at_base(z0, z1, tol).coefficient
    L = logm_pd(0.5 * (c + adj(c)), tol)
    rhs = fun_calc(central_trace(alg, L @ L, tol), root, tol)
    return lhs, rhs


def verify_tracial(alg: BlockAlgebra, z0, z1, tol: Tolerances = DEFAULT_TOL) -> float:
    lhs, rhs = tracial_sides(alg, z0, z1, tol)
    return op_norm(lhs - rhs)
