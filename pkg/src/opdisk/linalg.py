"""Dense complex matrix kernels: spectral calculus, polar decomposition, norms.

Every algebra element is a square ``complex128`` ndarray. Scalars are accepted
wherever a matrix is expected and promoted to 1x1 matrices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    DimensionMismatch,
    DomainError,
    InputError,
    NotHermitian,
    NotInDisk,
    Singular,
)


@dataclass(frozen=True)
class Tolerances:
    """Numerical slack used throughout.

    eps_rank
        Singular values / eigenvalues at or below this are treated as zero.
    eps_check
        Allowed residual when verifying an identity or a precondition.
    """

    eps_rank: float = 1e-10
    eps_check: float = 1e-8

    def __post_init__(self):
        for name in ("eps_rank", "eps_check"):
            v = getattr(self, name)
            if not 0.0 < v < 1.0:
                raise InputError(f"{name} must lie in (0, 1), got {v!r}")


DEFAULT_TOL = Tolerances()


@dataclass(frozen=True)
class HermitianEig:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        V = self.eigenvectors
        return (V * self.eigenvalues) @ V.conj().T


@dataclass(frozen=True)
class PolarDecomposition:
    omega: np.ndarray
    modulus: np.ndarray
    rank: int


def as_matrix(a) -> np.ndarray:
    """Return ``a`` as a finite square complex matrix (scalars become 1x1)."""
    m = np.asarray(a, dtype=complex)
    if m.ndim == 0:
        m = m.reshape(1, 1)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise InputError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InputError("matrix has non-finite entries")
    return m


def adj(a: np.ndarray) -> np.ndarray:
    return a.conj().T


def eye_like(a: np.ndarray) -> np.ndarray:
    return np.eye(a.shape[0], dtype=complex)


def hermitian_defect(a: np.ndarray) -> float:
    return op_norm(a - adj(a))


def _hermitian_part(a, tol: Tolerances) -> np.ndarray:
    a = as_matrix(a)
    if hermitian_defect(a) > tol.eps_check:
        raise NotHermitian(f"matrix is not Hermitian (defect {hermitian_defect(a):.3e})")
    return 0.5 * (a + adj(a))


def herm_eig(a, tol: Tolerances = DEFAULT_TOL) -> HermitianEig:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending."""
    h = _hermitian_part(a, tol)
    w, v = np.linalg.eigh(h)
    return HermitianEig(w, v)


def fun_calc(a, f: Callable[[np.ndarray], np.ndarray], tol: Tolerances = DEFAULT_TOL,
             domain: tuple[float, float] | None = None) -> np.ndarray:
    """Apply the real function ``f`` to the Hermitian matrix ``a``.

    ``f`` is evaluated pointwise on the eigenvalues (it must accept an array).
    ``domain`` is an optional closed interval; eigenvalues outside it, or
    non-finite values of ``f``, raise :class:`DomainError`.
    """
    eig = herm_eig(a, tol)
    lam = eig.eigenvalues
    if domain is not None:
        lo, hi = domain
        if np.any(lam < lo) or np.any(lam > hi):
            raise DomainError(f"spectrum [{lam.min():.6g}, {lam.max():.6g}] "
                              f"outside domain [{lo}, {hi}]")
    with np.errstate(all="ignore"):
        vals = np.asarray(f(lam), dtype=float)
    if vals.shape != lam.shape or not np.all(np.isfinite(vals)):
        raise DomainError("function is undefined on part of the spectrum")
    V = eig.eigenvectors
    return (V * vals) @ adj(V)


def sqrt_psd(a, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Square root of a positive semidefinite matrix; rounding negatives are clipped."""
    eig = herm_eig(a, tol)
    if eig.eigenvalues[0] < -tol.eps_check:
        raise DomainError(f"matrix is not positive semidefinite "
                          f"(min eigenvalue {eig.eigenvalues[0]:.3e})")
    V = eig.eigenvectors
    return (V * np.sqrt(np.clip(eig.eigenvalues, 0.0, None))) @ adj(V)


def inv_sqrt_pd(a, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """``a^{-1/2}`` for positive invertible ``a``."""
    eig = herm_eig(a, tol)
    if eig.eigenvalues[0] <= tol.eps_rank:
        raise Singular(f"matrix is not positive invertible "
                       f"(min eigenvalue {eig.eigenvalues[0]:.3e})")
    V = eig.eigenvectors
    return (V / np.sqrt(eig.eigenvalues)) @ adj(V)


def polar(z, tol: Tolerances = DEFAULT_TOL) -> PolarDecomposition:
    """Polar decomposition ``z = omega |z|``.

    Singular values ``<= eps_rank`` are treated as kernel: ``omega`` vanishes
    there and so does the returned modulus. ``z = 0`` gives ``omega = 0``.
    """
    z = as_matrix(z)
    W, s, Vh = np.linalg.svd(z)
    keep = s > tol.eps_rank
    V = adj(Vh)
    Vk = V[:, keep]
    omega = W[:, keep] @ adj(Vk)
    modulus = (Vk * s[keep]) @ adj(Vk)
    return PolarDecomposition(omega, modulus, int(keep.sum()))


def op_norm(a) -> float:
    """Largest singular value."""
    a = np.asarray(a, dtype=complex)
    if a.ndim == 0:
        return float(abs(a))
    return float(np.linalg.norm(a, 2))


def singular_values(a) -> np.ndarray:
    return np.linalg.svd(as_matrix(a), compute_uv=False)


def inverse(a, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    a = as_matrix(a)
    if singular_values(a)[-1] <= tol.eps_rank:
        raise Singular("matrix is singular to working tolerance")
    return np.linalg.inv(a)


def solve(a, b, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """``a^{-1} b`` with the same singularity gate as :func:`inverse`."""
    a = as_matrix(a)
    if singular_values(a)[-1] <= tol.eps_rank:
        raise Singular("matrix is singular to working tolerance")
    return np.linalg.solve(a, b)


def is_invertible(a, tol: Tolerances = DEFAULT_TOL) -> bool:
    return bool(singular_values(a)[-1] > tol.eps_rank)


def is_positive_invertible(a, tol: Tolerances = DEFAULT_TOL) -> bool:
    a = as_matrix(a)
    if hermitian_defect(a) > tol.eps_check:
        return False
    lam = np.linalg.eigvalsh(0.5 * (a + adj(a)))
    return bool(lam[0] > tol.eps_rank)


def support_projection(h, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Orthogonal projection onto the span of eigenvectors with eigenvalue > eps_rank."""
    eig = herm_eig(h, tol)
    V = eig.eigenvectors[:, eig.eigenvalues > tol.eps_rank]
    return V @ adj(V)


def expm_hermitian(a, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    return fun_calc(a, np.exp, tol)


def logm_pd(a, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Logarithm of a positive invertible matrix."""
    eig = herm_eig(a, tol)
    if eig.eigenvalues[0] <= tol.eps_rank:
        raise DomainError("log requires a positive invertible matrix")
    V = eig.eigenvectors
    return (V * np.log(eig.eigenvalues)) @ adj(V)


def check_disk(z, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Validate a point of the open unit ball, keeping a margin of eps_check."""
    z = as_matrix(z)
    nz = op_norm(z)
    if nz >= 1.0 - tol.eps_check:
        raise NotInDisk(f"||z|| = {nz:.12g} is not < 1")
    return z


def check_disk_pair(z0, z1, tol: Tolerances = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Validate two disk points of equal size; a 1x1 point is read as a scalar multiple of 1."""
    z0, z1 = as_matrix(z0), as_matrix(z1)
    if z0.shape != z1.shape:
        if z0.shape == (1, 1):
            z0 = z0[0, 0] * np.eye(z1.shape[0], dtype=complex)
        elif z1.shape == (1, 1):
            z1 = z1[0, 0] * np.eye(z0.shape[0], dtype=complex)
        else:
            raise DimensionMismatch(f"points have shapes {z0.shape} and {z1.shape}")
    return check_disk(z0, tol), check_disk(z1, tol)
