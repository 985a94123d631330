"""Hyperbolic part of the projective line over A.

Lines are stored through a generator on the hyperboloid
``K = {x : theta(x, x) = 1, x1 invertible}``; two generators of one line
differ by a unitary on the right. ``project`` realises the fibration
K -> D, ``x -> x2 x1^{-1}``, and ``lift`` is its global section.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    InputError,
    NotInDisk,
    NotTangent,
    Singular,
    SingularFirstComponent,
    ZeroVector,
)
from .linalg import (
    DEFAULT_TOL,
    Tolerances,
    adj,
    as_matrix,
    check_disk,
    herm_eig,
    inv_sqrt_pd,
    inverse,
    is_invertible,
    is_positive_invertible,
    op_norm,
)
from .module import BlockMatrix, PairVector, e1, inner, rho, theta


@dataclass(frozen=True)
class KPoint:
    """A generator with ``theta(x, x) = 1`` and invertible first component."""

    x: PairVector
    tol: Tolerances = field(default=DEFAULT_TOL, compare=False, repr=False)

    def __post_init__(self):
        n = self.x.n
        defect = op_norm(theta(self.x, self.x) - np.eye(n))
        if defect > self.tol.eps_check:
            raise InputError(f"theta(x, x) differs from 1 by {defect:.3e}")
        if not is_invertible(self.x.x1, self.tol):
            raise SingularFirstComponent("x1 is not invertible")

    @property
    def n(self) -> int:
        return self.x.n


def lift(z, tol: Tolerances = DEFAULT_TOL) -> KPoint:
    """Global section ``z -> (s, z s)`` with ``s = (1 - z*z)^{-1/2}``."""
    z = check_disk(z, tol)
    s = inv_sqrt_pd(np.eye(z.shape[0]) - adj(z) @ z, tol)
    return KPoint(PairVector(s, z @ s), tol)


def project(x, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """``x2 x1^{-1}``; the result must lie in D."""
    x = _pair(x)
    try:
        x1_inv = inverse(x.x1, tol)
    except Singular:
        raise SingularFirstComponent("x1 is not invertible") from None
    z = x.x2 @ x1_inv
    if op_norm(z) >= 1.0:
        raise NotInDisk(f"projected point has norm {op_norm(z):.12g}")
    return z


def _pair(x) -> PairVector:
    return x.x if isinstance(x, KPoint) else x


def normalize_theta(x: PairVector, tol: Tolerances = DEFAULT_TOL) -> KPoint:
    """Rescale a hyperbolic generator onto K: ``x theta(x, x)^{-1/2}``."""
    t = theta(x, x)
    if not is_positive_invertible(t, tol):
        raise InputError("theta(x, x) is not positive invertible")
    return KPoint(x @ inv_sqrt_pd(t, tol), tol)


def fiber_unitary(x: KPoint, y: KPoint, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """The unitary u with ``y = x u`` when x and y lie over the same disk point."""
    u = inverse(x.x.x1, tol) @ y.x.x1
    res = op_norm((x.x @ u).stacked - y.x.stacked)
    if res > tol.eps_check or op_norm(adj(u) @ u - np.eye(u.shape[0])) > tol.eps_check:
        raise InputError(f"generators span different lines (residual {res:.3e})")
    return u


def is_hyperbolic(x: PairVector, tol: Tolerances = DEFAULT_TOL) -> bool:
    return is_positive_invertible(theta(x, x), tol) and is_invertible(x.x1, tol)


class Line:
    """Hyperbolic line, stored by a K generator."""

    def __init__(self, generator: KPoint):
        self.generator = generator

    @classmethod
    def from_disk(cls, z, tol: Tolerances = DEFAULT_TOL) -> "Line":
        return cls(lift(z, tol))

    @classmethod
    def from_generator(cls, x: PairVector, tol: Tolerances = DEFAULT_TOL) -> "Line":
        return cls(normalize_theta(x, tol))

    @property
    def n(self) -> int:
        return self.generator.n

    @property
    def z(self) -> np.ndarray:
        return project(self.generator, self.generator.tol)

    def same_as(self, other: "Line", tol: Tolerances = DEFAULT_TOL) -> bool:
        return self.n == other.n and op_norm(self.z - other.z) <= tol.eps_check

    def __eq__(self, other):
        if not isinstance(other, Line):
            return NotImplemented
        return self.same_as(other, self.generator.tol)

    __hash__ = None

    def __repr__(self):
        return f"Line(n={self.n})"


def ortho_theta_generator(x: KPoint) -> PairVector:
    """``y0 = ((x1*)^{-1} x2*, 1)``, which spans the theta-complement of [x]."""
    x1, x2 = x.x.x1, x.x.x2
    return PairVector(inverse(adj(x1), x.tol) @ adj(x2), np.eye(x.n))


@dataclass(frozen=True)
class TangentVec:
    """Vector v in the theta-complement of the line ``at``."""

    at: Line
    v: PairVector
    tol: Tolerances = field(default=DEFAULT_TOL, compare=False, repr=False)

    def __post_init__(self):
        r = op_norm(theta(self.at.generator.x, self.v))
        if r > self.tol.eps_check:
            raise NotTangent(f"theta(x, v) has norm {r:.3e}")


def finsler_norm(V: TangentVec) -> float:
    """``||theta(v, v)||^{1/2}``; -theta(v, v) is positive on the complement."""
    return float(np.sqrt(op_norm(theta(V.v, V.v))))


def project_differential(x: KPoint, v: PairVector) -> np.ndarray:
    """Derivative of ``project`` at x along v: ``(v2 - z v1) x1^{-1}``."""
    z = project(x, x.tol)
    return (v.x2 - z @ v.x1) @ inverse(x.x.x1, x.tol)


@dataclass(frozen=True)
class QProjection:
    """Idempotent, rho-selfadjoint p with rho(2p - 1) positive invertible."""

    p: BlockMatrix
    tol: Tolerances = field(default=DEFAULT_TOL, compare=False, repr=False)

    def __post_init__(self):
        d = q_projection_defects(self.p)
        worst = max(d["idempotent"], d["rho_selfadjoint"])
        if worst > self.tol.eps_check or d["rho_eps_min_eig"] <= self.tol.eps_rank:
            raise InputError(f"not a rho-projection: {d}")


def q_projection_defects(p: BlockMatrix) -> dict:
    P = p.full
    r = rho(p.n).full
    eps = 2 * P - np.eye(P.shape[0])
    re = r @ eps
    return {
        "idempotent": op_norm(P @ P - P),
        "rho_selfadjoint": op_norm(r @ adj(P) @ r - P),
        "rho_eps_min_eig": float(np.linalg.eigvalsh(0.5 * (re + adj(re)))[0]),
    }


def q_projection(line: Line) -> QProjection:
    """``p(y) = x theta(x, y)``, i.e. ``p = x x* rho`` for the K generator x."""
    x = line.generator.x.stacked
    p = x @ adj(x) @ rho(line.n).full
    return QProjection(BlockMatrix.from_full(p), line.generator.tol)


def rank_one_projection_criterion(x: PairVector, tol: Tolerances = DEFAULT_TOL
                                  ) -> tuple[bool, np.ndarray]:
    """Normalise x so that ``<x b, x b>`` is a projection.

    ``b = (c^+)^{1/2}`` with ``c = <x, x>`` and ``c^+`` the pseudo-inverse.
    Returns whether ``b c b`` is idempotent, and b.
    """
    c = inner(x, x)
    if op_norm(c) <= tol.eps_rank:
        raise ZeroVector("x = 0")
    eig = herm_eig(c, tol)
    lam, V = eig.eigenvalues, eig.eigenvectors
    keep = lam > tol.eps_rank
    scale = np.zeros_like(lam)
    scale[keep] = 1.0 / np.sqrt(lam[keep])
    b = (V * scale) @ adj(V)
    e = b @ c @ b
    ok = op_norm(e @ e - e) <= tol.eps_check and op_norm(e - adj(e)) <= tol.eps_check
    return bool(ok), b


def line_at_origin(n: int) -> Line:
    return Line(KPoint(e1(n)))


def as_line(z_or_line, tol: Tolerances = DEFAULT_TOL) -> Line:
    if isinstance(z_or_line, Line):
        return z_or_line
    return Line.from_disk(as_matrix(z_or_line), tol)
