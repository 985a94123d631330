"""Bundle-valued inner product on tangent vectors and transport of cross ratios.

Tangent vectors at a rho-projection q are theta-symmetric block matrices X
with ``qX + Xq = X``. At the origin the geodesic towards z has generator
``M = [[0, alpha*], [alpha, 0]]`` (alpha = Log_0 z), and ``e^{M} e1 = lift(z)``;
the tangent vector itself is ``X = [M, q0] = [[0, -alpha*], [alpha, 0]]``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cross_ratio import Endo, cr, cr0, cr0_coefficient
from .disk import alpha_of, dist, translate_to_origin
from .errors import BaseMismatch, CoincidentPoints, NotTangent
from .linalg import (
    DEFAULT_TOL,
    Tolerances,
    adj,
    check_disk,
    check_disk_pair,
    expm_hermitian,
    logm_pd,
    op_norm,
    sqrt_psd,
)
from .module import BlockMatrix, PairVector, e1, g_z, rho, theta, theta_unitary_inverse
from .projective import (
    KPoint,
    Line,
    QProjection,
    TangentVec,
    finsler_norm,
    line_at_origin,
    project,
    q_projection,
)


def generator_matrix(alpha) -> BlockMatrix:
    """Hermitian ``M = [[0, alpha*], [alpha, 0]]``; ``exp(tM) e1`` traces the geodesic."""
    alpha = np.asarray(alpha, dtype=complex).reshape(np.shape(alpha) or (1, 1))
    return BlockMatrix(np.zeros_like(alpha), adj(alpha), alpha, np.zeros_like(alpha))


def tangent_at_origin(alpha) -> BlockMatrix:
    """``[M, q0] = [[0, -alpha*], [alpha, 0]]``."""
    alpha = np.asarray(alpha, dtype=complex).reshape(np.shape(alpha) or (1, 1))
    return BlockMatrix(np.zeros_like(alpha), -adj(alpha), alpha, np.zeros_like(alpha))


def tangent_defects(q: QProjection, X: BlockMatrix) -> tuple[float, float]:
    r, Q, F = rho(X.n).full, q.p.full, X.full
    return op_norm(r @ adj(F) @ r - F), op_norm(Q @ F + F @ Q - F)


def check_tangent(q: QProjection, X: BlockMatrix, tol: Tolerances = DEFAULT_TOL) -> None:
    sym, cod = tangent_defects(q, X)
    scale = max(1.0, op_norm(X.full))
    if sym > tol.eps_check * scale or cod > tol.eps_check * scale:
        raise NotTangent(f"theta-symmetry defect {sym:.3e}, codiagonal defect {cod:.3e}")


def kappa(x: KPoint, X: BlockMatrix, tol: Tolerances = DEFAULT_TOL) -> PairVector:
    """Basic 1-form ``X x``."""
    check_tangent(q_projection(Line(x)), X, tol)
    return X @ x.x


def gamma_inner(X: BlockMatrix, Y: BlockMatrix, x: KPoint,
                tol: Tolerances = DEFAULT_TOL) -> Endo:
    """``<X, Y>_x = -theta(X x, Y x)`` as an endomorphism of [x]."""
    return Endo(Line(x), -theta(kappa(x, X, tol), kappa(x, Y, tol)))


def theta_modulus(X: BlockMatrix, x: KPoint, tol: Tolerances = DEFAULT_TOL) -> Endo:
    """Positive square root of ``<X, X>_x``."""
    g = gamma_inner(X, X, x, tol)
    return Endo(g.line, sqrt_psd(g.coefficient, tol))


def mod0_log(z, tol: Tolerances = DEFAULT_TOL) -> Endo:
    """Theta-modulus of Log_0 z at the origin: ``log((1 + |z|)(1 - |z|)^{-1})``.

    This is 2 |alpha|; the root of ``<X, X>`` for the unit-speed tangent is |alpha|.
    """
    z = check_disk(z, tol)
    return Endo(line_at_origin(z.shape[0]), logm_pd(cr0_coefficient(z, tol), tol))


def transport(e: Endo, T: BlockMatrix, target: KPoint, tol: Tolerances = DEFAULT_TOL) -> Endo:
    """Push e forward by the theta-unitary T, written in the basis ``target``."""
    moved = KPoint(T @ e.line.generator.x, tol)
    if op_norm(project(moved, tol) - project(target, tol)) > tol.eps_check:
        raise BaseMismatch("transport does not land on the target line")
    return Endo(Line(moved), e.coefficient).rebase(target, tol)


def transport_to_origin(z, e: Endo, tol: Tolerances = DEFAULT_TOL) -> Endo:
    """``e^{-M} e e^{M}`` for an endomorphism e of the line of z."""
    z = check_disk(z, tol)
    if e.line.n != z.shape[0] or op_norm(e.line.z - z) > tol.eps_check:
        raise BaseMismatch("endomorphism is not based at the line of z")
    M = generator_matrix(alpha_of(z, tol))
    back = BlockMatrix.from_full(expm_hermitian(-M.full, tol))
    return transport(e, back, KPoint(e1(z.shape[0])), tol)


def verify_el_teo(z, tol: Tolerances = DEFAULT_TOL) -> float:
    """``|| exp(mod_0(Log_0 z)) - cr(0, z)_0 ||``."""
    z = check_disk(z, tol)
    lhs = expm_hermitian(mod0_log(z, tol).coefficient, tol)
    rhs = transport_to_origin(z, cr0(z, tol), tol).coefficient
    return op_norm(lhs - rhs)


@dataclass(frozen=True)
class CoroResiduals:
    modulus: float     # ||mod_{z0}(Log) - log cr(z0, z1)_{z0}||
    norm: float        # |2 |Log|_{z0} - ||log cr(z0, z1)_{z0}|| |
    distance: float    # | |Log|_{z0} - d(z0, z1) |

    @property
    def total(self) -> float:
        return max(self.modulus, self.norm, self.distance)


def log_tangent(z0, z1, tol: Tolerances = DEFAULT_TOL) -> tuple[BlockMatrix, KPoint]:
    """Tangent vector of Log_{z0}(z1) at q_{z0} together with the basis ``g e1``."""
    g = g_z(z0, tol)
    gi = theta_unitary_inverse(g, tol)
    w = translate_to_origin(z0, z1, tol)
    X = g @ tangent_at_origin(alpha_of(w, tol)) @ gi
    return X, KPoint(g @ e1(g.n), tol)


def cr_at_base(z0, z1, tol: Tolerances = DEFAULT_TOL) -> Endo:
    """cr(z0, z1) transported from the line of z1 back to z0 along the geodesic."""
    g = g_z(z0, tol)
    gi = theta_unitary_inverse(g, tol)
    M = generator_matrix(alpha_of(translate_to_origin(z0, z1, tol), tol))
    T = g @ BlockMatrix.from_full(expm_hermitian(-M.full, tol)) @ gi
    return transport(cr(z0, z1, tol), T, KPoint(g @ e1(g.n), tol), tol)


def coro_residuals(z0, z1, tol: Tolerances = DEFAULT_TOL) -> CoroResiduals:
    z0, z1 = check_disk_pair(z0, z1, tol)
    if op_norm(z0 - z1) <= tol.eps_check:
        raise CoincidentPoints("z0 = z1")
    X, x0 = log_tangent(z0, z1, tol)
    mod = 2 * theta_modulus(X, x0, tol).coefficient
    c = cr_at_base(z0, z1, tol).coefficient
    log_c = logm_pd(0.5 * (c + adj(c)), tol)
    speed = finsler_norm(TangentVec(Line(x0), X @ x0.x, tol))
    return CoroResiduals(
        modulus=op_norm(mod - log_c),
        norm=abs(2 * speed - op_norm(log_c)),
        distance=abs(speed - dist(z0, z1, tol)),
    )


def verify_coro(z0, z1, tol: Tolerances = DEFAULT_TOL) -> float:
    return coro_residuals(z0, z1, tol).total
