"""Geometry of the operator unit disk D = {z : ||z|| < 1}.

Mobius action of U(theta), geodesics, Exp/Log at a point, the invariant
distance, limit points on the boundary and the embedding into positive
2x2 block matrices.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CoincidentPoints, NotBoundary, Singular, SingularDenominator
from .linalg import (
    DEFAULT_TOL,
    Tolerances,
    adj,
    as_matrix,
    check_disk,
    check_disk_pair,
    fun_calc,
    inverse,
    op_norm,
    polar,
    sqrt_psd,
    support_projection,
)
from .module import BlockMatrix, check_theta_unitary, g_z


def _fractional(g: BlockMatrix, a: np.ndarray, tol: Tolerances) -> np.ndarray:
    den = g.g11 + g.g12 @ a
    try:
        den_inv = inverse(den, tol)
    except Singular:
        raise SingularDenominator("g11 + g12 a is not invertible") from None
    return (g.g21 + g.g22 @ a) @ den_inv


def mobius(g: BlockMatrix, z, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """``g . z = (g21 + g22 z)(g11 + g12 z)^{-1}``."""
    check_theta_unitary(g, tol)
    z = check_disk(z, tol)
    return _fractional(g, z, tol)


def translate_to_origin(z0, z1, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """``g_{z0}^{-1} . z1`` from its closed form.

    ``(1-z0*z0)^{-1/2} (1+z0*)(1+z0)^{-1} (z1-z0)(1-z0*z1)^{-1} (1-z0*z0)^{1/2}``
    """
    z0, z1 = check_disk_pair(z0, z1, tol)
    one = np.eye(z0.shape[0])
    d = one - adj(z0) @ z0
    r = sqrt_psd(d, tol)
    return (inverse(r, tol) @ (one + adj(z0)) @ inverse(one + z0, tol) @ (z1 - z0)
            @ inverse(one - adj(z0) @ z1, tol) @ r)


def artanh_modulus(z, tol: Tolerances = DEFAULT_TOL):
    """Return ``(omega, |z|, artanh|z|)`` for z in D."""
    z = check_disk(z, tol)
    pd = polar(z, tol)
    return pd.omega, pd.modulus, fun_calc(pd.modulus, np.arctanh, tol)


def alpha_of(z, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Initial velocity of the geodesic from 0 to z: ``omega * artanh|z|``."""
    omega, _, at = artanh_modulus(z, tol)
    return omega @ at


def alpha_series(z, terms: int) -> np.ndarray:
    """Partial sum ``z * sum_{k<terms} (z*z)^k / (2k+1)``; used as an oracle."""
    z = as_matrix(z)
    zz = adj(z) @ z
    acc = np.zeros_like(z)
    power = np.eye(z.shape[0], dtype=complex)
    for k in range(terms):
        acc = acc + power / (2 * k + 1)
        power = power @ zz
    return z @ acc


def exp0(alpha, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    pd = polar(alpha, tol)
    return pd.omega @ fun_calc(pd.modulus, np.tanh, tol)


def log0(z, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    return alpha_of(z, tol)


def exp_at(z0, v, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Inverse of :func:`log_at`: ``g_{z0} . exp0(v)``."""
    z0 = check_disk(z0, tol)
    return mobius(g_z(z0, tol), exp0(v, tol), tol)


def log_at(z0, z1, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Tangent vector at z0 pointing to z1, expressed at the origin."""
    return log0(translate_to_origin(z0, z1, tol), tol)


def dist0(z, tol: Tolerances = DEFAULT_TOL) -> float:
    return float(np.arctanh(op_norm(check_disk(z, tol))))


def dist(z1, z2, tol: Tolerances = DEFAULT_TOL) -> float:
    """Invariant distance ``artanh ||g_{z1}^{-1} . z2||``."""
    return dist0(translate_to_origin(z1, z2, tol), tol)


@dataclass(frozen=True)
class GeodesicThroughOrigin:
    alpha: np.ndarray
    omega: np.ndarray
    modulus_alpha: np.ndarray
    tol: Tolerances = DEFAULT_TOL

    def sample(self, t: float) -> np.ndarray:
        return self.omega @ fun_calc(t * self.modulus_alpha, np.tanh, self.tol)

    def limit(self, sign: int = 1) -> np.ndarray:
        """Limit as t -> sign * inf: ``sign * omega``."""
        return sign * self.omega


def geodesic_origin(z, tol: Tolerances = DEFAULT_TOL) -> GeodesicThroughOrigin:
    omega, _, at = artanh_modulus(z, tol)
    return GeodesicThroughOrigin(omega @ at, omega, at, tol)


@dataclass(frozen=True)
class Geodesic:
    translate: BlockMatrix
    base: GeodesicThroughOrigin
    tol: Tolerances = DEFAULT_TOL

    def sample(self, t: float) -> np.ndarray:
        return _fractional(self.translate, self.base.sample(t), self.tol)

    def limit(self, sign: int = 1) -> np.ndarray:
        return boundary_action(self.translate, self.base.limit(sign), self.tol)


def geodesic(z0, z1, tol: Tolerances = DEFAULT_TOL) -> Geodesic:
    z0, z1 = check_disk_pair(z0, z1, tol)
    w = translate_to_origin(z0, z1, tol)
    return Geodesic(g_z(z0, tol), geodesic_origin(w, tol), tol)


def check_boundary(a, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    a = as_matrix(a)
    if abs(op_norm(a) - 1.0) > tol.eps_check:
        raise NotBoundary(f"||a|| = {op_norm(a):.12g} is not 1")
    return a


def boundary_action(g: BlockMatrix, a, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    check_theta_unitary(g, tol)
    a = check_boundary(a, tol)
    return _fractional(g, a, tol)


def limit_points(z0, z1, tol: Tolerances = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Endpoints at t = -inf and t = +inf of the geodesic through z0 and z1."""
    z0, z1 = check_disk_pair(z0, z1, tol)
    if op_norm(z0 - z1) <= tol.eps_check:
        raise CoincidentPoints("limit points need two distinct points")
    geo = geodesic(z0, z1, tol)
    if op_norm(geo.base.omega) == 0.0:
        raise CoincidentPoints("initial velocity vanishes")
    return geo.limit(-1), geo.limit(+1)


def phi_D(a, tol: Tolerances = DEFAULT_TOL) -> BlockMatrix:
    """Embedding of D into positive invertible 2x2 block matrices."""
    a = check_disk(a, tol)
    one = np.eye(a.shape[0])
    r = inverse(one - adj(a) @ a, tol)
    return BlockMatrix(2 * r - one, -2 * r @ adj(a),
                       -2 * a @ r, 2 * a @ r @ adj(a) + one)


def boundary_defect_factor(a, tol: Tolerances = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Write ``1 - a*a = h q h`` with h positive invertible and q a projection."""
    a = as_matrix(a)
    if op_norm(a) > 1.0 + tol.eps_check:
        raise NotBoundary("defect factorisation needs ||a|| <= 1")
    one = np.eye(a.shape[0])
    d = one - adj(a) @ a
    d = 0.5 * (d + adj(d))
    q = support_projection(d, tol)
    h = sqrt_psd(d + (one - q), tol)
    return h, q
