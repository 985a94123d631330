"""The module A^2 over A = M_n(C), its two forms, and the group U(theta).

A :class:`PairVector` is a column ``(x1, x2)`` of algebra elements and a
:class:`BlockMatrix` a 2x2 matrix of algebra elements; both are backed by a
single stacked ndarray so that products are plain matrix products.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotBorel, NotThetaUnitary, Singular, SingularG
from .linalg import (
    DEFAULT_TOL,
    Tolerances,
    adj,
    as_matrix,
    check_disk,
    inv_sqrt_pd,
    inverse,
    is_invertible,
    is_positive_invertible,
    op_norm,
)


class PairVector:
    """Element ``(x1, x2)`` of A^2, stored as a (2n, n) array."""

    __array_ufunc__ = None  # let ``ndarray @ PairVector`` defer to us

    def __init__(self, x1, x2):
        x1, x2 = as_matrix(x1), as_matrix(x2)
        if x1.shape != x2.shape:
            raise DimensionMismatch(f"components have shapes {x1.shape} and {x2.shape}")
        self.stacked = np.vstack([x1, x2])
        self.stacked.flags.writeable = False

    @classmethod
    def from_stacked(cls, s):
        s = np.asarray(s, dtype=complex)
        n = s.shape[1]
        if s.shape != (2 * n, n):
            raise DimensionMismatch(f"stacked pair must be (2n, n), got {s.shape}")
        return cls(s[:n], s[n:])

    @property
    def n(self) -> int:
        return self.stacked.shape[1]

    @property
    def x1(self) -> np.ndarray:
        return self.stacked[: self.n]

    @property
    def x2(self) -> np.ndarray:
        return self.stacked[self.n:]

    def __matmul__(self, a):
        """Right module action ``x . a``."""
        return PairVector.from_stacked(self.stacked @ as_matrix(a))

    def __add__(self, other):
        _check_same(self, other)
        return PairVector.from_stacked(self.stacked + other.stacked)

    def __sub__(self, other):
        _check_same(self, other)
        return PairVector.from_stacked(self.stacked - other.stacked)

    def __neg__(self):
        return PairVector.from_stacked(-self.stacked)

    def __repr__(self):
        return f"PairVector(n={self.n})"


class BlockMatrix:
    """Element of M_2(A), stored as a (2n, 2n) array."""

    __array_ufunc__ = None

    def __init__(self, g11, g12, g21, g22):
        blocks = [as_matrix(b) for b in (g11, g12, g21, g22)]
        if len({b.shape for b in blocks}) != 1:
            raise DimensionMismatch("blocks must share one shape")
        self.full = np.block([[blocks[0], blocks[1]], [blocks[2], blocks[3]]])
        self.full.flags.writeable = False

    @classmethod
    def from_full(cls, f):
        f = np.asarray(f, dtype=complex)
        if f.ndim != 2 or f.shape[0] != f.shape[1] or f.shape[0] % 2:
            raise DimensionMismatch(f"full block matrix must be (2n, 2n), got {f.shape}")
        n = f.shape[0] // 2
        return cls(f[:n, :n], f[:n, n:], f[n:, :n], f[n:, n:])

    @classmethod
    def identity(cls, n: int):
        return cls.from_full(np.eye(2 * n, dtype=complex))

    @classmethod
    def diag(cls, a, b):
        a = as_matrix(a)
        z = np.zeros_like(a)
        return cls(a, z, z, b)

    @property
    def n(self) -> int:
        return self.full.shape[0] // 2

    g11 = property(lambda self: self.full[: self.n, : self.n])
    g12 = property(lambda self: self.full[: self.n, self.n:])
    g21 = property(lambda self: self.full[self.n:, : self.n])
    g22 = property(lambda self: self.full[self.n:, self.n:])

    @property
    def H(self):
        return BlockMatrix.from_full(adj(self.full))

    def __matmul__(self, other):
        if isinstance(other, BlockMatrix):
            _check_same(self, other)
            return BlockMatrix.from_full(self.full @ other.full)
        if isinstance(other, PairVector):
            _check_same(self, other)
            return PairVector.from_stacked(self.full @ other.stacked)
        return NotImplemented

    def __add__(self, other):
        _check_same(self, other)
        return BlockMatrix.from_full(self.full + other.full)

    def __sub__(self, other):
        _check_same(self, other)
        return BlockMatrix.from_full(self.full - other.full)

    def __mul__(self, c):
        return BlockMatrix.from_full(self.full * c)

    __rmul__ = __mul__

    def __neg__(self):
        return BlockMatrix.from_full(-self.full)

    def __repr__(self):
        return f"BlockMatrix(n={self.n})"


def _check_same(a, b):
    if a.n != b.n:
        raise DimensionMismatch(f"dimension {a.n} vs {b.n}")


def e1(n: int) -> PairVector:
    return PairVector(np.eye(n), np.zeros((n, n)))


def e2(n: int) -> PairVector:
    return PairVector(np.zeros((n, n)), np.eye(n))


def rho(n: int) -> BlockMatrix:
    """The signature matrix diag(1, -1)."""
    return BlockMatrix.diag(np.eye(n), -np.eye(n))


def inner(x: PairVector, y: PairVector) -> np.ndarray:
    """A-valued inner product ``x1* y1 + x2* y2``."""
    _check_same(x, y)
    return adj(x.stacked) @ y.stacked


def theta(x: PairVector, y: PairVector) -> np.ndarray:
    """Indefinite form ``x1* y1 - x2* y2``."""
    _check_same(x, y)
    return adj(x.x1) @ y.x1 - adj(x.x2) @ y.x2


def is_regular(x: PairVector, tol: Tolerances = DEFAULT_TOL) -> bool:
    return is_positive_invertible(inner(x, x), tol)


def theta_unitary_defect(g: BlockMatrix) -> float:
    r = rho(g.n).full
    return op_norm(adj(g.full) @ r @ g.full - r)


def is_theta_unitary(g: BlockMatrix, tol: Tolerances = DEFAULT_TOL) -> bool:
    return theta_unitary_defect(g) <= tol.eps_check and is_invertible(g.full, tol)


def check_theta_unitary(g: BlockMatrix, tol: Tolerances = DEFAULT_TOL) -> None:
    if not is_theta_unitary(g, tol):
        raise NotThetaUnitary(f"g* rho g - rho has norm {theta_unitary_defect(g):.3e}")


def theta_unitary_inverse(g: BlockMatrix, tol: Tolerances = DEFAULT_TOL) -> BlockMatrix:
    """``g^{-1} = rho g* rho`` for g in U(theta)."""
    check_theta_unitary(g, tol)
    r = rho(g.n).full
    return BlockMatrix.from_full(r @ adj(g.full) @ r)


@dataclass(frozen=True)
class BorelParams:
    """Parameters (g, x) of the Borel subgroup: g invertible, x anti-Hermitian."""

    g: np.ndarray
    x: np.ndarray


def borel_element(p: BorelParams, tol: Tolerances = DEFAULT_TOL) -> BlockMatrix:
    g, x = as_matrix(p.g), as_matrix(p.x)
    if g.shape != x.shape:
        raise DimensionMismatch("g and x must have the same shape")
    if op_norm(x + adj(x)) > tol.eps_check:
        raise NotBorel("x must be anti-Hermitian")
    try:
        ghat = adj(inverse(g, tol))
    except Singular as exc:
        raise SingularG(str(exc)) from None
    s, d = 0.5 * (g + ghat), 0.5 * (g - ghat)
    gx = ghat @ x
    return BlockMatrix(s - gx, d - gx, d + gx, s + gx)


def gamma_g(g) -> BlockMatrix:
    """The G_theta factor of a Borel element."""
    return borel_element(BorelParams(g, np.zeros_like(as_matrix(g))))


def tau_x(x) -> BlockMatrix:
    """The T_theta factor ``[[1-x, -x], [x, 1+x]]``."""
    x = as_matrix(x)
    one = np.eye(x.shape[0])
    return BlockMatrix(one - x, -x, x, one + x)


def borel_factor(gt: BlockMatrix, tol: Tolerances = DEFAULT_TOL) -> BorelParams:
    """Recover (g, x) from a Borel element; the four blocks sum to 2g."""
    g = 0.5 * (gt.g11 + gt.g12 + gt.g21 + gt.g22)
    try:
        ghat = adj(inverse(g, tol))
    except Singular:
        raise NotBorel("recovered g is singular") from None
    x = adj(g) @ (gt.g21 - 0.5 * (g - ghat))
    if op_norm(x + adj(x)) > tol.eps_check:
        raise NotBorel("recovered x is not anti-Hermitian")
    x = 0.5 * (x - adj(x))
    p = BorelParams(g, x)
    err = op_norm(borel_element(p, tol).full - gt.full)
    if err > tol.eps_check * max(1.0, op_norm(gt.full)):
        raise NotBorel(f"Borel reconstruction residual {err:.3e}")
    return p


def g_z_params(z, tol: Tolerances = DEFAULT_TOL) -> BorelParams:
    """Borel parameters of the translation taking 0 to z."""
    z = check_disk(z, tol)
    one = np.eye(z.shape[0])
    s = inv_sqrt_pd(one - adj(z) @ z, tol)
    return BorelParams((one + z) @ s, 0.5 * s @ (z - adj(z)) @ s)


def g_z(z, tol: Tolerances = DEFAULT_TOL) -> BlockMatrix:
    """The distinguished Borel element with ``g_z . 0 = z``."""
    return borel_element(g_z_params(z, tol), tol)


def g_z_closed_form(z, tol: Tolerances = DEFAULT_TOL) -> BlockMatrix:
    """``g_z`` written out blockwise (independent of :func:`borel_element`)."""
    z = check_disk(z, tol)
    one = np.eye(z.shape[0])
    s = inv_sqrt_pd(one - adj(z) @ z, tol)
    a = inverse(one + adj(z), tol)
    return BlockMatrix(s, a @ adj(z) @ (z + one) @ s, z @ s, a @ (z + one) @ s)


def g_z_inverse(z, tol: Tolerances = DEFAULT_TOL) -> BlockMatrix:
    return theta_unitary_inverse(g_z(z, tol), tol)


def g_z_inverse_closed_form(z, tol: Tolerances = DEFAULT_TOL) -> BlockMatrix:
    z = check_disk(z, tol)
    one = np.eye(z.shape[0])
    s = inv_sqrt_pd(one - adj(z) @ z, tol)
    b = inverse(one + z, tol)
    zs = adj(z)
    return BlockMatrix(s @ (one + z) @ b, -s @ zs @ (one + z) @ b,
                       -s @ (one + zs) @ z @ b, s @ (one + zs) @ b)
