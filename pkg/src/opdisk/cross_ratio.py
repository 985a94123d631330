"""Cross ratios of lines as module endomorphisms.

An endomorphism of a line [x] is ``x b -> x a b``; it is stored as the pair
(line, a) where a is "the matrix of phi in the basis x". Changing the basis
to ``x u`` (u unitary) replaces a by ``u* a u``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .disk import translate_to_origin
from .errors import CoincidentPoints, DimensionMismatch, InputError, NoSolution
from .linalg import (
    DEFAULT_TOL,
    Tolerances,
    adj,
    as_matrix,
    check_disk,
    check_disk_pair,
    fun_calc,
    inv_sqrt_pd,
    inverse,
    is_positive_invertible,
    op_norm,
    polar,
    singular_values,
)
from .module import BlockMatrix, PairVector, g_z, theta, theta_unitary_inverse
from .projective import KPoint, Line, fiber_unitary, lift


@dataclass(frozen=True)
class Endo:
    line: Line
    coefficient: np.ndarray

    def __post_init__(self):
        c = as_matrix(self.coefficient)
        if c.shape[0] != self.line.n:
            raise DimensionMismatch("coefficient size differs from the line")
        object.__setattr__(self, "coefficient", c)

    def rebase(self, generator: KPoint, tol: Tolerances = DEFAULT_TOL) -> "Endo":
        """Same endomorphism, written in the basis ``generator`` of the same line."""
        u = fiber_unitary(self.line.generator, generator, tol)
        return Endo(Line(generator), adj(u) @ self.coefficient @ u)

    def apply(self, y: PairVector, tol: Tolerances = DEFAULT_TOL) -> PairVector:
        """Evaluate on ``y = x b``; b is recovered from the first component."""
        x = self.line.generator.x
        b = inverse(x.x1, tol) @ y.x1
        if op_norm((x @ b).stacked - y.stacked) > tol.eps_check * max(1.0, op_norm(y.stacked)):
            raise InputError("vector does not lie on the line")
        return x @ (self.coefficient @ b)

    @classmethod
    def identity(cls, line: Line) -> "Endo":
        return cls(line, np.eye(line.n, dtype=complex))


def cr0_coefficient(z, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """``(1 + |z|)(1 - |z|)^{-1}``."""
    z = check_disk(z, tol)
    m = polar(z, tol).modulus
    return fun_calc(m, lambda t: (1 + t) / (1 - t), tol)


def cr0(z, tol: Tolerances = DEFAULT_TOL) -> Endo:
    """Canonical cross ratio cr(0, z) on the line of z, in the basis lift(z).

    The coefficient commutes with ``1 - z*z`` so it is the same in the basis
    (1, z) and in lift(z). z = 0 gives the identity.
    """
    return Endo(Line(lift(z, tol)), cr0_coefficient(z, tol))


def cr(z0, z1, tol: Tolerances = DEFAULT_TOL, g: BlockMatrix | None = None) -> Endo:
    """``g cr(0, g^{-1} z1) g^{-1}``, based at the line of z1.

    g defaults to the Borel translation taking 0 to z0; any element of U(theta)
    with ``g . 0 = z0`` gives the same endomorphism.
    """
    z0, z1 = check_disk_pair(z0, z1, tol)
    if op_norm(z0 - z1) <= tol.eps_check:
        raise CoincidentPoints("cross ratio needs z0 != z1")
    if g is None:
        g = g_z(z0, tol)
        w = translate_to_origin(z0, z1, tol)
    else:
        gi = theta_unitary_inverse(g, tol)
        x = gi @ lift(z1, tol).x
        w = x.x2 @ inverse(x.x1, tol)
    base = g @ lift(w, tol).x
    return Endo(Line(KPoint(base, tol)), cr0_coefficient(w, tol))


def endo_norm(e: Endo) -> float:
    """Operator norm of the coefficient in a K basis (unitary-invariant)."""
    return op_norm(e.coefficient)


@dataclass(frozen=True)
class FourLines:
    """Four generators; boundary lines (1, a) with ||a|| = 1 are allowed."""

    g1: PairVector
    g2: PairVector
    g3: PairVector
    g4: PairVector

    def __post_init__(self):
        if len({g.n for g in self.gens}) != 1:
            raise DimensionMismatch("generators must share one size")

    @property
    def gens(self):
        return (self.g1, self.g2, self.g3, self.g4)


def geodesic_tuple(z, tol: Tolerances = DEFAULT_TOL) -> FourLines:
    """(l_{-omega}, l_0, l_z, l_{+omega}) for the geodesic through 0 and z."""
    z = check_disk(z, tol)
    one = np.eye(z.shape[0])
    om = polar(z, tol).omega
    return FourLines(PairVector(one, -om), PairVector(one, 0 * one),
                     lift(z, tol).x, PairVector(one, om))


def _solve_split(a: PairVector, b: PairVector, target: PairVector, tol: Tolerances,
                 allow_nonunique: bool) -> tuple[np.ndarray, np.ndarray]:
    """Find (p, q) with ``target = a p + b q``."""
    n = a.n
    M = np.hstack([a.stacked, b.stacked])
    rhs = target.stacked
    s = singular_values(M)
    if s[-1] > tol.eps_rank * max(1.0, s[0]):
        sol = np.linalg.solve(M, rhs)
    elif allow_nonunique:
        sol = np.linalg.lstsq(M, rhs, rcond=tol.eps_rank)[0]
        res = op_norm(M @ sol - rhs)
        if res > tol.eps_check * max(1.0, op_norm(rhs)):
            raise NoSolution(f"inconsistent decomposition (residual {res:.3e})")
    else:
        raise NoSolution("lines are not complementary; decomposition is not unique")
    return sol[:n], sol[n:]


def cross_ratio_set(f: FourLines, tol: Tolerances = DEFAULT_TOL,
                    allow_nonunique: bool = False) -> Endo:
    """Endomorphism of l3: project onto l2 along l1, then back onto l3 along l4.

    ``g3 = g2 lam + g1 mu`` and ``g2 = g3 gam + g4 eps``, so ``g3 -> g3 gam lam``.
    l3 must be hyperbolic; the coefficient is returned in its K basis.
    """
    lam, _ = _solve_split(f.g2, f.g1, f.g3, tol, allow_nonunique)
    gam, _ = _solve_split(f.g3, f.g4, f.g2, tol, allow_nonunique)
    a = gam @ lam
    t = theta(f.g3, f.g3)
    if not is_positive_invertible(t, tol):
        raise InputError("third line is not hyperbolic")
    r = inv_sqrt_pd(t, tol)
    x = KPoint(f.g3 @ r, tol)
    return Endo(Line(x), inverse(r, tol) @ a @ r)
