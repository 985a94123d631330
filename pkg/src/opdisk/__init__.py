"""Operator Poincare disk of M_n(C): Mobius geometry, projective line, cross ratios."""
from .bundle import mod0_log, transport_to_origin, verify_coro, verify_el_teo
from .cross_ratio import Endo, FourLines, cr, cr0, cross_ratio_set, endo_norm, geodesic_tuple
from .disk import dist, exp_at, geodesic, limit_points, log_at, mobius, phi_D
from .linalg import DEFAULT_TOL, Tolerances, fun_calc, polar
from .module import BlockMatrix, BorelParams, PairVector, borel_element, g_z, theta
from .projective import KPoint, Line, lift, project, q_projection
from .tracial import BlockAlgebra, central_trace, verify_commutative, verify_tracial

__version__ = "0.1.0"

__all__ = [
    "BlockAlgebra", "BlockMatrix", "BorelParams", "DEFAULT_TOL", "Endo", "FourLines",
    "KPoint", "Line", "PairVector", "Tolerances", "borel_element", "central_trace", "cr",
    "cr0", "cross_ratio_set", "dist", "endo_norm", "exp_at", "fun_calc", "g_z", "geodesic",
    "geodesic_tuple", "lift", "limit_points", "log_at", "mobius", "mod0_log", "phi_D",
    "polar", "project", "q_projection", "theta", "transport_to_origin", "verify_commutative",
    "verify_coro", "verify_el_teo", "verify_tracial",
]
