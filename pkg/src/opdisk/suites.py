"""Randomised verification suites.

A suite is a pair (sample, evaluate). ``sample`` draws one instance and
returns it already JSON-encoded; ``evaluate`` decodes it and returns named
residuals. Because JSON floats round-trip exactly, a saved instance replays
the same numbers.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import io, sampling
from .bundle import coro_residuals, verify_el_teo
from .cross_ratio import cr0, cross_ratio_set, endo_norm, geodesic_tuple
from .disk import dist, mobius
from .errors import InputError, NumericalError, ParseError, SuiteFailure
from .linalg import Tolerances, op_norm
from .module import (
    BorelParams,
    borel_element,
    borel_factor,
    g_z,
    gamma_g,
    tau_x,
    theta_unitary_defect,
)
from .projective import (
    KPoint,
    Line,
    fiber_unitary,
    lift,
    normalize_theta,
    project,
    q_projection,
    q_projection_defects,
)
from .tracial import BlockAlgebra, verify_commutative, verify_tracial


@dataclass(frozen=True)
class RunConfig:
    dim: int = 2
    seed: int = 0
    samples: int = 100
    eps_rank: float = 1e-10
    eps_check: float = 1e-8
    norm_cap: float = 0.9
    allow_nonunique: bool = False
    threads: int | None = None

    def __post_init__(self):
        if not 1 <= self.dim <= 64:
            raise InputError(f"dim must lie in [1, 64], got {self.dim}")
        if not 0.0 < self.norm_cap < 1.0:
            raise InputError(f"norm_cap must lie in (0, 1), got {self.norm_cap}")
        if self.samples < 1:
            raise InputError("samples must be positive")
        if self.seed < 0:
            raise InputError("seed must be non-negative")
        self.tol  # validates eps_rank / eps_check

    @property
    def tol(self) -> Tolerances:
        return Tolerances(self.eps_rank, self.eps_check)


# -- instance samplers and evaluators -----------------------------------------

M, Mj = io.matrix_to_json, io.matrix_from_json


def _el_teo_sample(rng, cfg):
    return {"z": M(sampling.random_disk_point(rng, cfg.dim, cfg.norm_cap))}


def _el_teo_eval(inst, cfg):
    return {"el_teo": verify_el_teo(Mj(inst["z"]), cfg.tol)}


def _pair_sample(rng, cfg):
    return {"z0": M(sampling.random_disk_point(rng, cfg.dim, cfg.norm_cap)),
            "z1": M(sampling.random_disk_point(rng, cfg.dim, cfg.norm_cap))}


def _el_coro_eval(inst, cfg):
    return asdict(coro_residuals(Mj(inst["z0"]), Mj(inst["z1"]), cfg.tol))


def _invariance_sample(rng, cfg):
    inst = _pair_sample(rng, cfg)
    inst["g"] = io.block_to_json(sampling.random_theta_unitary(rng, cfg.dim))
    return inst


def _invariance_eval(inst, cfg):
    tol = cfg.tol
    g = io.block_from_json(inst["g"])
    z1, z2 = Mj(inst["z0"]), Mj(inst["z1"])
    d = dist(z1, z2, tol)
    dg = dist(mobius(g, z1, tol), mobius(g, z2, tol), tol)
    return {"distance": abs(d - dg)}


def _fibration_sample(rng, cfg):
    return {"z": M(sampling.random_disk_point(rng, cfg.dim, cfg.norm_cap)),
            "g": io.block_to_json(sampling.random_theta_unitary(rng, cfg.dim)),
            "u": M(sampling.random_unitary(rng, cfg.dim))}


def _fibration_eval(inst, cfg):
    tol = cfg.tol
    z, g, u = Mj(inst["z"]), io.block_from_json(inst["g"]), Mj(inst["u"])
    x = lift(z, tol)
    moved = normalize_theta(g @ x.x, tol)
    y = KPoint(x.x @ u, tol)
    d = q_projection_defects(q_projection(Line(x)).p)
    return {
        "section": op_norm(project(x, tol) - z),
        "equivariance": op_norm(project(moved, tol) - mobius(g, z, tol)),
        "fiber": op_norm(fiber_unitary(x, y, tol) - u),
        "idempotent": d["idempotent"],
        "rho_selfadjoint": d["rho_selfadjoint"],
        "rho_positive": 0.0 if d["rho_eps_min_eig"] > tol.eps_rank else float("inf"),
    }


def _commutative_sample(rng, cfg):
    return {"z0": M(sampling.random_diagonal_point(rng, cfg.dim, cfg.norm_cap)),
            "z1": M(sampling.random_diagonal_point(rng, cfg.dim, cfg.norm_cap))}


def _commutative_eval(inst, cfg):
    return {"commutative": verify_commutative(Mj(inst["z0"]), Mj(inst["z1"]), cfg.tol)}


def _tracial_sample(rng, cfg):
    alg = BlockAlgebra(sampling.random_blocks(rng, cfg.dim))
    return {"blocks": list(alg.block_dims),
            "z0": M(sampling.random_block_point(rng, alg, cfg.norm_cap)),
            "z1": M(sampling.random_block_point(rng, alg, cfg.norm_cap))}


def _tracial_eval(inst, cfg):
    alg = BlockAlgebra(tuple(inst["blocks"]))
    return {"tracial": verify_tracial(alg, Mj(inst["z0"]), Mj(inst["z1"]), cfg.tol)}


def _crossratio_set_eval(inst, cfg):
    tol = cfg.tol
    z = Mj(inst["z"])
    e = cross_ratio_set(geodesic_tuple(z, tol), tol, cfg.allow_nonunique)
    c = cr0(z, tol)
    return {"canonical": op_norm(e.coefficient - c.coefficient),
            "norm_distance": abs(np.log(endo_norm(c)) - 2 * dist(0, z, tol))}


def _borel_sample(rng, cfg):
    p = sampling.random_borel_params(rng, cfg.dim)
    return {"g": M(p.g), "x": M(p.x),
            "z": M(sampling.random_disk_point(rng, cfg.dim, cfg.norm_cap))}


def _borel_eval(inst, cfg):
    tol = cfg.tol
    p = BorelParams(Mj(inst["g"]), Mj(inst["x"]))
    b = borel_element(p, tol)
    q = borel_factor(b, tol)
    z = Mj(inst["z"])
    gz = g_z(z, tol)
    zero = np.zeros_like(z)
    return {
        "round_trip": max(op_norm(q.g - p.g), op_norm(q.x - p.x)),
        "factorization": op_norm((gamma_g(p.g) @ tau_x(p.x)).full - b.full),
        "borel_theta_unitary": theta_unitary_defect(b),
        "g_z_theta_unitary": theta_unitary_defect(gz),
        "g_z_origin": op_norm(mobius(gz, zero, tol) - z),
    }


@dataclass(frozen=True)
class Suite:
    name: str
    sample: object
    evaluate: object
    doc: str = field(default="")


SUITES = {s.name: s for s in [
    Suite("el_teo", _el_teo_sample, _el_teo_eval,
          "exp of the theta-modulus of Log_0 z equals cr(0, z) moved to the origin"),
    Suite("el_coro", _pair_sample, _el_coro_eval,
          "the same identity at a base point z0, plus the norm and distance laws"),
    Suite("invariance", _invariance_sample, _invariance_eval,
          "d(g z1, g z2) = d(z1, z2) for g in U(theta)"),
    Suite("fibration", _fibration_sample, _fibration_eval,
          "project o lift = id, equivariance, fibres are unitary orbits, rho-projections"),
    Suite("commutative", _commutative_sample, _commutative_eval,
          "log cr(z0, z1) = 2 |Log_{z0} z1| for diagonal points"),
    Suite("tracial", _tracial_sample, _tracial_eval,
          "central-trace form of the same identity on a random block algebra"),
    Suite("crossratio_set", _el_teo_sample, _crossratio_set_eval,
          "four-line cross ratio of the geodesic tuple equals cr(0, z); log norm = 2 d"),
    Suite("borel", _borel_sample, _borel_eval,
          "Borel factorisation round trip and the translations g_z"),
]}


# -- running ------------------------------------------------------------------

def evaluate_instance(inst: dict, cfg: RunConfig) -> tuple[float, dict, str | None]:
    """Residuals of one JSON instance; breakdowns count as +inf."""
    try:
        suite = SUITES[inst["suite"]]
    except (KeyError, TypeError):
        raise ParseError("instance needs a known 'suite' field") from None
    try:
        parts = suite.evaluate(inst, cfg)
    except ParseError:
        raise
    except (NumericalError, InputError) as exc:
        # a precondition failing at this tolerance is a failed instance too
        return float("inf"), {}, f"{type(exc).__name__}: {exc}"
    return max(parts.values()), parts, None


def _one(name: str, cfg: RunConfig, index: int) -> tuple[dict, float, dict, str | None]:
    rng = sampling.rng_for(cfg.seed, index)
    inst = {"suite": name, "dim": cfg.dim, "seed": cfg.seed, "index": index}
    inst.update(SUITES[name].sample(rng, cfg))
    res, parts, err = evaluate_instance(inst, cfg)
    return inst, res, parts, err


def thread_count(cfg: RunConfig) -> int:
    if cfg.threads is not None:
        return max(1, cfg.threads)
    env = os.environ.get("OPDISK_THREADS")
    cap = int(env) if env and env.isdigit() and int(env) > 0 else (os.cpu_count() or 1)
    return max(1, min(cap, 8))


def run_suite(name: str, cfg: RunConfig, raise_on_failure: bool = True) -> dict:
    """Run ``cfg.samples`` instances and build the report.

    Instances are merged by index, so the report does not depend on threading.
    Raises :class:`SuiteFailure` carrying the worst instance when
    ``max_residual > eps_check``.
    """
    if name not in SUITES:
        raise InputError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    t0 = time.perf_counter()
    workers = thread_count(cfg)
    if workers == 1:
        results = [_one(name, cfg, i) for i in range(cfg.samples)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda i: _one(name, cfg, i), range(cfg.samples)))
    residuals = [r[1] for r in results]
    worst = int(np.argmax(residuals))
    max_res = residuals[worst]
    components = {}
    for _, _, parts, _ in results:
        for k, v in parts.items():
            components[k] = max(components.get(k, 0.0), v)
    errors = [{"index": r[0]["index"], "error": r[3]} for r in results if r[3]]
    report = {
        "command": "verify",
        "inputs": {"suite": name, **{k: v for k, v in asdict(cfg).items() if k != "threads"}},
        "outputs": {
            "theorem": name,
            "n": cfg.dim,
            "samples": cfg.samples,
            "max_residual": io.finite_or_none(max_res),
            "worst_index": worst,
            "components": {k: io.finite_or_none(v) for k, v in components.items()},
            "errors": errors,
            "passed": bool(max_res <= cfg.eps_check),
        },
        "residuals": [io.finite_or_none(r) for r in residuals],
        "max_residual": io.finite_or_none(max_res),
        "elapsed_ms": (time.perf_counter() - t0) * 1e3,
    }
    if raise_on_failure and not max_res <= cfg.eps_check:
        exc = SuiteFailure(f"suite {name}: max residual {max_res:.3e} exceeds "
                           f"eps_check {cfg.eps_check:.1e} (instance {worst})",
                           instance=results[worst][0])
        exc.report = report
        raise exc
    return report
