"""Command-line front end: ``opdisk distance|geodesic|crossratio|verify``.

Exit codes: 0 ok, 2 bad input, 3 numerical failure, 4 internal error.
"""
from __future__ import annotations

import argparse
import csv
import io as _stdio
import math
import sys
import time
from pathlib import Path

import numpy as np

from . import io
from .cross_ratio import cr, cr0, cross_ratio_set, endo_norm, geodesic_tuple
from .disk import dist, geodesic, limit_points, translate_to_origin
from .errors import CoincidentPoints, InputError, NumericalError, SuiteFailure
from .linalg import check_disk_pair, op_norm
from .suites import SUITES, RunConfig, evaluate_instance, run_suite

EXIT_OK, EXIT_INPUT, EXIT_NUMERICAL, EXIT_INTERNAL = 0, 2, 3, 4


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dim", type=int, default=2, help="matrix size n for random instances")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=100)
    common.add_argument("--eps-check", type=float, default=1e-8)
    common.add_argument("--eps-rank", type=float, default=1e-10)
    common.add_argument("--norm-cap", type=float, default=0.9,
                        help="random disk points have norm uniform in (0, cap]")
    common.add_argument("--allow-nonunique", action="store_true",
                        help="accept minimal-norm solutions of singular cross-ratio systems")
    common.add_argument("--out", type=Path, default=None, help="write here instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default=None)

    p = argparse.ArgumentParser(prog="opdisk", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("distance", parents=[common], help="d(z1, z2) and g_{z1}^{-1} z2")
    d.add_argument("z1", type=Path)
    d.add_argument("z2", type=Path)

    g = sub.add_parser("geodesic", parents=[common], help="sample the geodesic through z0, z1")
    g.add_argument("z0", type=Path)
    g.add_argument("z1", type=Path)
    g.add_argument("--t-min", type=float, default=0.0)
    g.add_argument("--t-max", type=float, default=1.0)
    g.add_argument("--steps", type=int, default=11)

    c = sub.add_parser("crossratio", parents=[common], help="cr(z0, z1) and its norm")
    c.add_argument("z0", type=Path)
    c.add_argument("z1", type=Path)

    v = sub.add_parser("verify", parents=[common], help="run a randomised verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--instance", type=Path, default=None,
                   help="replay one saved instance instead of sampling")
    v.add_argument("--failure-out", type=Path, default=None,
                   help="where to save the worst instance when the suite fails")
    return p


def _config(a) -> RunConfig:
    return RunConfig(dim=a.dim, seed=a.seed, samples=a.samples, eps_rank=a.eps_rank,
                     eps_check=a.eps_check, norm_cap=a.norm_cap,
                     allow_nonunique=a.allow_nonunique)


def _report(command, inputs, outputs, residuals, t0) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "residuals": [io.finite_or_none(r) for r in residuals],
        "max_residual": io.finite_or_none(max(residuals)) if residuals else 0.0,
        "elapsed_ms": (time.perf_counter() - t0) * 1e3,
    }


def cmd_distance(a, cfg) -> dict:
    t0 = time.perf_counter()
    z1, z2 = check_disk_pair(io.load_matrix(a.z1), io.load_matrix(a.z2), cfg.tol)
    d = dist(z1, z2, cfg.tol)
    w = translate_to_origin(z1, z2, cfg.tol)
    sym = abs(d - dist(z2, z1, cfg.tol))
    return _report("distance", {"z1": io.matrix_to_json(z1), "z2": io.matrix_to_json(z2)},
                   {"distance": d, "w": io.matrix_to_json(w)}, [sym], t0)


def geodesic_rows(z0, z1, t_min, t_max, steps, tol):
    """Rows ``(t, z)`` of the sampled geodesic followed by the two limit rows."""
    if steps < 2:
        raise InputError("steps must be at least 2")
    z0, z1 = check_disk_pair(z0, z1, tol)
    if op_norm(z0 - z1) <= tol.eps_check:
        raise CoincidentPoints("geodesic needs z0 != z1")
    geo = geodesic(z0, z1, tol)
    rows = [(float(t), geo.sample(t)) for t in np.linspace(t_min, t_max, steps)]
    lo, hi = limit_points(z0, z1, tol)
    return rows + [(-math.inf, lo), (math.inf, hi)]


def geodesic_csv(rows) -> str:
    n = rows[0][1].shape[0]
    idx = [f"{i}{j}" for i in range(n) for j in range(n)]
    buf = _stdio.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t"] + [f"re_{k}" for k in idx] + [f"im_{k}" for k in idx])
    for t, z in rows:
        tt = "-inf" if t == -math.inf else "+inf" if t == math.inf else repr(t)
        w.writerow([tt] + [repr(float(v)) for v in z.real.ravel()]
                   + [repr(float(v)) for v in z.imag.ravel()])
    return buf.getvalue()


def cmd_geodesic(a, cfg):
    t0 = time.perf_counter()
    z0, z1 = io.load_matrix(a.z0), io.load_matrix(a.z1)
    rows = geodesic_rows(z0, z1, a.t_min, a.t_max, a.steps, cfg.tol)
    if (a.format or "csv") == "csv":
        return geodesic_csv(rows)
    samples = [{"t": t, "z": io.matrix_to_json(z)} for t, z in rows if math.isfinite(t)]
    limits = {"minus_inf": io.matrix_to_json(rows[-2][1]), "plus_inf": io.matrix_to_json(rows[-1][1])}
    return _report("geodesic", {"z0": io.matrix_to_json(z0), "z1": io.matrix_to_json(z1),
                                "t_min": a.t_min, "t_max": a.t_max, "steps": a.steps},
                   {"samples": samples, "limits": limits}, [], t0)


def cmd_crossratio(a, cfg) -> dict:
    t0 = time.perf_counter()
    tol = cfg.tol
    z0, z1 = check_disk_pair(io.load_matrix(a.z0), io.load_matrix(a.z1), tol)
    e = cr(z0, z1, tol)
    nrm = endo_norm(e)
    two_d = 2 * dist(z0, z1, tol)
    residuals = [abs(math.log(nrm) - two_d)]
    outputs = {"coefficient": io.matrix_to_json(e.coefficient), "endo": io.endo_to_json(e),
               "endo_norm": nrm, "log_norm": math.log(nrm), "two_distance": two_d}
    # the four-line construction at the origin-based configuration
    w = translate_to_origin(z0, z1, tol)
    try:
        s = cross_ratio_set(geodesic_tuple(w, tol), tol, cfg.allow_nonunique)
        outputs["set_residual"] = op_norm(s.coefficient - cr0(w, tol).coefficient)
        residuals.append(outputs["set_residual"])
    except NumericalError as exc:
        outputs["set_residual"] = None
        outputs["set_error"] = f"{type(exc).__name__}: {exc}"
    return _report("crossratio", {"z0": io.matrix_to_json(z0), "z1": io.matrix_to_json(z1)},
                   outputs, residuals, t0)


def cmd_verify(a, cfg) -> dict:
    if a.instance is None:
        return run_suite(a.suite, cfg)
    t0 = time.perf_counter()
    inst = io.load_json(a.instance)
    if not isinstance(inst, dict) or inst.get("suite") != a.suite:
        raise InputError(f"instance file is not a {a.suite} instance")
    res, parts, err = evaluate_instance(inst, cfg)
    rep = _report("verify", {"suite": a.suite, "instance": inst},
                  {"theorem": a.suite, "components": parts, "error": err,
                   "passed": bool(res <= cfg.eps_check)}, [res], t0)
    if not res <= cfg.eps_check:
        exc = SuiteFailure(f"instance residual {res:.3e} exceeds {cfg.eps_check:.1e}", inst)
        exc.report = rep
        raise exc
    return rep


COMMANDS = {"distance": cmd_distance, "geodesic": cmd_geodesic,
            "crossratio": cmd_crossratio, "verify": cmd_verify}


def _emit(text: str, out: Path | None):
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        out.write_text(text if text.endswith("\n") else text + "\n")


def _render(result, fmt) -> str:
    if isinstance(result, str):
        return result
    if fmt == "csv":
        buf = _stdio.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "residual"])
        for i, r in enumerate(result["residuals"]):
            w.writerow([i, "" if r is None else repr(r)])
        return buf.getvalue()
    return io.dumps(result)


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        cfg = _config(args)
        result = COMMANDS[args.command](args, cfg)
        _emit(_render(result, args.format), args.out)
        return EXIT_OK
    except SuiteFailure as exc:
        report = getattr(exc, "report", None)
        if report is not None:
            _emit(_render(report, args.format), args.out)
        target = getattr(args, "failure_out", None)
        if target is not None and exc.instance is not None:
            target.write_text(io.dumps(exc.instance) + "\n")
            print(f"opdisk: failing instance written to {target}", file=sys.stderr)
        elif exc.instance is not None:
            print(io.dumps(exc.instance), file=sys.stderr)
        print(f"opdisk: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except InputError as exc:
        print(f"opdisk: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericalError as exc:
        print(f"opdisk: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except Exception as exc:  # pragma: no cover - last resort
        print(f"opdisk: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
