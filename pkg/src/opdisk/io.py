"""JSON encodings of matrices, pairs, block matrices, lines and endomorphisms.

Floats go through ``json`` which writes the shortest repr that round-trips,
so decoding an encoded matrix returns it bit for bit.
"""
from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .cross_ratio import Endo
from .errors import ParseError
from .linalg import DEFAULT_TOL, Tolerances, as_matrix
from .module import BlockMatrix, PairVector
from .projective import KPoint, Line
from .tracial import BlockAlgebra


def matrix_to_json(a) -> dict:
    a = as_matrix(a)
    return {"n": a.shape[0], "re": a.real.tolist(), "im": a.imag.tolist()}


def matrix_from_json(obj) -> np.ndarray:
    """Decode ``{"n", "re", "im"}``; a bare number is read as a 1x1 matrix."""
    if isinstance(obj, (int, float)) and not isinstance(obj, bool):
        return as_matrix(float(obj))
    if not isinstance(obj, dict) or "re" not in obj:
        raise ParseError("matrix must be an object with keys n, re, im")
    try:
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj.get("im", np.zeros_like(re)), dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"matrix entries are not numbers: {exc}") from None
    n = obj.get("n", re.shape[0] if re.ndim else None)
    if re.ndim != 2 or re.shape != (n, n) or im.shape != re.shape:
        raise ParseError(f"matrix shape mismatch: n={n}, re {re.shape}, im {im.shape}")
    if not (np.all(np.isfinite(re)) and np.all(np.isfinite(im))):
        raise ParseError("matrix has non-finite entries")
    return re + 1j * im


def pair_to_json(x: PairVector) -> dict:
    return {"x1": matrix_to_json(x.x1), "x2": matrix_to_json(x.x2)}


def pair_from_json(obj) -> PairVector:
    _require(obj, ("x1", "x2"), "pair")
    return PairVector(matrix_from_json(obj["x1"]), matrix_from_json(obj["x2"]))


def block_to_json(g: BlockMatrix) -> dict:
    return {k: matrix_to_json(getattr(g, k)) for k in ("g11", "g12", "g21", "g22")}


def block_from_json(obj) -> BlockMatrix:
    keys = ("g11", "g12", "g21", "g22")
    _require(obj, keys, "block matrix")
    return BlockMatrix(*(matrix_from_json(obj[k]) for k in keys))


def line_to_json(line: Line, with_generator: bool = True) -> dict:
    out = {"z": matrix_to_json(line.z)}
    if with_generator:
        out["generator"] = pair_to_json(line.generator.x)
    return out


def line_from_json(obj, tol: Tolerances = DEFAULT_TOL) -> Line:
    _require(obj, ("z",), "line")
    if "generator" in obj:
        line = Line(KPoint(pair_from_json(obj["generator"]), tol))
        z = matrix_from_json(obj["z"])
        if not line.same_as(Line.from_disk(z, tol), tol):
            raise ParseError("generator does not span the line of z")
        return line
    return Line.from_disk(matrix_from_json(obj["z"]), tol)


def endo_to_json(e: Endo) -> dict:
    return {"line": line_to_json(e.line), "coefficient": matrix_to_json(e.coefficient),
            "basis": "K_theta"}


def endo_from_json(obj, tol: Tolerances = DEFAULT_TOL) -> Endo:
    _require(obj, ("line", "coefficient"), "endomorphism")
    if obj.get("basis", "K_theta") != "K_theta":
        raise ParseError(f"unsupported basis {obj['basis']!r}")
    return Endo(line_from_json(obj["line"], tol), matrix_from_json(obj["coefficient"]))


def block_pattern_to_json(alg: BlockAlgebra, x) -> dict:
    return {"blocks": list(alg.block_dims), "data": matrix_to_json(x)}


def block_pattern_from_json(obj, tol: Tolerances = DEFAULT_TOL) -> tuple[BlockAlgebra, np.ndarray]:
    _require(obj, ("blocks", "data"), "block element")
    alg = BlockAlgebra(tuple(obj["blocks"]))
    return alg, alg.check(matrix_from_json(obj["data"]), tol)


def _require(obj, keys, what):
    if not isinstance(obj, dict) or any(k not in obj for k in keys):
        raise ParseError(f"{what} needs keys {', '.join(keys)}")


def load_json(path) -> object:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def load_matrix(path) -> np.ndarray:
    return matrix_from_json(load_json(path))


def finite_or_none(v: float):
    """JSON has no inf/nan; such residuals are written as null."""
    return float(v) if math.isfinite(v) else None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False)
