import json

import numpy as np
import pytest
from conftest import disk_points, seeds
from hypothesis import given
from hypothesis import strategies as st

from opdisk import io, sampling
from opdisk.cross_ratio import cr
from opdisk.errors import BlockPatternViolation, ParseError
from opdisk.projective import KPoint, Line, lift
from opdisk.tracial import BlockAlgebra


def _rt(obj):
    return json.loads(json.dumps(obj))


@given(disk_points())
def test_matrix_bit_exact(z):
    back = io.matrix_from_json(_rt(io.matrix_to_json(z)))
    assert np.array_equal(back, z)


def test_matrix_parse_errors():
    with pytest.raises(ParseError):
        io.matrix_from_json({"n": 2, "re": [[1, 0]], "im": [[0, 0]]})
    with pytest.raises(ParseError):
        io.matrix_from_json({"n": 1, "re": [["a"]], "im": [[0]]})
    with pytest.raises(ParseError):
        io.matrix_from_json([1, 2])
    assert io.matrix_from_json(0.5)[0, 0] == 0.5


@given(seeds, st.integers(1, 3))
def test_block_and_pair(seed, n):
    rng = np.random.default_rng(seed)
    g = sampling.random_theta_unitary(rng, n)
    assert np.array_equal(io.block_from_json(_rt(io.block_to_json(g))).full, g.full)
    x = lift(sampling.random_disk_point(rng, n, 0.8)).x
    assert np.array_equal(io.pair_from_json(_rt(io.pair_to_json(x))).stacked, x.stacked)


def test_line_and_endo(rng):
    z0 = sampling.random_disk_point(rng, 2, 0.6)
    z1 = sampling.random_disk_point(rng, 2, 0.6)
    e = cr(z0, z1)
    back = io.endo_from_json(_rt(io.endo_to_json(e)))
    assert back.line == e.line
    assert np.array_equal(back.coefficient, e.coefficient)
    assert np.array_equal(back.line.generator.x.stacked, e.line.generator.x.stacked)
    bare = io.line_from_json({"z": io.matrix_to_json(z1)})
    assert bare == e.line
    other = io.line_to_json(Line(KPoint(lift(z0).x)))
    other["z"] = io.matrix_to_json(z1)
    with pytest.raises(ParseError):
        io.line_from_json(other)
    with pytest.raises(ParseError):
        io.endo_from_json({**io.endo_to_json(e), "basis": "standard"})


def test_block_pattern():
    alg = BlockAlgebra((1, 2))
    x = np.diag([1.0, 2.0, 3.0])
    a, y = io.block_pattern_from_json(_rt(io.block_pattern_to_json(alg, x)))
    assert a == alg and np.array_equal(x, y)
    with pytest.raises(BlockPatternViolation):
        io.block_pattern_from_json({"blocks": [1, 2], "data": io.matrix_to_json(np.ones((3, 3)))})


def test_load_errors(tmp_path):
    with pytest.raises(ParseError):
        io.load_json(tmp_path / "missing.json")
    p = tmp_path / "bad.json"
    p.write_text("{")
    with pytest.raises(ParseError):
        io.load_json(p)
