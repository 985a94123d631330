import json

import numpy as np
import pytest

from opdisk import sampling
from opdisk.io import finite_or_none
from opdisk.errors import InputError, SuiteFailure
from opdisk.suites import SUITES, RunConfig, evaluate_instance, run_suite


def _strip(report):
    r = dict(report)
    r.pop("elapsed_ms")
    return json.dumps(r, sort_keys=True)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_every_suite_passes(name):
    rep = run_suite(name, RunConfig(dim=3, samples=15, seed=5))
    assert rep["outputs"]["passed"]
    assert rep["max_residual"] == max(rep["residuals"])


def test_el_teo_scalar_exact():
    rep = run_suite("el_teo", RunConfig(dim=1, samples=10, seed=42))
    assert rep["max_residual"] <= 1e-12


def test_fibration_section_tight():
    rep = run_suite("fibration", RunConfig(dim=4, samples=20))
    assert rep["outputs"]["components"]["section"] <= 1e-12


def test_deterministic_across_threads():
    a = run_suite("el_coro", RunConfig(dim=2, samples=12, seed=9, threads=1))
    b = run_suite("el_coro", RunConfig(dim=2, samples=12, seed=9, threads=4))
    assert _strip(a) == _strip(b)


def test_failure_carries_replayable_instance():
    for eps in (1e-14, 1e-17):
        cfg = RunConfig(dim=3, samples=5, seed=1, eps_check=eps)
        with pytest.raises(SuiteFailure) as info:
            run_suite("el_teo", cfg)
        inst = json.loads(json.dumps(info.value.instance))
        res, _, _ = evaluate_instance(inst, cfg)
        assert finite_or_none(res) == info.value.report["max_residual"]


def test_config_validation():
    with pytest.raises(InputError):
        RunConfig(dim=0)
    with pytest.raises(InputError):
        RunConfig(norm_cap=1.0)
    with pytest.raises(InputError):
        RunConfig(eps_check=0.0)
    with pytest.raises(InputError):
        run_suite("nope", RunConfig())


def test_streams_independent_of_order():
    a = sampling.rng_for(7, 3).standard_normal(4)
    sampling.rng_for(7, 2).standard_normal(100)
    assert np.array_equal(a, sampling.rng_for(7, 3).standard_normal(4))
    assert not np.array_equal(a, sampling.rng_for(7, 4).standard_normal(4))


def test_random_disk_point_norm():
    rng = sampling.rng_for(0, 0)
    for _ in range(50):
        z = sampling.random_disk_point(rng, 3, 0.5)
        assert 0 < np.linalg.norm(z, 2) <= 0.5 + 1e-15


def test_random_invertible_condition():
    rng = sampling.rng_for(0, 1)
    for _ in range(20):
        assert np.linalg.cond(sampling.random_invertible(rng, 4)) <= 10 + 1e-9
