import numpy as np
import pytest
from conftest import disk_points, opn, seeds
from hypothesis import given
from hypothesis import strategies as st

from opdisk import sampling
from opdisk.disk import mobius
from opdisk.errors import InputError, NotTangent, SingularFirstComponent, ZeroVector
from opdisk.module import PairVector, e1, e2, rho, theta
from opdisk.projective import (
    KPoint,
    Line,
    TangentVec,
    fiber_unitary,
    finsler_norm,
    is_hyperbolic,
    lift,
    normalize_theta,
    ortho_theta_generator,
    project,
    project_differential,
    q_projection,
    q_projection_defects,
    rank_one_projection_criterion,
)


def test_lift_examples():
    assert np.allclose(lift(np.zeros((2, 2))).x.stacked, e1(2).stacked)
    x = lift(0.5).x
    assert abs(x.x1[0, 0] - 1.154700538379) < 1e-12
    assert abs(x.x2[0, 0] - 0.577350269190) < 1e-12


def test_project_examples():
    assert opn(project(e1(2))) == 0
    assert abs(project(lift(0.5))[0, 0] - 0.5) < 1e-15
    x = PairVector(2 * np.eye(2), np.eye(2))
    assert np.allclose(project(x), 0.5 * np.eye(2))
    with pytest.raises(SingularFirstComponent):
        project(e2(2))


def test_kpoint_validation():
    with pytest.raises(InputError):
        KPoint(PairVector(2 * np.eye(2), np.eye(2)))


@given(disk_points())
def test_section(z):
    x = lift(z)
    assert opn(theta(x.x, x.x) - np.eye(z.shape[0])) <= 1e-9
    assert opn(project(x) - z) <= 1e-12


@given(seeds, st.integers(1, 4))
def test_equivariance_and_fibres(seed, n):
    rng = np.random.default_rng(seed)
    z = sampling.random_disk_point(rng, n, 0.9)
    g = sampling.random_theta_unitary(rng, n)
    x = lift(z)
    assert opn(project(normalize_theta(g @ x.x)) - mobius(g, z)) <= 1e-9
    a = sampling.random_invertible(rng, n)
    assert opn(project(x.x @ a) - z) <= 1e-9
    u = sampling.random_unitary(rng, n)
    assert opn(fiber_unitary(x, KPoint(x.x @ u)) - u) <= 1e-9


def test_line_equality():
    x = lift(0.3 * np.eye(2))
    u = sampling.random_unitary(np.random.default_rng(1), 2)
    assert Line(x) == Line(KPoint(x.x @ u))
    assert Line(x) != Line.from_disk(0.2 * np.eye(2))


def test_ortho_generator_examples():
    assert np.allclose(ortho_theta_generator(KPoint(e1(2))).stacked, e2(2).stacked)
    y = ortho_theta_generator(lift(0.5))
    assert np.allclose(y.stacked.ravel(), [0.5, 1.0])
    assert abs(theta(y, y)[0, 0] + 0.75) < 1e-14


@given(disk_points())
def test_ortho_generator_properties(z):
    x = lift(z)
    y = ortho_theta_generator(x)
    assert opn(theta(x.x, y)) <= 1e-10
    assert np.linalg.eigvalsh(-theta(y, y))[0] > 0


def test_q_projection_examples():
    p = q_projection(Line(KPoint(e1(1)))).p.full
    assert np.allclose(p, np.diag([1, 0]))
    p = q_projection(Line.from_disk(0.5)).p.full
    assert np.allclose(p, np.array([[1, -0.5], [0.5, -0.25]]) / 0.75)


@given(disk_points())
def test_q_projection_invariants(z):
    line = Line.from_disk(z)
    q = q_projection(line)
    d = q_projection_defects(q.p)
    assert d["idempotent"] <= 1e-9 * max(1, opn(q.p.full)) ** 2
    assert d["rho_selfadjoint"] <= 1e-9 * max(1, opn(q.p.full))
    assert d["rho_eps_min_eig"] > 0
    x = line.generator.x
    assert opn((q.p @ x).stacked - x.stacked) <= 1e-9 * max(1, opn(q.p.full))
    w = ortho_theta_generator(line.generator)
    assert opn((q.p @ w).stacked) <= 1e-9 * max(1, opn(q.p.full))
    r = rho(z.shape[0]).full
    assert np.allclose(r @ q.p.full.conj().T @ r, q.p.full, atol=1e-8)


def test_finsler_examples():
    l0 = Line(KPoint(e1(2)))
    assert finsler_norm(TangentVec(l0, PairVector(np.zeros((2, 2)), np.zeros((2, 2))))) == 0
    a = np.array([[0.3, 1j], [0.2, -0.5]])
    v = e2(2) @ a
    assert abs(finsler_norm(TangentVec(l0, v)) - opn(a)) < 1e-12
    assert opn(project_differential(l0.generator, v) - a) < 1e-14
    with pytest.raises(NotTangent):
        TangentVec(l0, e1(2))


@given(seeds, st.integers(1, 4))
def test_finsler_generator_independent(seed, n):
    rng = np.random.default_rng(seed)
    z = sampling.random_disk_point(rng, n, 0.8)
    x = lift(z)
    v = ortho_theta_generator(x) @ sampling.complex_gaussian(rng, n)
    u = sampling.random_unitary(rng, n)
    a = finsler_norm(TangentVec(Line(x), v))
    b = finsler_norm(TangentVec(Line(KPoint(x.x @ u)), v @ u))
    assert abs(a - b) <= 1e-10 * max(1, a)


def test_is_hyperbolic():
    assert is_hyperbolic(e1(2)) and not is_hyperbolic(e2(2))
    assert is_hyperbolic(PairVector(np.eye(2), 0.4 * np.eye(2)))
    u = sampling.random_unitary(np.random.default_rng(0), 2)
    assert not is_hyperbolic(PairVector(np.eye(2), u))


def test_rank_one_criterion():
    ok, b = rank_one_projection_criterion(e1(2))
    assert ok and np.allclose(b, np.eye(2))
    ok, b = rank_one_projection_criterion(PairVector(2.0, 0.0))
    assert ok and abs(b[0, 0] - 0.5) < 1e-15
    ok, b = rank_one_projection_criterion(PairVector(np.diag([1, 0]), np.zeros((2, 2))))
    assert ok and np.allclose(b, np.diag([1, 0]))
    with pytest.raises(ZeroVector):
        rank_one_projection_criterion(PairVector(np.zeros((2, 2)), np.zeros((2, 2))))
