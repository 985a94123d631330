import numpy as np
import pytest
from conftest import disk_points, opn, seeds
from hypothesis import given
from hypothesis import strategies as st

from opdisk import sampling
from opdisk.disk import mobius
from opdisk.errors import DimensionMismatch, NotBorel, NotThetaUnitary, SingularG
from opdisk.module import (
    BlockMatrix,
    BorelParams,
    PairVector,
    borel_element,
    borel_factor,
    check_theta_unitary,
    e1,
    e2,
    g_z,
    g_z_closed_form,
    g_z_inverse,
    g_z_inverse_closed_form,
    gamma_g,
    inner,
    is_regular,
    is_theta_unitary,
    rho,
    tau_x,
    theta,
    theta_unitary_inverse,
)


def test_inner_and_theta_examples():
    n = 2
    assert np.allclose(inner(e1(n), e1(n)), np.eye(n))
    assert np.allclose(inner(e1(n), e2(n)), 0)
    assert np.allclose(theta(e2(n), e2(n)), -np.eye(n))
    z = np.array([[0.1, 0.2j], [0.0, -0.3]])
    x = PairVector(np.eye(2), z)
    assert np.allclose(inner(x, x), np.eye(2) + z.conj().T @ z)
    assert np.allclose(theta(x, x), np.eye(2) - z.conj().T @ z)
    assert np.allclose(theta(x, x), inner(x, rho(2) @ x))


def test_regular():
    assert is_regular(e1(2))
    assert not is_regular(PairVector(np.diag([1, 0]), np.zeros((2, 2))))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        PairVector(np.eye(2), np.eye(3))
    with pytest.raises(DimensionMismatch):
        inner(e1(2), e1(3))


def test_pair_right_action():
    a = np.array([[1, 2], [3, 4j]])
    x = PairVector(np.eye(2), 2 * np.eye(2))
    y = x @ a
    assert np.allclose(y.x1, a) and np.allclose(y.x2, 2 * a)


def test_theta_unitary_examples():
    assert is_theta_unitary(BlockMatrix.identity(2))
    assert is_theta_unitary(rho(2))
    with pytest.raises(NotThetaUnitary):
        check_theta_unitary(BlockMatrix.from_full(2 * np.eye(4)))


def test_borel_validation():
    with pytest.raises(NotBorel):
        borel_element(BorelParams(np.eye(2), np.eye(2)))
    with pytest.raises(SingularG):
        borel_element(BorelParams(np.diag([1.0, 0.0]), np.zeros((2, 2))))


def test_borel_identity():
    assert np.allclose(borel_element(BorelParams(np.eye(3), np.zeros((3, 3)))).full, np.eye(6))


@given(seeds, st.integers(1, 5))
def test_borel_round_trip_and_factorization(seed, n):
    rng = np.random.default_rng(seed)
    p = sampling.random_borel_params(rng, n)
    b = borel_element(p)
    assert is_theta_unitary(b)
    q = borel_factor(b)
    assert opn(q.g - p.g) <= 1e-9 and opn(q.x - p.x) <= 1e-9
    assert opn((gamma_g(p.g) @ tau_x(p.x)).full - b.full) <= 1e-10


@given(seeds, st.integers(1, 4))
def test_theta_unitary_inverse(seed, n):
    g = sampling.random_theta_unitary(np.random.default_rng(seed), n)
    gi = theta_unitary_inverse(g)
    assert opn((g @ gi).full - np.eye(2 * n)) <= 1e-9


def test_g_z_scalar():
    g = g_z(0.5)
    s = 1 / np.sqrt(0.75)
    assert abs(g.g11[0, 0] - s) < 1e-14
    assert abs(g.g21[0, 0] - 0.5 * s) < 1e-14
    assert opn(mobius(g, 0) - 0.5) < 1e-15


@given(disk_points())
def test_g_z_properties(z):
    g = g_z(z)
    assert is_theta_unitary(g)
    assert opn(mobius(g, np.zeros_like(z)) - z) <= 1e-10
    assert opn(g.full - g_z_closed_form(z).full) <= 1e-9
    assert opn(g_z_inverse(z).full - g_z_inverse_closed_form(z).full) <= 1e-9
