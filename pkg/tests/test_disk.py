import numpy as np
import pytest
from conftest import disk_pairs, disk_points, opn, seeds
from hypothesis import given
from hypothesis import strategies as st

from opdisk import sampling
from opdisk.disk import (
    alpha_of,
    alpha_series,
    boundary_action,
    boundary_defect_factor,
    dist,
    dist0,
    exp0,
    exp_at,
    geodesic,
    geodesic_origin,
    limit_points,
    log0,
    log_at,
    mobius,
    phi_D,
    translate_to_origin,
)
from opdisk.errors import CoincidentPoints, NotBoundary, NotInDisk
from opdisk.linalg import polar
from opdisk.module import g_z

HALF_LN3 = 0.5 * np.log(3.0)


def test_scalar_distances():
    assert abs(dist(0, 0.5) - HALF_LN3) < 1e-12
    assert abs(dist(0.5, 0.8) - HALF_LN3) < 1e-12
    assert abs(translate_to_origin(0.5, 0.8)[0, 0] - 0.5) < 1e-14
    assert dist(0.3, 0.3) == 0.0


def test_scalar_geodesic():
    geo = geodesic(0, 0.5)
    assert abs(geo.sample(0.5)[0, 0] - np.tanh(0.25 * np.log(3))) < 1e-12
    assert abs(geo.sample(1.0)[0, 0] - 0.5) < 1e-12
    lo, hi = limit_points(0, 0.5)
    assert lo[0, 0] == -1 and hi[0, 0] == 1


def test_limit_points_rank_deficient():
    lo, hi = limit_points(0, np.diag([0.5, 0.0]))
    assert np.allclose(lo, np.diag([-1, 0])) and np.allclose(hi, np.diag([1, 0]))
    with pytest.raises(CoincidentPoints):
        limit_points(0.2, 0.2)


def test_not_in_disk():
    with pytest.raises(NotInDisk):
        dist(0, 1.0)


@given(disk_points(cap=0.9))
def test_alpha_series_matches_closed_form(z):
    assert opn(alpha_series(z, 200) - alpha_of(z)) <= 1e-10


@given(disk_points())
def test_exp0_log0_inverse(z):
    assert opn(exp0(log0(z)) - z) <= 1e-10
    assert abs(opn(log0(z)) - dist0(z)) <= 1e-10


@given(disk_pairs())
def test_exp_log_at(pair):
    z0, z1 = pair
    assert opn(exp_at(z0, log_at(z0, z1)) - z1) <= 1e-9


@given(disk_pairs())
def test_geodesic_endpoints_and_reversal(pair):
    z0, z1 = pair
    g, h = geodesic(z0, z1), geodesic(z1, z0)
    assert opn(g.sample(0) - z0) <= 1e-10
    assert opn(g.sample(1) - z1) <= 1e-9
    assert opn(g.sample(0.3) - h.sample(0.7)) <= 1e-9


@given(disk_pairs())
def test_distance_symmetric_and_along_geodesic(pair):
    z0, z1 = pair
    d = dist(z0, z1)
    assert abs(d - dist(z1, z0)) <= 1e-9
    geo = geodesic(z0, z1)
    assert abs(dist(z0, geo.sample(0.25)) - 0.25 * d) <= 1e-8


@given(seeds, st.integers(1, 4))
def test_distance_invariance(seed, n):
    rng = np.random.default_rng(seed)
    g = sampling.random_theta_unitary(rng, n)
    z1 = sampling.random_disk_point(rng, n, 0.9)
    z2 = sampling.random_disk_point(rng, n, 0.9)
    assert abs(dist(mobius(g, z1), mobius(g, z2)) - dist(z1, z2)) <= 1e-9


@given(seeds, st.integers(1, 4))
def test_limit_convergence_invertible(seed, n):
    rng = np.random.default_rng(seed)
    z = sampling.random_disk_point(rng, n, 0.9)
    geo = geodesic_origin(z)
    lam = np.linalg.eigvalsh(geo.modulus_alpha)[0]
    if lam < 1e-3:
        return
    assert opn(geo.sample(30 / lam) - geo.limit(+1)) <= 1e-6


@given(disk_pairs())
def test_limit_points_on_boundary(pair):
    z0, z1 = pair
    if opn(z0 - z1) < 1e-6:
        return
    lo, hi = limit_points(z0, z1)
    w = translate_to_origin(z0, z1)
    if polar(w).rank == w.shape[0]:
        assert abs(opn(hi) - 1) <= 1e-8 and abs(opn(lo) - 1) <= 1e-8


def test_boundary_action():
    g = g_z(0.5)
    assert abs(boundary_action(g, 1.0)[0, 0] - 1) < 1e-14
    with pytest.raises(NotBoundary):
        boundary_action(g, 0.5)


def test_phi_D():
    p = phi_D(0.5).full.real
    assert np.allclose(p, [[5 / 3, -4 / 3], [-4 / 3, 5 / 3]])
    assert np.allclose(phi_D(np.zeros((2, 2))).full, np.eye(4))


@given(disk_points())
def test_phi_D_positive(z):
    f = phi_D(z).full
    assert opn(f - f.conj().T) <= 1e-8 * max(1, opn(f))
    assert np.linalg.eigvalsh(0.5 * (f + f.conj().T))[0] > 0


def test_boundary_defect_factor():
    a = np.diag([1.0, 0.6])
    h, q = boundary_defect_factor(a)
    assert np.allclose(q, np.diag([0, 1]))
    assert np.allclose(h @ q @ h, np.eye(2) - a.conj().T @ a)
    assert np.linalg.eigvalsh(h)[0] > 0
