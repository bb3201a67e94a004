import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from svoa_wzw.tau_lab import (
    CubicTensor,
    canonical_tensor,
    check_second_order_relation,
    check_superconformal_identity,
    find_strong_maxima,
    hyperplane_basis,
    maximizing_direction,
    symmetrize,
    tangent_basis,
)


@pytest.mark.parametrize("m", range(2, 9))
def test_maxima_count_and_shape(m):
    rep = find_strong_maxima(m, seed=1)
    assert len(rep) == m + 1
    for i, p in enumerate(rep):
        x = np.array(p.x)
        # the maximum is a permutation of (m, -1, ..., -1)
        expected = -np.ones(m + 1)
        expected[i] = m
        assert np.allclose(x, expected, atol=1e-7)
        assert abs(p.c1) < 1e-9 and abs(p.c2 - m * (m + 1)) < 1e-7
        assert p.signature == (1, m)
        assert p.a == pytest.approx(3 * m)
        assert p.is_strong_max


def test_maxima_deterministic_under_seed():
    a, b = find_strong_maxima(4, seed=3), find_strong_maxima(4, seed=3)
    assert [p.x for p in a] == [p.x for p in b]


def test_too_few_starts():
    with pytest.raises(ValueError):
        find_strong_maxima(3, starts=10)


def test_tangent_basis_is_orthonormal():
    x = np.array([3.0, -1, -1, -1])
    B = tangent_basis(x)
    assert B.shape == (4, 2)
    assert np.allclose(B.T @ B, np.eye(2))
    assert np.allclose(B.T @ x, 0) and np.allclose(B.T @ np.ones(4), 0)


def test_hyperplane_basis():
    U = hyperplane_basis(5)
    assert np.allclose(U.T @ U, np.eye(5)) and np.allclose(U.sum(axis=0), 0)


@pytest.mark.parametrize("m", range(2, 13))
def test_canonical_tensor_identity(m):
    T = canonical_tensor(m)
    assert T.is_symmetric()
    rep = check_superconformal_identity(T)
    assert rep.passed
    assert rep.scale == pytest.approx(36 / (m + 1))


def _random_orthogonal(n, seed):
    q, r = np.linalg.qr(np.random.default_rng(seed).standard_normal((n, n)))
    return q * np.sign(np.diag(r))


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 7), st.integers(0, 2 ** 31))
def test_identity_is_rotation_invariant(m, seed):
    T = canonical_tensor(m).rotated(_random_orthogonal(m, seed))
    rep = check_superconformal_identity(T)
    assert rep.passed and rep.scale == pytest.approx(36 / (m + 1))


@pytest.mark.parametrize("seed", range(5))
def test_random_tensor_fails(seed):
    A = np.random.default_rng(seed).standard_normal((4, 4, 4))
    assert not check_superconformal_identity(CubicTensor(symmetrize(A))).passed


def test_zero_tensor_fails():
    assert not check_superconformal_identity(CubicTensor(np.zeros((3, 3, 3)))).passed


def test_asymmetric_tensor_rejected():
    A = np.zeros((2, 2, 2))
    A[0, 0, 1] = 1
    with pytest.raises(ValueError):
        check_superconformal_identity(CubicTensor(A))


@pytest.mark.parametrize("m", range(2, 10))
def test_second_order_relation(m):
    T = canonical_tensor(m)
    for i in (0, m):
        rep = check_second_order_relation(T, maximizing_direction(m, i))
        assert rep.passed
        assert np.allclose(rep.tau2_eigs, rep.predicted)


def test_second_order_rotated():
    m = 5
    Q = _random_orthogonal(m, 11)
    T = canonical_tensor(m).rotated(Q)
    assert check_second_order_relation(T, Q @ maximizing_direction(m, 2)).passed


def test_non_critical_direction_raises():
    m = 4
    e = np.zeros(m)
    e[0], e[1] = 1.0, 0.3
    with pytest.raises(ValueError):
        check_second_order_relation(canonical_tensor(m), e)


def test_value_matches_power_sum():
    m = 4
    U = hyperplane_basis(m)
    y = np.random.default_rng(0).standard_normal(m)
    assert canonical_tensor(m).value(y) == pytest.approx(np.sum((U @ y) ** 3))
