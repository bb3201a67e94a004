from math import factorial

import numpy as np
import pytest
from oracles import brute_sym_invariants, cube_generators
from scipy.linalg import null_space

from svoa_wzw.finite_invariants import (
    PermGroupSpec,
    centralizer_order,
    invariant_dim_cube,
    invariant_dim_sym3_standard,
    kernel_acts_trivially,
    kernel_elements,
    klein_generators,
    partitions,
    sign_fixed_monomials,
)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("degree", [1, 2, 3])
@pytest.mark.parametrize("kind", ["symmetric", "alternating"])
def test_sym_invariants_match_brute_force(m, degree, kind):
    brute = brute_sym_invariants(m, degree, kind == "alternating")
    assert invariant_dim_sym3_standard(m, kind, degree) == brute


@pytest.mark.parametrize("m", range(3, 21))
def test_unique_cubic_invariant(m):
    assert invariant_dim_sym3_standard(m) == 1
    assert invariant_dim_sym3_standard(m, "alternating") == 1


def test_a3_has_two_cubics():
    # the 2-dim rep of A_3 = Z_3 has invariants z^3 and zbar^3
    assert invariant_dim_sym3_standard(2, "alternating") == 2
    assert invariant_dim_sym3_standard(2) == 1


def test_partition_counts():
    assert [len(list(partitions(n))) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for n in range(1, 9):
        assert sum(factorial(n) // centralizer_order(ct) for ct in partitions(n)) == factorial(n)


def test_bad_arguments():
    with pytest.raises(ValueError):
        invariant_dim_sym3_standard(1)
    with pytest.raises(ValueError):
        invariant_dim_sym3_standard(3, "cyclic")
    with pytest.raises(ValueError):
        PermGroupSpec("dihedral", 3)


# ------------------------------------------------------------------ cube


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_cube_invariants_match_null_space(m):
    mats = cube_generators(m)
    N = mats[0].shape[0]
    stacked = np.vstack([M - np.eye(N) for M in mats])
    assert null_space(stacked).shape[1] == invariant_dim_cube(m) == 1
    signs = np.vstack([M - np.eye(N) for M in mats[:2 * m]])
    assert null_space(signs).shape[1] == invariant_dim_cube(m, with_permutations=False) == m


@pytest.mark.parametrize("m", range(2, 13))
def test_cube_counts(m):
    assert invariant_dim_cube(m) == 1
    assert sorted(sign_fixed_monomials(m)) == [(i, i, i) for i in range(m)]
    assert kernel_acts_trivially(m)


def test_klein_group_structure():
    m = 4
    gens = klein_generators(m)
    assert len(gens) == 2 * m
    for g in gens + kernel_elements(m):
        for j in range(m):
            assert g[0][j] * g[1][j] * g[2][j] == 1
    assert len(kernel_elements(m)) == 4


def test_group_orders():
    assert PermGroupSpec("symmetric", 4).order == 120
    assert PermGroupSpec("alternating", 4).order == 60
    assert PermGroupSpec("cube", 3).order == 64 * 6 * 6
    assert PermGroupSpec("cube", 3).invariant_dim() == 1
