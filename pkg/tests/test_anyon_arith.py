from fractions import Fraction

import pytest
from oracles import weyl_kac_dims

from svoa_wzw.anyon_arith import (
    CurrentLabel,
    affine_graded_dims,
    all_currents,
    conformal_dim,
    current_action,
    exceptional_current,
    extension_admissible,
    generated_subgroup,
    integrable_weights,
    lemma_formula_dim,
    modular_anomaly,
    monodromy_charge,
    quadratic_form,
    sugawara_c,
)
from svoa_wzw.lie_core import LieError, WZWFactor, build_root_system, center_element, center_elements

TYPES = ([("A", n) for n in range(1, 12)] + [("B", n) for n in range(2, 9)]
         + [("C", n) for n in range(2, 9)] + [("D", n) for n in range(3, 13)]
         + [("E6", 6), ("E7", 7)])


@pytest.mark.parametrize("t,n", TYPES)
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_conformal_dim_matches_closed_form(t, n, k):
    rs = build_root_system(t, n)
    for a in center_elements(rs)[1:]:
        assert conformal_dim(a, k) == lemma_formula_dim(a, k)


def test_e8_level_two():
    a = exceptional_current()
    assert lemma_formula_dim(a, 2) == Fraction(3, 2)
    rs = build_root_system("E8")
    from svoa_wzw.anyon_arith import weight_conformal_dim
    from svoa_wzw.lie_core import Weight
    assert weight_conformal_dim(Weight((1,) + (0,) * 7, rs), 2) == Fraction(3, 2)


@pytest.mark.parametrize("f,c", [
    (WZWFactor("A", 1, 1), 1), (WZWFactor("E8", 8, 1), 8), (WZWFactor("D", 12, 1), 12),
    (WZWFactor("E8", 8, 2), Fraction(31, 2)), (WZWFactor("C", 3, 2), 7),
    (WZWFactor("A", 1, 4), 2),
])
def test_sugawara(f, c):
    assert sugawara_c(f) == c


def test_anomaly():
    assert modular_anomaly(Fraction(3, 2), 12) == 1
    assert modular_anomaly(Fraction(3, 4), Fraction(51, 5)) == Fraction(13, 40)


# ------------------------------------------------------------ Weyl-Kac oracle


CASES = [
    (WZWFactor("A", 1, 1), 5), (WZWFactor("A", 1, 2), 4), (WZWFactor("A", 2, 1), 4),
    (WZWFactor("C", 2, 2), 3), (WZWFactor("G2", 2, 1), 3), (WZWFactor("A", 3, 1), 3),
    (WZWFactor("C", 3, 1), 3), (WZWFactor("B", 2, 1), 3), (WZWFactor("A", 1, 4), 4),
]


@pytest.mark.parametrize("f,depth", CASES, ids=[c[0].name for c in CASES])
def test_graded_dims_match_weyl_kac(f, depth):
    for lam in integrable_weights(f):
        got = affine_graded_dims(f, lam, depth).dims
        assert got == weyl_kac_dims(f, lam, depth), lam


def test_known_graded_dims():
    assert affine_graded_dims(WZWFactor("E7", 7, 1), (0,) * 6 + (1,), 3).dims == (56, 968, 7504, 42616)
    assert affine_graded_dims(WZWFactor("D", 12, 1), (0,) * 11 + (1,), 2).dims == (2048, 49152, 614400)
    assert affine_graded_dims(WZWFactor("F4", 4, 1), (0,) * 4, 3).dims == (1, 52, 377, 1976)


def test_graded_dims_rejects_non_integrable():
    with pytest.raises(LieError):
        affine_graded_dims(WZWFactor("A", 1, 1), (2,), 2)


# --------------------------------------------------------------- currents


@pytest.mark.parametrize("t,n", TYPES[::3])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_current_action_is_a_group_action(t, n, k):
    f = WZWFactor(t, n, k)
    rs = f.root_system
    weights = integrable_weights(f)
    for a in center_elements(rs):
        for b in center_elements(rs):
            for lam in weights[:20]:
                assert current_action(f, a, current_action(f, b, lam)) == current_action(f, a + b, lam)


@pytest.mark.parametrize("t,n", TYPES[::3])
@pytest.mark.parametrize("k", [1, 2])
def test_current_moves_vacuum_to_current_weight(t, n, k):
    from svoa_wzw.lie_core import current_weight
    f = WZWFactor(t, n, k)
    for a in center_elements(f.root_system)[1:]:
        assert current_action(f, a, (0,) * n) == current_weight(a, k).coords
        assert monodromy_charge(f, a, (0,) * n) == 0


def test_monodromy_is_a_character():
    f = WZWFactor("D", 6, 2)
    rs = f.root_system
    els = center_elements(rs)
    for lam in integrable_weights(f):
        for a in els:
            for b in els:
                lhs = monodromy_charge(f, a + b, lam)
                assert lhs == (monodromy_charge(f, a, lam) + monodromy_charge(f, b, lam)) % 1


def test_e8_exceptional_action():
    f = WZWFactor("E8", 8, 2)
    a = exceptional_current()
    assert current_action(f, a, (0,) * 8) == (1,) + (0,) * 7
    assert current_action(f, a, (0,) * 7 + (1,)) == (0,) * 7 + (1,)
    assert monodromy_charge(f, a, (0,) * 7 + (1,)) == Fraction(1, 2)


def test_quadratic_form_and_admissibility():
    f = WZWFactor("A", 11, 1)
    cur = CurrentLabel((f,), (center_element(f.root_system, 6),))
    assert quadratic_form(cur) == Fraction(1, 2)
    assert extension_admissible(generated_subgroup(cur))
    # generator of Z_12 has h = 11/24
    gen = CurrentLabel((f,), (center_element(f.root_system, 1),))
    assert quadratic_form(gen) == Fraction(11, 24)
    assert not extension_admissible(generated_subgroup(gen))


def test_admissibility_requires_closure():
    f = WZWFactor("A", 3, 1)
    cur = CurrentLabel((f,), (center_element(f.root_system, 1),))
    with pytest.raises(LieError):
        extension_admissible([cur])


def test_product_currents():
    fs = (WZWFactor("D", 8, 1), WZWFactor("D", 4, 1))
    curs = all_currents(fs)
    assert len(curs) == 16 and curs[0].is_trivial
    halves = [c for c in curs if c.h == Fraction(3, 2)]
    assert halves and all(extension_admissible(generated_subgroup(c)) for c in halves)
    assert {c.dim for c in halves} == {1024}
