from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from svoa_wzw.lie_core import Weight, WZWFactor, build_root_system
from svoa_wzw.weyl_reps import (
    CapExceeded,
    EmbeddingSpec,
    dominant_multiplicities,
    dynkin_index,
    restrict,
    symmetric_square,
    tensor_decompose,
    weight_multiplicities,
    weyl_dim,
)


def W(t, n, coords):
    return Weight(tuple(coords), build_root_system(t, n))


def dims(rs, counter):
    return sorted((weyl_dim(Weight(mu, rs)), c) for mu, c in counter.items())


@pytest.mark.parametrize("t,n,coords,d", [
    ("A", 11, (0,) * 5 + (1,) + (0,) * 5, 924),
    ("D", 12, (0,) * 11 + (1,), 2048),
    ("C", 3, (0, 0, 2), 84),
    ("C", 6, (0,) * 5 + (1,), 429),
    ("A", 5, (0, 0, 2, 0, 0), 175),
    ("D", 6, (0,) * 5 + (2,), 462),
    ("E7", 7, (0,) * 6 + (2,), 1463),
    ("E7", 7, (1,) + (0,) * 6, 133),
    ("E8", 8, (1,) + (0,) * 7, 3875),
    ("E7", 7, (0,) * 6 + (1,), 56),
    ("G2", 2, (1, 0), 7),
])
def test_weyl_dimensions(t, n, coords, d):
    assert weyl_dim(W(t, n, coords)) == d


def test_e8_3875_dominant_multiplicities():
    rs = build_root_system("E8")
    m = dominant_multiplicities(rs, (1,) + (0,) * 7)
    assert sorted(m.values()) == [1, 7, 35]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([("A", 2), ("B", 2), ("G2", 2), ("A", 3), ("C", 3)]),
       st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_character_dimension_equals_weyl(tn, coords):
    t, n = tn
    lam = W(t, n, coords[:n])
    assert weight_multiplicities(lam, cap=None).dim == weyl_dim(lam)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=2, max_size=2),
       st.lists(st.integers(0, 2), min_size=2, max_size=2),
       st.sampled_from(["A", "B", "G2"]))
def test_tensor_product_dimensions(a, b, t):
    lam, mu = W(t, 2, a), W(t, 2, b)
    dec = tensor_decompose(lam, mu)
    assert sum(weyl_dim(Weight(nu, lam.rs)) * c for nu, c in dec.items()) == weyl_dim(lam) * weyl_dim(mu)
    assert dec == tensor_decompose(mu, lam)


def test_su2_clebsch_gordan():
    dec = tensor_decompose(W("A", 1, (3,)), W("A", 1, (2,)))
    assert dec == Counter({(5,): 1, (3,): 1, (1,): 1})


def test_symmetric_squares():
    rs = build_root_system("D", 6)
    assert dims(rs, symmetric_square(W("D", 6, (0,) * 5 + (1,)))) == [(66, 1), (462, 1)]
    rs = build_root_system("C", 3)
    assert dims(rs, symmetric_square(W("C", 3, (0, 0, 1)))) == [(21, 1), (84, 1)]
    rs = build_root_system("E7")
    assert dims(rs, symmetric_square(W("E7", 7, (0,) * 6 + (1,)))) == [(133, 1), (1463, 1)]


def test_cap():
    with pytest.raises(CapExceeded):
        weight_multiplicities(W("E8", 8, (1,) + (0,) * 7), cap=1000)


def _su2_in_su3():
    # SU(2) acting on the first two coordinates of C^3
    return EmbeddingSpec("A1 < A2", (WZWFactor("A", 1, 1),), (WZWFactor("A", 2, 1),), ((1, 0),))


def test_restrict_fundamental():
    E = _su2_in_su3()
    assert restrict((1, 0), E) == Counter({(1,): 1, (0,): 1})
    assert restrict((1, 1), E) == Counter({(2,): 1, (1,): 2, (0,): 1})


def test_dynkin_index_of_levi():
    assert dynkin_index(_su2_in_su3(), probes=2) == ((1,),)


def test_dynkin_index_of_principal_su2_in_su3():
    # so(3) < su(3) acting on C^3 as the spin-1 rep has index 4
    E = EmbeddingSpec("so3 < su3", (WZWFactor("A", 1, 4),), (WZWFactor("A", 2, 1),), ((2, 2),))
    assert dynkin_index(E, probes=2) == ((4,),)
    assert restrict((1, 0), E) == Counter({(2,): 1})
