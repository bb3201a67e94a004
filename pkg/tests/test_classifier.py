from fractions import Fraction

import pytest
from oracles import rr_oracle

from svoa_wzw.anyon_arith import CurrentLabel, sugawara_c
from svoa_wzw.classifier import (
    KNOWN_SIMPLE,
    PUBLISHED_FAMILIES,
    PUBLISHED_TABLE,
    Candidate,
    RejectionReport,
    candidate_key,
    element_class,
    enumerate_factor_table,
    enumerate_semisimple,
    enumerate_simple,
    expected_semisimple,
    group_label,
    in_published_list,
    rr_constancy_test,
    semisimple_candidates,
    spin_current,
    table_mismatches,
    theorem_table,
)
from svoa_wzw.lie_core import WZWFactor, center_element


def cur(*specs):
    fs, els = [], []
    for t, n, k, a in specs:
        f = WZWFactor(t, n, k)
        fs.append(f)
        els.append(center_element(f.root_system, a))
    return CurrentLabel(tuple(fs), tuple(els))


def chevalley(m):
    """``Spin(m)_1 x Spin(m+1)_2``."""
    a, b = spin_current(m, 1), spin_current(m + 1, 2)
    return CurrentLabel(a.factors + b.factors, a.elements + b.elements)


# ----------------------------------------------------------------- simple


def test_simple_classification():
    names = [c.name for c in enumerate_simple()]
    assert sorted(names) == sorted(KNOWN_SIMPLE)
    assert all(c.h == Fraction(3, 2) for c in enumerate_simple())


def test_simple_candidates_are_admissible():
    for c in enumerate_simple():
        assert c.status["admissible"][0], c


def test_spin_family_instances():
    fam = next(c for c in enumerate_simple(max_rank=8) if c.family)
    assert [i.h for i in fam.instances] == [Fraction(3, 2)] * len(fam.instances)
    dims = [i.dim32 for i in fam.instances]
    assert dims == [m * (m - 1) * (m + 4) // 6 for m in range(3, 3 + len(dims))]


def test_other_targets():
    names = {c.name for c in enumerate_simple(Fraction(1, 2), 16, 8)}
    assert "Spin(m)_1" in names
    assert all(c.h == Fraction(1, 2) for c in enumerate_simple(Fraction(1, 2), 16, 8))


def test_factor_table():
    rows = enumerate_factor_table()
    names = [r.name for r in rows]
    assert len(rows) == len(set(names)) == 15
    assert "SU(8)_1" in names and "SU(10)_1" in names
    assert all(r.h <= Fraction(3, 2) for r in rows)
    for r in rows:
        if r.family:
            for m in range(5, 12):
                assert r.instance(m).h == r.h
        else:
            assert CurrentLabel((r.factor,), (r.element,)).dim == r.dim


def test_element_classes():
    f = WZWFactor("A", 5, 1)
    assert element_class(f, center_element(f.root_system, 1)) == element_class(f, center_element(f.root_system, 5))
    g = WZWFactor("D", 6, 1)
    assert element_class(g, center_element(g.root_system, "s+")) == element_class(g, center_element(g.root_system, "s-"))
    assert candidate_key(cur(("D", 6, 1, "s+"), ("D", 6, 1, "s-"))) == candidate_key(cur(("D", 6, 1, "s-"), ("D", 6, 1, "s+")))


# ----------------------------------------------------------- table


def test_theorem_table_matches_published_values():
    rows = theorem_table()
    assert len(rows) == 12
    assert table_mismatches(rows) == []
    for r in rows:
        if r.name in PUBLISHED_TABLE:
            assert (r.dim32, r.c) == PUBLISHED_TABLE[r.name]
        else:
            dim, c = PUBLISHED_FAMILIES[r.name]
            assert all((d, cc) == (dim(m), c(m)) for m, d, cc in r.instances)


def test_table_mismatch_detection():
    rows = theorem_table()
    rows[3] = type(rows[3])(rows[3].name, rows[3].dim32 + 1, rows[3].c, rows[3].automorphisms)
    assert table_mismatches(rows) == [rows[3].name]


# ------------------------------------------------------- Ramond-Ramond test


def test_rejection_witness():
    cand = Candidate(cur(("C", 3, 1, "c"), ("D", 6, 1, "s+")))
    rep = rr_constancy_test(cand)
    assert isinstance(rep, RejectionReport)
    assert rep.depth == 0
    assert sorted(rep.leading_dims) == [14, 32]
    assert rep.exponent == Fraction(13, 40)
    assert not cand.accepted and "leading dims" in cand.status["rr"][1]


def test_published_survivor_passes():
    cand = Candidate(cur(("D", 8, 1, "s+"), ("D", 4, 1, "s+")))
    assert rr_constancy_test(cand) == "pass (depth 3)"


def test_e7_times_su2_level3_rejected():
    cand = Candidate(cur(("E7", 7, 1, "1"), ("A", 1, 3, 1)))
    assert isinstance(rr_constancy_test(cand), RejectionReport)


def test_family_candidate_refused():
    fam = next(c for c in enumerate_simple(max_rank=4) if c.family)
    with pytest.raises(Exception):
        rr_constancy_test(fam)


@pytest.mark.parametrize("current,passes", [
    (cur(("A", 1, 3, 1), ("A", 1, 3, 1)), True),
    (chevalley(4), True),
    (chevalley(5), True),
    (cur(("A", 1, 3, 1), ("C", 3, 1, "c")), False),
    (cur(("A", 1, 2, 1), ("A", 1, 4, 1)), False),
], ids=["SU(2)_3^2", "SU(2)_1^2xSp(4)_2", "Sp(4)_1xSU(4)_2", "SU(2)_3xSp(6)_1", "SU(2)_2xSU(2)_4"])
def test_rr_against_weyl_kac_oracle(current, passes):
    depth = 3
    verdict = rr_constancy_test(Candidate(current), depth)
    assert (verdict == f"pass (depth {depth})") == passes
    assert (rr_oracle(current, depth) == []) == passes


# ------------------------------------------------------ semisimple search


def test_expected_list():
    exp = expected_semisimple()
    assert len(exp) == 21
    assert all(c.h == Fraction(3, 2) for c in exp)
    assert all(in_published_list(c) for c in exp)


def test_candidates_have_target_h():
    cands = semisimple_candidates(4, 8)
    assert cands and all(c.h == Fraction(3, 2) and len(c.factors) >= 2 for c in cands)
    assert len({candidate_key(c) for c in cands}) == len(cands)


@pytest.fixture(scope="module")
def rank12():
    return enumerate_semisimple(6, 12, 3)


def test_rank12_published_entries_survive(rank12):
    got = {c.key() for c in rank12}
    for e in expected_semisimple(12, 6):
        assert candidate_key(e) in got, group_label(e)


def test_rank12_extras_are_chevalley_survivors(rank12):
    extras = {c.key() for c in rank12 if not c.in_published_list}
    predicted = {candidate_key(chevalley(m)) for m in range(4, 13)}
    predicted |= {candidate_key(cur(("A", 3, 1, 2), ("C", 4, 1, "c"))),
                  candidate_key(cur(("B", 3, 1, "v"), ("A", 7, 1, 4)))}
    assert extras == predicted


@pytest.mark.parametrize("m", range(4, 11))
def test_chevalley_central_charge(m):
    # c = m/2 + 2 (m+1) m / 2 / (m+1), matching Spin(m)_1^3
    c = sugawara_c(chevalley(m).factors)
    assert c == Fraction(3 * m, 2)


def test_unreachable_target_is_empty():
    assert enumerate_simple(Fraction(7), 16, 1) == []


def test_simple_list_stable_beyond_caps():
    base = sorted(c.name for c in enumerate_simple())
    assert sorted(c.name for c in enumerate_simple(Fraction(3, 2), 80, 30)) == base


def test_quarter_plus_five_quarters_rejected():
    cand = Candidate(cur(("A", 1, 1, 1), ("D", 10, 1, "s+")))
    rep = rr_constancy_test(cand)
    assert isinstance(rep, RejectionReport)
    assert sorted(rep.leading_dims) == [2, 512]


@pytest.mark.parametrize("factor", [("C", 3, 1, "c"), ("A", 5, 1, 3), ("D", 6, 1, "s+"), ("A", 1, 3, 1)])
def test_identical_factors_never_rejected(factor):
    assert rr_constancy_test(Candidate(cur(factor, factor)), 2) == "pass (depth 2)"
