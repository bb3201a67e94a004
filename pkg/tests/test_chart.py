from collections import Counter

import pytest

from svoa_wzw.chart import build_chart, render
from svoa_wzw.classifier import check_edge
from svoa_wzw.weyl_reps import EMBEDDINGS_FILE, load_embeddings, product_dim, restrict, split

EDGES = {e.name: e for e in load_embeddings()}


def test_shipped_file_is_regenerable():
    assert render(build_chart()) == EMBEDDINGS_FILE.read_text()


def test_edge_count_and_unique_names():
    assert len(EDGES) == len(load_embeddings()) == 48


@pytest.mark.parametrize("name", [n for n in EDGES if "E8" not in n])
def test_classical_edge(name):
    rep = check_edge(EDGES[name])
    assert rep.passed, rep
    assert rep.contained


def test_e7_in_e8_is_not_contained():
    rep = check_edge(EDGES["E7_2 < E8_2"])
    assert not rep.contained and not rep.expected and rep.passed
    assert rep.dims == [((1,), 1), ((56,), 2), ((133,), 3), ((912,), 2), ((1539,), 1)]


def _dim_multiset(E, dec):
    rss = E.source_rs
    out = Counter()
    for mu, c in dec.items():
        out[tuple(product_dim([rs], p) for rs, p in zip(rss, split(rss, mu)))] += c
    return out


def test_composite_restriction_matches_two_steps():
    inner = EDGES["Spin(8)_1^3 < Spin(16)_1 x Spin(8)_1"]
    outer = EDGES["Spin(16)_1 x Spin(8)_1 < Spin(24)_1"]
    comp = outer.compose(inner)
    spinor = (0,) * 11 + (1,)
    direct = restrict(spinor, comp)
    two_step = Counter()
    for mu, c in restrict(spinor, outer).items():
        for nu, d in restrict(mu, inner).items():
            two_step[nu] += c * d
    assert direct == two_step
    # 2048 = four triality-distinct copies of 8 x 8 x 8
    assert _dim_multiset(comp, direct) == Counter({(8, 8, 8): 4})
    assert len(direct) == 4


def test_spinor_of_spin16_x_spin8():
    outer = EDGES["Spin(16)_1 x Spin(8)_1 < Spin(24)_1"]
    dec = restrict((0,) * 11 + (1,), outer)
    # 2048 = 128 x 8s + 128' x 8c
    assert _dim_multiset(outer, dec) == Counter({(128, 8): 2})
    assert len(dec) == 2
