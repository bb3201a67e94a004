"""Generator for the shipped inclusion-chart data file.

Every classical inclusion is described by a linear map between maximal tori
in the usual orthonormal ``epsilon`` coordinates.  The projection matrix of
an edge is then ``P[s_j][t_k] = <omega_k, M H_j>``: the target fundamental
weight ``omega_k`` evaluated on the image of the source simple coroot
``H_j``.  Exceptional Levi inclusions are written down directly as label
selections.

Run ``python -m svoa_wzw.chart`` to regenerate ``data/embeddings.json``.
"""
from __future__ import annotations

import argparse
import json
from dataclasses import dataclass
from fractions import Fraction

from .lie_core import WZWFactor
from .weyl_reps import EMBEDDINGS_FILE

FORMAT_VERSION = 1


def eps_data(t: str, n: int):
    """Simple coroots and fundamental weights of a classical model in epsilon coordinates.

    Also accepts the degenerate models B1, C1, D2 and D3.  Returns
    ``(dim, coroots, weights)`` with 1-based node order.
    """
    if t == "A":
        d = n + 1
        H = [[int(i == j) - int(i == j + 1) for i in range(d)] for j in range(n)]
        W = [[Fraction(int(i < k)) - Fraction(k, d) for i in range(d)] for k in range(1, n + 1)]
        return d, H, W
    d = n
    H = [[int(i == j) - int(i == j + 1) for i in range(d)] for j in range(n - 1)]
    W = [[Fraction(int(i < k)) for i in range(d)] for k in range(1, n + 1)]
    half = Fraction(1, 2)
    if t == "B":
        H.append([2 * int(i == n - 1) for i in range(d)])
        W[n - 1] = [half] * d
    elif t == "C":
        H.append([int(i == n - 1) for i in range(d)])
    elif t == "D":
        H.append([int(i in (n - 2, n - 1)) for i in range(d)])
        W[n - 2] = [half] * (d - 1) + [-half]
        W[n - 1] = [half] * d
    else:
        raise ValueError(t)
    return d, H, W


@dataclass
class Block:
    """One simple or semisimple model group occupying a slice of a torus.

    ``factors`` pairs each canonical WZW factor with the model nodes that
    its canonical nodes correspond to.
    """

    model: tuple[str, int]
    factors: list[tuple[WZWFactor, list[int]]]

    @property
    def dim(self):
        return eps_data(*self.model)[0]


def spin_block(m: int, k: int) -> Block:
    """Block for ``Spin(m)_k`` in its canonical guise, modelled as B or D."""
    r = m // 2
    if m % 2:
        model = ("B", r)
        if r == 1:
            return Block(model, [(WZWFactor("A", 1, 2 * k), [1])])
        if r == 2:
            return Block(model, [(WZWFactor("C", 2, k), [2, 1])])
        return Block(model, [(WZWFactor("B", r, k), list(range(1, r + 1)))])
    model = ("D", r)
    if r == 2:
        return Block(model, [(WZWFactor("A", 1, k), [1]), (WZWFactor("A", 1, k), [2])])
    if r == 3:
        return Block(model, [(WZWFactor("A", 3, k), [3, 1, 2])])
    return Block(model, [(WZWFactor("D", r, k), list(range(1, r + 1)))])


def simple_block(t: str, n: int, k: int) -> Block:
    return Block((t, n), [(WZWFactor(t, n, k), list(range(1, n + 1)))])


def sp1_block(k: int) -> Block:
    """``Sp(2x1)_k`` modelled as C1."""
    return Block(("C", 1), [(WZWFactor("A", 1, k), [1])])


def _offsets(blocks):
    out, o = [], 0
    for b in blocks:
        out.append(o)
        o += b.dim
    return out, o


def projection_from_torus(src: list[Block], tgt: list[Block], eps_map) -> list[list[int]]:
    """Projection matrix for a torus map.

    ``eps_map(b, i)`` returns the image of source basis vector ``e_i`` of
    block ``b`` as a dict ``{(target block, j): coefficient}``.
    """
    tgt_off, tgt_dim = _offsets(tgt)
    rows = []
    for b, blk in enumerate(src):
        _, H, _ = eps_data(*blk.model)
        for _, nodes in blk.factors:
            for node in nodes:
                image = [0] * tgt_dim
                for i, c in enumerate(H[node - 1]):
                    if c:
                        for (tb, j), v in eps_map(b, i).items():
                            image[tgt_off[tb] + j] += c * v
                row = []
                for tb, tblk in enumerate(tgt):
                    _, _, W = eps_data(*tblk.model)
                    seg = image[tgt_off[tb]:tgt_off[tb] + tblk.dim]
                    for _, tnodes in tblk.factors:
                        for tn in tnodes:
                            val = sum(w * x for w, x in zip(W[tn - 1], seg))
                            if val.denominator != 1:
                                raise ValueError("torus map does not respect the coweight lattice")
                            row.append(int(val))
                rows.append(row)
    return rows


def factors_of(blocks) -> list[WZWFactor]:
    return [f for b in blocks for f, _ in b.factors]


def _identity(b, i):
    return {(b, i): 1}


def _stack(src_dims):
    """Concatenate source blocks into a single target block."""
    offs = [sum(src_dims[:b]) for b in range(len(src_dims))]
    return lambda b, i: {(0, offs[b] + i): 1}


def _diagonal(copies):
    return lambda b, i: {(c, i): 1 for c in range(copies)}


def _symplectic_in_unitary(b, i):
    # vector of SU(2n) restricts to weights +eps_i, -eps_i
    return {(b, 2 * i): 1, (b, 2 * i + 1): -1}


def _triality(rows, n_src_labels_before, rank=4):
    """Swap labels 1 and 4 of a D4 source factor starting at the given row."""
    r = n_src_labels_before
    rows[r], rows[r + 3] = rows[r + 3], rows[r]
    return rows


def _current(blocks, labels_per_factor):
    out = []
    for f, lab in zip(factors_of(blocks), labels_per_factor):
        v = [0] * f.rank
        for node, mult in lab:
            v[node - 1] += mult
        out.extend(v)
    return out


def _spin_current(m: int, k: int, spinor: str | None = None):
    """Per-factor labels of the vector (or spinor) current of ``Spin(m)_k``."""
    blk = spin_block(m, k)
    fs = factors_of([blk])
    if spinor is None:
        if m == 3:
            return [[(1, 2 * k)]]
        if m == 4:
            return [[(1, k)], [(1, k)]]
        if m == 5:
            return [[(2, k)]]
        if m == 6:
            return [[(2, k)]]
        return [[(1, k)]]
    r = m // 2
    assert len(fs) == 1 and m % 2 == 0 and m >= 8
    return [[(r if spinor == "s+" else r - 1, k)]]


def _declared_index(s, t, projection, value):
    """``value`` wherever a source factor meets a target factor, else 0."""
    out = []
    r0 = 0
    for fs in s:
        row, c0 = [], 0
        for ft in t:
            block = [r[c0:c0 + ft.rank] for r in projection[r0:r0 + fs.rank]]
            row.append(value if any(any(r) for r in block) else 0)
            c0 += ft.rank
        out.append(row)
        r0 += fs.rank
    return out


def _edge(name, src, tgt, projection, src_cur, tgt_cur, *, expect=True, fixtures=None,
          notes="", index=1):
    s, t = factors_of(src), factors_of(tgt)
    return {
        "name": name,
        "source": [[f.type, f.rank, f.level] for f in s],
        "target": [[f.type, f.rank, f.level] for f in t],
        "projection": projection,
        "expected_index": _declared_index(s, t, projection, index),
        "source_current": src_cur,
        "target_current": tgt_cur,
        "expect_contained": expect,
        "fixtures": fixtures or [],
        "notes": notes,
    }


def _spin_name(m, k, power=1):
    s = f"Spin({m})_{k}"
    return s if power == 1 else f"{s}^{power}"


def build_chart(max_m: int = 10) -> dict:
    """All edges of the inclusion chart, Spin families truncated at ``max_m``."""
    edges = []

    # Spin(m)_3 -> Spin(m+1)_3 and Spin(m)_1^3 -> Spin(m+1)_1^3
    for m in range(3, max_m):
        for k, copies in ((3, 1), (1, 3)):
            src = [spin_block(m, k) for _ in range(copies)]
            tgt = [spin_block(m + 1, k) for _ in range(copies)]
            P = projection_from_torus(src, tgt, _identity)
            edges.append(_edge(
                f"{_spin_name(m, k, copies)} < {_spin_name(m + 1, k, copies)}", src, tgt, P,
                _current(src, _spin_current(m, k) * copies),
                _current(tgt, _spin_current(m + 1, k) * copies)))

    # Spin(6)_k -> Spin(8)_k through U(4); the target current is the
    # triality image of the vector
    for k, copies in ((3, 1), (1, 3)):
        src = [spin_block(6, k) for _ in range(copies)]
        tgt = [spin_block(8, k) for _ in range(copies)]
        src_u = [simple_block("A", 3, k) for _ in range(copies)]
        P = projection_from_torus(src_u, tgt, _identity)
        edges.append(_edge(
            f"{_spin_name(6, k, copies)} < {_spin_name(8, k, copies)} (triality)", src, tgt, P,
            _current(src, _spin_current(6, k) * copies),
            _current(tgt, _spin_current(8, k, "s+") * copies),
            notes="SU(4) sits in Spin(8) through U(4); the 8_v restricts to 4+4bar, so "
                  "the spinor current plays the role of the vector (triality)."))

    # diagonal Spin(m)_3 -> Spin(m)_1^3
    for m in range(3, max_m + 1):
        src = [spin_block(m, 3)]
        tgt = [spin_block(m, 1) for _ in range(3)]
        P = projection_from_torus(src, tgt, _diagonal(3))
        edges.append(_edge(
            f"{_spin_name(m, 3)} < {_spin_name(m, 1, 3)}", src, tgt, P,
            _current(src, _spin_current(m, 3)), _current(tgt, _spin_current(m, 1) * 3)))

    edges.extend(_cross_edges())
    edges.extend(_exceptional_edges())
    return {"format_version": FORMAT_VERSION, "edges": edges}


def _cross_edges():
    edges = []
    # Sp(2x1)_2^3 -> Sp(2x3)_2
    src = [sp1_block(2) for _ in range(3)]
    tgt = [simple_block("C", 3, 2)]
    edges.append(_edge("Spin(3)_1^3 < Sp(2x3)_2", src, tgt,
                       projection_from_torus(src, tgt, _stack([1, 1, 1])),
                       _current(src, [[(1, 2)]] * 3), _current(tgt, [[(3, 2)]])))
    # Sp(2x1)_1^6 -> Sp(2x3)_1^2
    src = [sp1_block(1) for _ in range(6)]
    tgt = [simple_block("C", 3, 1) for _ in range(2)]
    edges.append(_edge("Spin(4)_1^3 < Sp(2x3)_1^2", src, tgt,
                       projection_from_torus(src, tgt, lambda b, i: {(b // 3, b % 3): 1}),
                       _current(src, [[(1, 1)]] * 6), _current(tgt, [[(3, 1)]] * 2),
                       notes="the six Sp(2x1) factors are grouped as the two D2 blocks "
                             "of each Spin(4); any grouping gives the same check"))
    # Sp(2x2)_1^3 -> Sp(2x6)_1
    src = [simple_block("C", 2, 1) for _ in range(3)]
    tgt = [simple_block("C", 6, 1)]
    edges.append(_edge("Spin(5)_1^3 < Sp(2x6)_1", src, tgt,
                       projection_from_torus(src, tgt, _stack([2, 2, 2])),
                       _current(src, [[(2, 1)]] * 3), _current(tgt, [[(6, 1)]])))
    # SU(4)_1^3 -> SU(12)_1
    src = [simple_block("A", 3, 1) for _ in range(3)]
    tgt = [simple_block("A", 11, 1)]
    edges.append(_edge("Spin(6)_1^3 < SU(12)_1", src, tgt,
                       projection_from_torus(src, tgt, _stack([4, 4, 4])),
                       _current(src, [[(2, 1)]] * 3), _current(tgt, [[(6, 1)]])))
    # Spin(8)_1^3 -> Spin(16)_1 x Spin(8)_1, then triality on each source factor
    src = [spin_block(8, 1) for _ in range(3)]
    tgt = [spin_block(16, 1), spin_block(8, 1)]
    P = projection_from_torus(src, tgt, lambda b, i: {(0, 4 * b + i): 1} if b < 2 else {(1, i): 1})
    for r in (0, 4, 8):
        P = _triality(P, r)
    edges.append(_edge(
        "Spin(8)_1^3 < Spin(16)_1 x Spin(8)_1", src, tgt, P,
        _current(src, [[(1, 1)]] * 3), _current(tgt, [[(8, 1)], [(4, 1)]]),
        fixtures=[{"weight": _current(tgt, [[(8, 1)], [(4, 1)]]),
                   "dims": [[[8, 8, 8], 1], [[8, 8, 8], 1]],
                   "description": "128+ x 8+ = (8 x 8 x 8) + (8 x 8 x 8), triality-rotated"}],
        notes="block Spin(8)^2 in Spin(16) and identity on the last factor, followed by "
              "the triality swap of labels 1 and 4 on every source factor"))
    return edges


def _levi(src_factor, tgt_factor, nodes):
    """Projection for a Levi subgroup: source node i reads target label nodes[i]."""
    return [[int(j == n - 1) for j in range(tgt_factor.rank)] for n in nodes]


def _block_diag(*mats):
    rows = []
    width = sum(len(m[0]) for m in mats)
    off = 0
    for m in mats:
        for r in m:
            rows.append([0] * off + list(r) + [0] * (width - off - len(r)))
        off += len(m[0])
    return rows


def _diag_matrix(rank, copies):
    return [[int(j % rank == i) for j in range(rank * copies)] for i in range(rank)]


# E7 nodes carrying the D6 Levi, in D6 node order; with this choice the 56
# contains the spinor with highest weight omega_6 of D6
D6_IN_E7 = [7, 6, 5, 4, 3, 2]


def _exceptional_edges():
    edges = []
    C = lambda n, k: simple_block("C", n, k)  # noqa: E731
    A = lambda n, k: simple_block("A", n, k)  # noqa: E731
    D = lambda n, k: simple_block("D", n, k)  # noqa: E731

    def add(name, src, tgt, P, sc, tc, **kw):  # noqa: E306
        edges.append(_edge(name, src, tgt, P, _current(src, sc), _current(tgt, tc), **kw))

    def diag(name, blk_fn, n, node):
        src, tgt = [blk_fn(n, 2)], [blk_fn(n, 1), blk_fn(n, 1)]
        add(name, src, tgt, projection_from_torus(src, tgt, _diagonal(2)),
            [[(node, 2)]], [[(node, 1)]] * 2)

    diag("Sp(2x3)_2 < Sp(2x3)_1^2", C, 3, 3)
    diag("SU(6)_2 < SU(6)_1^2", A, 5, 3)
    diag("Spin(12)_2 < Spin(12)_1^2", D, 6, 6)

    src, tgt = [C(3, 1), C(3, 1)], [C(6, 1)]
    add("Sp(2x3)_1^2 < Sp(2x6)_1", src, tgt, projection_from_torus(src, tgt, _stack([3, 3])),
        [[(3, 1)]] * 2, [[(6, 1)]])

    src, tgt = [C(3, 2)], [A(5, 2)]
    add("Sp(2x3)_2 < SU(6)_2", src, tgt, projection_from_torus(src, tgt, _symplectic_in_unitary),
        [[(3, 2)]], [[(3, 2)]])
    src, tgt = [C(3, 1), C(3, 1)], [A(5, 1), A(5, 1)]
    add("Sp(2x3)_1^2 < SU(6)_1^2", src, tgt,
        projection_from_torus(src, tgt, _symplectic_in_unitary), [[(3, 1)]] * 2, [[(3, 1)]] * 2)
    src, tgt = [C(6, 1)], [A(11, 1)]
    add("Sp(2x6)_1 < SU(12)_1", src, tgt,
        projection_from_torus(src, tgt, _symplectic_in_unitary), [[(6, 1)]], [[(6, 1)]],
        fixtures=[{"weight": _current(tgt, [[(6, 1)]]), "dims": [[[429], 1], [[429], 1],
                                                               [[65], 1], [[1], 1]],
                   "description": "924 restricted to Sp(2x6) contains 429"}])

    src, tgt = [A(5, 2)], [C(6, 1)]
    add("SU(6)_2 < Sp(2x6)_1", src, tgt, projection_from_torus(src, tgt, _identity),
        [[(3, 2)]], [[(6, 1)]], index=2)
    src, tgt = [A(5, 1), A(5, 1)], [A(11, 1)]
    add("SU(6)_1^2 < SU(12)_1", src, tgt, projection_from_torus(src, tgt, _stack([6, 6])),
        [[(3, 1)]] * 2, [[(6, 1)]])

    # SU(6) in Spin(12) through U(6); flipping eps_6 puts Alt^3(6) inside 32+
    def u6_in_spin12(b, i):
        return {(b, i): -1 if i == 5 else 1}

    src, tgt = [A(5, 2)], [D(6, 2)]
    add("SU(6)_2 < Spin(12)_2", src, tgt, projection_from_torus(src, tgt, u6_in_spin12),
        [[(3, 2)]], [[(6, 2)]])
    src, tgt = [A(5, 1), A(5, 1)], [D(6, 1), D(6, 1)]
    add("SU(6)_1^2 < Spin(12)_1^2", src, tgt, projection_from_torus(src, tgt, u6_in_spin12),
        [[(3, 1)]] * 2, [[(6, 1)]] * 2)

    src, tgt = [A(11, 1)], [D(12, 1)]
    add("SU(12)_1 < Spin(24)_1", src, tgt, projection_from_torus(src, tgt, _identity),
        [[(6, 1)]], [[(12, 1)]],
        fixtures=[{"weight": _current(tgt, [[(12, 1)]]),
                   "dims": [[[1], 1], [[66], 1], [[495], 1], [[924], 1], [[495], 1],
                            [[66], 1], [[1], 1]],
                   "description": "2048+ = sum of the even exterior powers of 12"}])

    src, tgt = [D(6, 2)], [A(11, 1)]
    add("Spin(12)_2 < SU(12)_1", src, tgt,
        projection_from_torus(src, tgt, _symplectic_in_unitary), [[(6, 2)]], [[(6, 1)]],
        index=2, fixtures=[{"weight": _current(tgt, [[(6, 1)]]), "dims": [[[462], 1], [[462], 1]],
                   "description": "924 = 462+ + 462-"}])

    src, tgt = [D(6, 1), D(6, 1)], [D(12, 1)]
    add("Spin(12)_1^2 < Spin(24)_1", src, tgt, projection_from_torus(src, tgt, _stack([6, 6])),
        [[(6, 1)]] * 2, [[(12, 1)]],
        fixtures=[{"weight": _current(tgt, [[(12, 1)]]),
                   "dims": [[[32, 32], 1], [[32, 32], 1]],
                   "description": "2048+ = 32+ x 32+ + 32- x 32-"}])

    src, tgt = [D(8, 1), D(4, 1)], [D(12, 1)]
    add("Spin(16)_1 x Spin(8)_1 < Spin(24)_1", src, tgt,
        projection_from_torus(src, tgt, _stack([8, 4])), [[(8, 1)], [(4, 1)]], [[(12, 1)]],
        fixtures=[{"weight": _current(tgt, [[(12, 1)]]),
                   "dims": [[[128, 8], 1], [[128, 8], 1]],
                   "description": "2048+ = 128+ x 8+ + 128- x 8-"}])

    # exceptional Levi subgroups
    e7_2, e7_1, e8_2 = WZWFactor("E7", 7, 2), WZWFactor("E7", 7, 1), WZWFactor("E8", 8, 2)
    E7 = lambda k: Block(("E7", 7), [(WZWFactor("E7", 7, k), list(range(1, 8)))])  # noqa: E731
    E8 = Block(("E8", 8), [(e8_2, list(range(1, 9)))])
    d6_e7 = _levi(WZWFactor("D", 6, 1), e7_1, D6_IN_E7)

    add("Spin(12)_2 < E7_2", [D(6, 2)], [E7(2)], d6_e7, [[(6, 2)]], [[(7, 2)]],
        fixtures=[{"weight": [0] * 6 + [1], "dims": [[[32], 1], [[12], 2]],
                   "description": "56 = 32+ + 2 x 12"}])
    add("Spin(12)_1^2 < E7_1^2", [D(6, 1), D(6, 1)], [E7(1), E7(1)],
        _block_diag(d6_e7, d6_e7), [[(6, 1)]] * 2, [[(7, 1)]] * 2)
    add("E7_2 < E7_1^2", [E7(2)], [E7(1), E7(1)], _diag_matrix(7, 2),
        [[(7, 2)]], [[(7, 1)]] * 2)
    add("E7_2 < E8_2", [E7(2)], [E8], _levi(e7_2, e8_2, range(1, 8)),
        [[(7, 2)]], [[(1, 1)]], expect=False,
        fixtures=[{"weight": [1, 0, 0, 0, 0, 0, 0, 0],
                   "dims": [[[1], 1], [[1539], 1], [[56], 2], [[912], 2], [[133], 3]],
                   "description": "3875 = 1 + 1539 + 2 x 56 + 2 x 912 + 3 x 133"}],
        notes="the containment fails: no 1463 summand")
    return edges


def render(chart: dict) -> str:
    """Stable JSON text: one edge field per line, one matrix row per line."""
    def dump(key, value):
        if key == "projection":
            rows = ",\n      ".join(json.dumps(r) for r in value)
            return f'"{key}": [\n      {rows}\n    ]'
        return f'"{key}": {json.dumps(value)}'

    edges = []
    for e in chart["edges"]:
        body = ",\n    ".join(dump(k, v) for k, v in e.items())
        edges.append("  {\n    " + body + "\n  }")
    return ('{\n "format_version": %d,\n "edges": [\n' % chart["format_version"]
            + ",\n".join(edges) + "\n ]\n}\n")


def main(argv=None):
    parser = argparse.ArgumentParser(prog="python -m svoa_wzw.chart",
                                     description="regenerate the embeddings JSON")
    parser.add_argument("path", nargs="?", default=str(EMBEDDINGS_FILE))
    path = parser.parse_args(argv).path
    with open(path, "w") as fh:
        fh.write(render(build_chart()))
    print(path)


if __name__ == "__main__":
    main()
