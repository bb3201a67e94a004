"""Finite-dimensional representation theory of simple and semisimple groups.

Weights of a product group ``G_1 x ... x G_r`` are flat integer tuples,
the concatenation of the Dynkin labels on each factor.  Characters are
plain dictionaries ``weight -> multiplicity``.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import prod
from pathlib import Path

from .lie_core import LieError, RootSystem, Weight, WZWFactor

DEFAULT_CAP = 5000


class CapExceeded(LieError):
    """The requested representation is larger than the dimension cap."""


class DecompositionError(LieError):
    """A character failed to split into irreducibles (bad embedding data)."""


# ------------------------------------------------------------------ dimension


def _weyl_dim(rs: RootSystem, labels) -> int:
    num = den = 1
    half = rs.half_lengths
    for beta in rs.positive_roots:
        a = sum(c * (l + 1) * h for c, l, h in zip(beta, labels, half))
        b = sum(c * h for c, h in zip(beta, half))
        num *= a
        den *= b
    d = Fraction(num) / Fraction(den)
    assert d.denominator == 1
    return int(d)


def weyl_dim(lam: Weight) -> int:
    """Dimension of the irreducible representation with highest weight ``lam``.

    Examples
    --------
    >>> from svoa_wzw.lie_core import build_root_system, fundamental
    >>> weyl_dim(fundamental(build_root_system("A", 11), 6))
    924
    """
    if not lam.is_dominant:
        raise LieError(f"{lam} is not dominant")
    return _weyl_dim(lam.rs, lam.coords)


def product_dim(rss, labels) -> int:
    """Dimension of an outer tensor product of irreducibles."""
    return prod(_weyl_dim(rs, part) for rs, part in zip(rss, split(rss, labels)))


def split(rss, labels) -> list[tuple[int, ...]]:
    """Cut a flat product weight into per-factor pieces."""
    out, i = [], 0
    for rs in rss:
        out.append(tuple(labels[i:i + rs.rank]))
        i += rs.rank
    if i != len(labels):
        raise LieError(f"weight {labels} does not fit {[str(r) for r in rss]}")
    return out


# -------------------------------------------------------------- Freudenthal


def _dominant_below(rs: RootSystem, lam) -> list[tuple[int, ...]]:
    """Dominant weights ``mu <= lam``, ordered so that higher weights come first."""
    roots = rs.positive_root_labels
    seen = {lam}
    layer = [lam]
    out = []
    while layer:
        out.extend(layer)
        nxt = []
        for mu in layer:
            for a in roots:
                nu = tuple(x - y for x, y in zip(mu, a))
                if min(nu) >= 0 and nu not in seen:
                    seen.add(nu)
                    nxt.append(nu)
        layer = nxt
    # order by depth (lam - mu) in root coordinates
    depth = {mu: sum(rs.labels_to_root_coords(tuple(l - m for l, m in zip(lam, mu))))
             for mu in out}
    return sorted(out, key=lambda m: (depth[m], tuple(-x for x in m)))


@lru_cache(maxsize=512)
def dominant_multiplicities(rs: RootSystem, lam: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Multiplicities of the dominant weights of ``V(lam)`` by Freudenthal's formula."""
    if min(lam, default=0) < 0:
        raise LieError(f"{lam} is not dominant")
    order = _dominant_below(rs, lam)
    roots = rs.positive_root_labels
    rho = rs.rho
    lr = tuple(a + b for a, b in zip(lam, rho))
    top = rs.inner_scaled(lr, lr)
    mult: dict[tuple[int, ...], int] = {lam: 1}
    # (alpha, alpha) scaled, per positive root
    alpha_sq = [rs.inner_scaled(a, a) for a in roots]
    for mu in order[1:]:
        mr = tuple(a + b for a, b in zip(mu, rho))
        den = top - rs.inner_scaled(mr, mr)
        acc = 0
        for a, aa in zip(roots, alpha_sq):
            nu = list(mu)
            mu_a = rs.inner_scaled(mu, a)
            j = 0
            while True:
                j += 1
                nu = [x + y for x, y in zip(nu, a)]
                m = mult.get(rs.reflect_to_dominant(nu), 0)
                if m == 0:
                    # weights of V(lam) along a root string form an unbroken segment
                    break
                acc += m * (mu_a + j * aa)
        q, r = divmod(2 * acc, den)
        if r:
            raise LieError("Freudenthal recursion produced a non-integer")  # pragma: no cover
        if q:
            mult[mu] = q
    return mult


@dataclass(frozen=True)
class FormalCharacter:
    """Full weight system of a representation: ``weight -> multiplicity``."""

    rs: RootSystem
    mults: dict = field(hash=False)

    @property
    def dim(self) -> int:
        return sum(self.mults.values())

    def __getitem__(self, mu) -> int:
        return self.mults.get(tuple(mu), 0)

    def __len__(self):
        return len(self.mults)

    def dominant(self) -> dict:
        return {mu: m for mu, m in self.mults.items() if min(mu) >= 0}


def _check_cap(rs, lam, cap):
    if cap is not None and _weyl_dim(rs, lam) > cap:
        raise CapExceeded(f"dim V({lam}) = {_weyl_dim(rs, lam)} exceeds cap {cap}")


@lru_cache(maxsize=256)
def _full_character(rs: RootSystem, lam: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    out = []
    for mu, m in dominant_multiplicities(rs, lam).items():
        out.extend((nu, m) for nu in rs.weyl_orbit(mu))
    return tuple(out)


def weight_multiplicities(lam: Weight, cap: int | None = DEFAULT_CAP) -> FormalCharacter:
    """Full formal character of the irreducible representation ``V(lam)``.

    Dominant multiplicities come from Freudenthal's recursion; the remaining
    weights are filled in by Weyl-orbit expansion.
    """
    if not lam.is_dominant:
        raise LieError(f"{lam} is not dominant")
    _check_cap(lam.rs, lam.coords, cap)
    return FormalCharacter(lam.rs, dict(_full_character(lam.rs, lam.coords)))


def product_character(rss, labels, cap: int | None = None) -> dict:
    """Full character of an outer tensor product over a product group."""
    parts = split(rss, labels)
    if cap is not None and product_dim(rss, labels) > cap:
        raise CapExceeded(f"dimension {product_dim(rss, labels)} exceeds cap {cap}")
    chars = [_full_character(rs, p) for rs, p in zip(rss, parts)]
    out = {}
    for combo in product(*chars):
        w = sum((c[0] for c in combo), ())
        out[w] = out.get(w, 0) + prod(c[1] for c in combo)
    return out


def product_dominant(rss, labels) -> dict:
    """Dominant part of an outer tensor product character."""
    parts = split(rss, labels)
    doms = [dominant_multiplicities(rs, p) for rs, p in zip(rss, parts)]
    out = {}
    for combo in product(*(d.items() for d in doms)):
        out[sum((c[0] for c in combo), ())] = prod(c[1] for c in combo)
    return out


# ----------------------------------------------------------- decomposition


def _height(rss, labels) -> Fraction:
    return sum((sum(rs.labels_to_root_coords(p)) for rs, p in zip(rss, split(rss, labels))),
               Fraction(0))


def decompose_character(rss, char: dict) -> Counter:
    """Split a Weyl-invariant character into irreducibles.

    Only the dominant part of ``char`` is read.  Repeatedly peels off the
    irreducible whose highest weight is the highest remaining dominant
    weight.  Raises :class:`DecompositionError` if a multiplicity goes
    negative, which happens only for characters that are not genuine.
    """
    rem = {mu: m for mu, m in char.items() if m and min(mu, default=0) >= 0}
    out: Counter = Counter()
    while rem:
        top = max(rem, key=lambda mu: (_height(rss, mu), mu))
        c = rem[top]
        if c < 0:
            raise DecompositionError(f"negative multiplicity {c} at {top}")
        out[top] += c
        for mu, m in product_dominant(rss, top).items():
            v = rem.get(mu, 0) - c * m
            if v:
                rem[mu] = v
            else:
                rem.pop(mu, None)
        if any(v < 0 for v in rem.values()):
            bad = next(mu for mu, v in rem.items() if v < 0)
            raise DecompositionError(f"character is not a sum of irreducibles near {bad}")
    return out


def tensor_decompose(lam: Weight, mu: Weight, cap: int | None = DEFAULT_CAP) -> Counter:
    """Decompose ``V(lam) (x) V(mu)`` into irreducibles (Brauer-Klimyk).

    Returns a :class:`collections.Counter` of dominant label tuples.

    Examples
    --------
    >>> from svoa_wzw.lie_core import build_root_system, fundamental
    >>> w = fundamental(build_root_system("A", 1), 1)
    >>> sorted(tensor_decompose(w, w).items())
    [((0,), 1), ((2,), 1)]
    """
    if lam.rs != mu.rs:
        raise LieError("tensor product of weights from different root systems")
    rs = lam.rs
    if not (lam.is_dominant and mu.is_dominant):
        raise LieError("tensor_decompose needs dominant weights")
    if cap is not None and _weyl_dim(rs, lam.coords) * _weyl_dim(rs, mu.coords) > cap * cap:
        raise CapExceeded("tensor product too large")
    # iterate over the smaller factor's weights
    if _weyl_dim(rs, lam.coords) < _weyl_dim(rs, mu.coords):
        lam, mu = mu, lam
    n = rs.rank
    A = rs.cartan
    out: Counter = Counter()
    for nu, m in _full_character(rs, mu.coords):
        w = [a + b + 1 for a, b in zip(lam.coords, nu)]
        sign = 1
        # reflect lam + nu + rho into the dominant chamber, dot action
        while True:
            i = next((i for i in range(n) if w[i] <= 0), None)
            if i is None:
                break
            if w[i] == 0:
                sign = 0
                break
            c = w[i]
            w = [w[j] - c * A[i][j] for j in range(n)]
            sign = -sign
        if sign:
            out[tuple(x - 1 for x in w)] += sign * m
    return Counter({k: v for k, v in out.items() if v})


def symmetric_square(lam: Weight) -> Counter:
    """Decompose ``Sym^2 V(lam)`` via ``chi(g)^2 + chi(g^2)`` on weights."""
    rs = lam.rs
    char = _full_character(rs, lam.coords)
    sq: dict = {}
    for nu1, m1 in char:
        for nu2, m2 in char:
            w = tuple(a + b for a, b in zip(nu1, nu2))
            sq[w] = sq.get(w, 0) + m1 * m2
    for nu, m in char:
        w = tuple(2 * a for a in nu)
        sq[w] = sq.get(w, 0) + m
    return decompose_character([rs], {w: v // 2 for w, v in sq.items()})


# --------------------------------------------------------------- embeddings


@dataclass(frozen=True)
class EmbeddingSpec:
    """An inclusion ``G' -> G`` of (products of) simply connected groups.

    ``projection`` has one row per source label and one column per target
    label: source weight = ``projection @ target weight``.
    ``expected_index[s][t]`` is the Dynkin index of source factor ``s``
    inside target factor ``t`` (zero when ``s`` does not map into ``t``).
    """

    name: str
    source: tuple[WZWFactor, ...]
    target: tuple[WZWFactor, ...]
    projection: tuple[tuple[int, ...], ...]
    expected_index: tuple[tuple[int, ...], ...] = ()
    source_current: tuple[int, ...] = ()
    target_current: tuple[int, ...] = ()
    expect_contained: bool = True
    fixtures: dict = field(default_factory=dict, hash=False, compare=False)
    notes: str = ""

    def __post_init__(self):
        ns = sum(f.rank for f in self.source)
        nt = sum(f.rank for f in self.target)
        if len(self.projection) != ns or any(len(r) != nt for r in self.projection):
            raise LieError(f"{self.name}: projection must be {ns}x{nt}")

    @property
    def source_rs(self) -> list[RootSystem]:
        return [f.root_system for f in self.source]

    @property
    def target_rs(self) -> list[RootSystem]:
        return [f.root_system for f in self.target]

    def project(self, labels) -> tuple[int, ...]:
        return tuple(sum(p * x for p, x in zip(row, labels)) for row in self.projection)

    def compose(self, inner: "EmbeddingSpec") -> "EmbeddingSpec":
        """``inner`` followed by ``self``: source of ``inner`` into target of ``self``."""
        if tuple(inner.target) != tuple(self.source):
            raise LieError("embeddings do not compose")
        P = [[sum(a * b for a, b in zip(row, col)) for col in zip(*self.projection)]
             for row in inner.projection]
        return EmbeddingSpec(f"{inner.name} . {self.name}", inner.source, self.target,
                             tuple(tuple(r) for r in P))


def restrict(lam, E: EmbeddingSpec, cap: int | None = DEFAULT_CAP) -> Counter:
    """Branch the target irrep ``V(lam)`` to the source of ``E``.

    ``lam`` is a flat label tuple over the target factors, or a single
    :class:`Weight` when the target is simple.  Returns a Counter of flat
    source label tuples.
    """
    labels = lam.coords if isinstance(lam, Weight) else tuple(lam)
    trs, srs = E.target_rs, E.source_rs
    if min(labels) < 0:
        raise LieError("restrict needs a dominant weight")
    char = product_character(trs, labels, cap=cap)
    projected: dict = {}
    for w, m in char.items():
        v = E.project(w)
        if min(v, default=0) >= 0:
            projected[v] = projected.get(v, 0) + m
    out = decompose_character(srs, projected)
    total = sum(c * product_dim(srs, mu) for mu, c in out.items())
    if total != product_dim(trs, labels):
        raise DecompositionError(f"{E.name}: restricted dimension {total} != "
                                 f"{product_dim(trs, labels)}")
    return out


def rep_index(rs: RootSystem, char) -> Fraction:
    """Dynkin index ``sum m(mu) (mu, mu) / rank`` (adjoint gets ``2 h^vee``)."""
    return sum((m * rs.inner(mu, mu) for mu, m in char), Fraction(0)) / rs.rank


def _probe_weights(rs: RootSystem, count: int = 2) -> list[tuple[int, ...]]:
    fund = [tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank)]
    fund.sort(key=lambda w: (_weyl_dim(rs, w), w))
    return fund[:count]


def dynkin_index(E: EmbeddingSpec, probes: int = 1) -> tuple[tuple[int, ...], ...]:
    """Dynkin index matrix ``[source factor][target factor]``.

    Computed as the ratio of representation indices ``T(V|_{G'}) / T(V)``
    for the ``probes`` smallest fundamental representations of each target
    factor.  Raises if two probes disagree or the ratio is not integral.
    """
    trs, srs = E.target_rs, E.source_rs
    offs_t = [sum(r.rank for r in trs[:i]) for i in range(len(trs))]
    offs_s = [sum(r.rank for r in srs[:i]) for i in range(len(srs))]
    rows = []
    for s, rs_s in enumerate(srs):
        row = []
        for t, rs_t in enumerate(trs):
            vals = set()
            for w in _probe_weights(rs_t, probes):
                char = _full_character(rs_t, w)
                sub = [r[offs_t[t]:offs_t[t] + rs_t.rank]
                       for r in E.projection[offs_s[s]:offs_s[s] + rs_s.rank]]
                img = [(tuple(sum(a * b for a, b in zip(r, mu)) for r in sub), m) for mu, m in char]
                ratio = rep_index(rs_s, img) / rep_index(rs_t, char)
                vals.add(ratio)
            if len(vals) != 1:
                raise LieError(f"{E.name}: Dynkin index depends on the probe: {vals}")
            (v,) = vals
            if v.denominator != 1:
                raise LieError(f"{E.name}: non-integral Dynkin index {v}")
            row.append(int(v))
        rows.append(tuple(row))
    return tuple(rows)


# ------------------------------------------------------------ data file I/O


DATA_DIR = Path(__file__).with_name("data")
EMBEDDINGS_FILE = DATA_DIR / "embeddings.json"


def _factor_from_json(x) -> WZWFactor:
    t, r, k = x
    return WZWFactor(t, int(r), int(k))


def embedding_from_dict(d: dict) -> EmbeddingSpec:
    return EmbeddingSpec(
        name=d["name"],
        source=tuple(_factor_from_json(x) for x in d["source"]),
        target=tuple(_factor_from_json(x) for x in d["target"]),
        projection=tuple(tuple(r) for r in d["projection"]),
        expected_index=tuple(tuple(r) for r in d.get("expected_index", ())),
        source_current=tuple(d.get("source_current", ())),
        target_current=tuple(d.get("target_current", ())),
        expect_contained=bool(d.get("expect_contained", True)),
        fixtures=d.get("fixtures", {}),
        notes=d.get("notes", ""),
    )


def load_embeddings(path=None) -> list[EmbeddingSpec]:
    """Read an embeddings data file (defaults to the shipped chart)."""
    path = Path(path) if path is not None else EMBEDDINGS_FILE
    with open(path) as fh:
        data = json.load(fh)
    return [embedding_from_dict(d) for d in data["edges"]]
