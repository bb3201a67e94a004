"""Abelian anyons of WZW algebras: conformal dimensions, the quadratic form,
simple-current extensions, central charges and graded dimensions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable

from .lie_core import (
    CenterElement,
    LieError,
    RootSystem,
    Weight,
    WZWFactor,
    _dim_g,
    _dual_coxeter,
    build_root_system,
    center_elements,
    current_weight,
    identity_element,
)
from .weyl_reps import _weyl_dim

__all__ = [
    "WZWFactor", "CurrentLabel", "GradedDims",
    "conformal_dim", "weight_conformal_dim", "lemma_formula_dim", "sugawara_c",
    "quadratic_form", "extension_admissible", "modular_anomaly", "affine_graded_dims",
    "exceptional_current", "all_currents", "trivial_current", "generated_subgroup",
    "integrable_weights", "current_action", "monodromy_charge",
]


def weight_conformal_dim(lam: Weight, k: int) -> Fraction:
    """``h = (lam, lam + 2 rho) / (2 (k + h^vee))``."""
    return _labels_conformal_dim(lam.rs, k, tuple(lam.coords))


@lru_cache(maxsize=None)
def _labels_conformal_dim(rs: RootSystem, k: int, labels: tuple[int, ...]) -> Fraction:
    two_rho_plus = tuple(c + 2 for c in labels)
    return Fraction(rs.inner_scaled(labels, two_rho_plus),
                    2 * (k + rs.dual_coxeter) * rs.metric_den)


def conformal_dim(a: CenterElement, k: int) -> Fraction:
    """Conformal dimension of the abelian ``G_k``-anyon labelled by ``a``.

    Examples
    --------
    >>> from svoa_wzw.lie_core import build_root_system, center_element
    >>> conformal_dim(center_element(build_root_system("A", 11), 6), 1)
    Fraction(3, 2)
    """
    if a.is_trivial:
        return Fraction(0)
    return weight_conformal_dim(current_weight(a, k), k)


def lemma_formula_dim(a: CenterElement, k: int) -> Fraction:
    """Closed-form conformal dimensions of abelian anyons, type by type.

    Independent of :func:`conformal_dim`; used as its oracle.
    """
    rs = a.rs
    t, n = rs.type, rs.rank
    if not rs.center and not a.exceptional:
        raise LieError(f"{rs} has trivial center")
    if a.exceptional:
        return Fraction(3, 2)
    if a.is_trivial:
        return Fraction(0)
    if t == "A":
        m, i = n + 1, a.value[0]
        return Fraction(k * i * (m - i), 2 * m)
    if t == "C":
        return Fraction(n * k, 4)
    if t == "B":
        return Fraction(k, 2)
    if t == "D":
        m = 2 * n
        return Fraction(k, 2) if a.name == "v" else Fraction(k * m, 16)
    if t == "E6":
        return Fraction(2 * k, 3)
    if t == "E7":
        return Fraction(3 * k, 4)
    raise LieError(f"no closed form for {rs}")  # pragma: no cover


def exceptional_current() -> CenterElement:
    """The abelian anyon of E8 at level 2, highest weight ``omega_1`` (the 3875)."""
    return CenterElement(build_root_system("E8"), (), exceptional=True)


def _factor_list(f) -> list[WZWFactor]:
    if isinstance(f, WZWFactor):
        return [f]
    return list(f)


def sugawara_c(f) -> Fraction:
    """Sugawara central charge ``k dim(g) / (k + h^vee)``, additive over products.

    Accepts a single :class:`WZWFactor` or an iterable of them; the aliases
    B1 and D2 are evaluated with their own Lie data.
    """
    total = Fraction(0)
    for g in _factor_list(f):
        total += Fraction(g.level * _dim_g(g.type, g.rank), g.level + _dual_coxeter(g.type, g.rank))
    return total


def modular_anomaly(h, c) -> Fraction:
    """Leading ``q``-exponent ``h - c/24`` of a character."""
    return Fraction(h) - Fraction(c) / 24


# -------------------------------------------------------------- currents


@dataclass(frozen=True)
class CurrentLabel:
    """A center element of a product of WZW factors (possibly trivial per factor)."""

    factors: tuple[WZWFactor, ...]
    elements: tuple[CenterElement, ...]

    def __post_init__(self):
        if len(self.factors) != len(self.elements):
            raise LieError("one center element per factor required")
        for f, a in zip(self.factors, self.elements):
            if a.rs != f.root_system:
                raise LieError(f"{a} is not central in {f}")
            if a.exceptional and f.level != 2:
                raise LieError("the exceptional E8 current needs level 2")

    @classmethod
    def of(cls, pairs) -> "CurrentLabel":
        pairs = list(pairs)
        return cls(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    @property
    def h_parts(self) -> tuple[Fraction, ...]:
        return tuple(conformal_dim(a, f.level) for f, a in zip(self.factors, self.elements))

    @property
    def h(self) -> Fraction:
        return sum(self.h_parts, Fraction(0))

    @property
    def weights(self) -> tuple[tuple[int, ...], ...]:
        """Highest weight on each factor (zeros for trivial components)."""
        out = []
        for f, a in zip(self.factors, self.elements):
            out.append((0,) * f.rank if a.is_trivial else current_weight(a, f.level).coords)
        return tuple(out)

    @property
    def dim(self) -> int:
        """Dimension of the lowest-energy space: product of Weyl dimensions."""
        d = 1
        for f, w in zip(self.factors, self.weights):
            d *= _weyl_dim(f.root_system, w)
        return d

    @property
    def order(self) -> int:
        from math import lcm
        return lcm(*(a.order for a in self.elements)) if self.elements else 1

    @property
    def is_trivial(self) -> bool:
        return all(a.is_trivial for a in self.elements)

    def __add__(self, other: "CurrentLabel") -> "CurrentLabel":
        if self.factors != other.factors:
            raise LieError("currents of different algebras")
        return CurrentLabel(self.factors, tuple(a + b for a, b in zip(self.elements, other.elements)))

    def __str__(self):
        return " x ".join(f"{f}[{a.name}]" for f, a in zip(self.factors, self.elements))


def trivial_current(factors) -> CurrentLabel:
    factors = tuple(factors)
    return CurrentLabel(factors, tuple(identity_element(f.root_system) for f in factors))


def all_currents(factors) -> list[CurrentLabel]:
    """Every center element of the product (identity first)."""
    from itertools import product
    factors = tuple(factors)
    per = []
    for f in factors:
        els = center_elements(f.root_system)
        if f.root_system.type == "E8" and f.level == 2:
            els = els + [exceptional_current()]
        per.append(els)
    return [CurrentLabel(factors, combo) for combo in product(*per)]


def quadratic_form(a, k: int | None = None) -> Fraction:
    """``q(a) = h_a mod 1``, as a Fraction in ``[0, 1)``.

    Accepts a :class:`CurrentLabel`, or a :class:`CenterElement` together
    with a level.
    """
    if isinstance(a, CenterElement):
        if k is None:
            raise LieError("level required for a bare center element")
        h = conformal_dim(a, k)
    else:
        h = a.h
    return h - (h.numerator // h.denominator)


def extension_admissible(subgroup: Iterable[CurrentLabel]) -> bool:
    """Whether a group of currents extends to a super vertex algebra.

    True iff ``q`` restricted to the subgroup is a homomorphism into
    ``{0, 1/2}``.  Raises if the input is not closed under addition.
    """
    S = list(subgroup)
    if not S:
        raise LieError("empty subgroup")
    keys = {_key(a) for a in S}
    for a in S:
        for b in S:
            if _key(a + b) not in keys:
                raise LieError(f"{a} + {b} is not in the subgroup")
    half = Fraction(1, 2)
    for a in S:
        if quadratic_form(a) not in (0, half):
            return False
    for a in S:
        for b in S:
            if (quadratic_form(a) + quadratic_form(b) - quadratic_form(a + b)) % 1 != 0:
                return False
    return True


def _key(a: CurrentLabel):
    return tuple((e.value, e.exceptional) for e in a.elements)


def generated_subgroup(a: CurrentLabel) -> list[CurrentLabel]:
    out = [trivial_current(a.factors)]
    x = a
    while not x.is_trivial:
        out.append(x)
        x = x + a
    return out


# ------------------------------------------------------ graded dimensions


@dataclass(frozen=True)
class GradedDims:
    """Dimensions of the energy eigenspaces ``h, h+1, ..., h+N``."""

    h: Fraction
    dims: tuple[int, ...]

    @property
    def depth(self) -> int:
        return len(self.dims) - 1


MAX_DEPTH = 8


def _dominant_with_norm(rs: RootSystem, bound_scaled: int) -> list[tuple[int, ...]]:
    """All dominant weights with ``den * |mu|^2 <= bound_scaled``.

    All entries of the weight Gram matrix are positive, so the norm grows
    with every label and a depth-first search can prune.
    """
    n = rs.rank
    out = []
    mu = [0] * n

    def rec(i):
        if i == n:
            out.append(tuple(mu))
            return
        while True:
            if rs.inner_scaled(mu, mu) > bound_scaled:
                mu[i] = 0
                return
            rec(i + 1)
            mu[i] += 1

    rec(0)
    return out


def _same_class(rs: RootSystem, a, b) -> bool:
    return rs.root_class(a) == rs.root_class(b)


@lru_cache(maxsize=None)
def _root_data(rs: RootSystem):
    """Positive roots, all roots, scaled norms and metric images, as labels."""
    pos = list(rs.positive_root_labels)
    roots = pos + [tuple(-x for x in r) for r in pos]
    sq = {r: rs.inner_scaled(r, r) for r in roots}
    G = rs.metric_int
    n = rs.rank
    gb = {r: tuple(sum(G[i][j] * r[j] for j in range(n)) for i in range(n)) for r in roots}
    return pos, roots, sq, gb


class _AffineModule:
    """Weight multiplicities of the integrable module ``L(k Lambda_0 + lam)``.

    Weights are ``(mu, d)`` with ``mu`` a finite weight and ``d >= 0`` the
    grade below the top.
    """

    def __init__(self, rs: RootSystem, k: int, lam: tuple[int, ...]):
        self.rs, self.k, self.lam = rs, k, lam
        self.marks = rs.theta_coroot_marks
        self.theta = rs.theta
        self.den = rs.metric_den
        self.pos, self.all_roots, self.root_sq, self.metric_beta = _root_data(rs)
        lr = tuple(x + 1 for x in lam)
        self.top = rs.inner_scaled(lr, lr)
        self.lam_sq = rs.inner_scaled(lam, lam)
        self.table: dict = {(lam, 0): 1}
        self.done_grade = -1
        self._dominant_cache: dict = {}
        self._reduced: dict = {}

    def norm_ok(self, mu, d) -> bool:
        return self.rs.inner_scaled(mu, mu) <= self.lam_sq + 2 * self.k * d * self.den

    def _to_dominant(self, mu, d):
        """Affine Weyl reduction: returns an affine-dominant weight or None."""
        rs = self.rs
        while True:
            if d < 0:
                return None
            mu = rs.reflect_to_dominant(mu)
            lvl = sum(a * m for a, m in zip(mu, self.marks))
            c = lvl - self.k
            if c <= 0:
                return mu, d
            mu = tuple(x - c * t for x, t in zip(mu, self.theta))
            d -= c

    def mult(self, mu, d) -> int:
        key = (mu, d)
        red = self._reduced.get(key, False)
        if red is False:
            red = self._reduced[key] = self._to_dominant(tuple(mu), d)
        if red is None:
            return 0
        return self.table.get(red, 0)

    def _affine_dominant(self, d):
        """Affine-dominant weights at grade ``d`` allowed by the norm bound."""
        rs = self.rs
        bound = self.lam_sq + 2 * self.k * d * self.den
        cands = [mu for mu in self._alcove if rs.inner_scaled(mu, mu) <= bound]
        # higher weights first within a grade
        return sorted(cands, key=lambda mu: -rs.inner_scaled(tuple(x + 1 for x in mu),
                                                              tuple(x + 1 for x in mu)))

    @cached_property
    def _alcove(self):
        rs = self.rs
        out = []
        n = rs.rank
        mu = [0] * n

        def rec(i, budget):
            if i == n:
                if _same_class(rs, mu, self.lam):
                    out.append(tuple(mu))
                return
            for c in range(budget // self.marks[i] + 1):
                mu[i] = c
                rec(i + 1, budget - c * self.marks[i])
            mu[i] = 0

        rec(0, self.k)
        return tuple(out)

    def _freudenthal(self, mu, d) -> int:
        rs, k, den = self.rs, self.k, self.den
        mr = tuple(x + 1 for x in mu)
        denom = self.top - rs.inner_scaled(mr, mr) + 2 * (k + rs.dual_coxeter) * d * den
        acc = 0
        mu_sq = rs.inner_scaled(mu, mu)
        bound0 = self.lam_sq + 2 * k * d * den
        step = 2 * k * den
        # real roots beta + n delta: n = 0 with beta > 0, n >= 1 with any beta
        for n in range(0, d + 1):
            roots = self.pos if n == 0 else self.all_roots
            for beta in roots:
                bb = self.root_sq[beta]
                mb = sum(a * b for a, b in zip(mu, self.metric_beta[beta]))
                j = 1
                while True:
                    g = d - j * n
                    if g < 0:
                        break
                    # |mu + j beta|^2 against the grade-g norm bound
                    if mu_sq + 2 * j * mb + j * j * bb > bound0 - step * j * n:
                        if n == 0:
                            break
                        j += 1
                        continue
                    nu = tuple(x + j * y for x, y in zip(mu, beta))
                    m = self.mult(nu, g)
                    if m:
                        acc += m * (mb + j * bb + k * n * den)
                    j += 1
        # imaginary roots n delta, multiplicity rank
        for n in range(1, d + 1):
            for j in range(1, d // n + 1):
                m = self.mult(mu, d - j * n)
                if m:
                    acc += rs.rank * m * k * n * den
        if denom <= 0:
            # a dominant weight with |mu + rho| >= |lam + rho| is not a weight
            if acc:
                raise LieError("affine Freudenthal is inconsistent")  # pragma: no cover
            return 0
        q, r = divmod(2 * acc, denom)
        if r:
            raise LieError("affine Freudenthal produced a non-integer")  # pragma: no cover
        return q

    def extend_to(self, depth: int):
        for d in range(self.done_grade + 1, depth + 1):
            for mu in self._affine_dominant(d):
                if (mu, d) == (self.lam, 0):
                    continue
                m = self._freudenthal(mu, d)
                if m:
                    self.table[(mu, d)] = m
            self.done_grade = d

    def grade_dim(self, d: int) -> int:
        self.extend_to(d)
        rs = self.rs
        bound = self.lam_sq + 2 * self.k * d * self.den
        if bound not in self._dominant_cache:
            self._dominant_cache[bound] = [mu for mu in _dominant_with_norm(rs, bound)
                                           if _same_class(rs, mu, self.lam)]
        total = 0
        for mu in self._dominant_cache[bound]:
            m = self.mult(mu, d)
            if m:
                total += m * rs.orbit_size(mu)
        return total


@lru_cache(maxsize=128)
def _affine_module(rs: RootSystem, k: int, lam: tuple[int, ...]) -> _AffineModule:
    return _AffineModule(rs, k, lam)


def affine_graded_dims(f: WZWFactor, lam, depth: int = 4) -> GradedDims:
    """Graded dimensions of the level-``f.level`` integrable module with top ``V(lam)``.

    ``lam`` is a :class:`Weight` or a label tuple.  Computed by the affine
    Freudenthal recursion; results are cached per module, so asking for a
    deeper grade later reuses earlier work.

    Examples
    --------
    >>> from svoa_wzw.lie_core import WZWFactor
    >>> affine_graded_dims(WZWFactor("A", 1, 1), (0,), 3).dims
    (1, 3, 4, 7)
    """
    if depth > MAX_DEPTH:
        raise LieError(f"depth {depth} exceeds the cap {MAX_DEPTH}")
    rs = f.root_system
    labels = lam.coords if isinstance(lam, Weight) else tuple(lam)
    if len(labels) != rs.rank or min(labels) < 0 or rs.level_of(labels) > f.level:
        raise LieError(f"{labels} is not integrable for {f}")
    mod = _affine_module(rs, f.level, labels)
    dims = tuple(mod.grade_dim(d) for d in range(depth + 1))
    return GradedDims(weight_conformal_dim(Weight(labels, rs), f.level), dims)


# ----------------------------------------------------------- fusion action


def integrable_weights(f: WZWFactor) -> list[tuple[int, ...]]:
    """All dominant weights of level at most ``f.level``, in lexicographic order."""
    rs = f.root_system
    marks = rs.theta_coroot_marks
    n = rs.rank
    out = []
    mu = [0] * n

    def rec(i, budget):
        if i == n:
            out.append(tuple(mu))
            return
        for c in range(budget // marks[i] + 1):
            mu[i] = c
            rec(i + 1, budget - c * marks[i])
        mu[i] = 0

    rec(0, f.level)
    return sorted(out)


def _conjugate(rs: RootSystem, labels) -> tuple[int, ...]:
    """``-w_0(lam)``: the highest weight of the dual representation."""
    low = rs.reflect_to_dominant(tuple(-x for x in labels))
    return low


def current_action(f: WZWFactor, a: CenterElement, labels) -> tuple[int, ...]:
    """Fusion of the abelian anyon ``a`` with the integrable weight ``labels``.

    For a center element at node ``i`` this is the affine diagram symmetry
    ``lam -> k omega_i + w_J w_0 (lam)``, where ``w_J`` is the longest
    element of the Weyl group of the Levi subgroup omitting node ``i``.
    The E8 level-2 anyon swaps ``0`` and ``omega_1`` and fixes ``omega_8``.
    """
    return _current_action(f, a, tuple(labels))


@lru_cache(maxsize=None)
def _current_action(f: WZWFactor, a: CenterElement, labels: tuple[int, ...]) -> tuple[int, ...]:
    rs = f.root_system
    labels = tuple(labels)
    if a.is_trivial:
        return labels
    if a.exceptional:
        table = {(0,) * 8: (1,) + (0,) * 7, (1,) + (0,) * 7: (0,) * 8}
        return table.get(labels, labels)
    i = a.node - 1
    k = f.level
    # w_0 lam = -lam^*, which is antidominant; w_J takes it to the J-dominant representative
    mu = [-x for x in _conjugate(rs, labels)]
    A = rs.cartan
    n = rs.rank
    while True:
        j = next((j for j in range(n) if j != i and mu[j] < 0), None)
        if j is None:
            break
        c = mu[j]
        mu = [mu[t] - c * A[j][t] for t in range(n)]
    mu[i] += k
    out = tuple(mu)
    if min(out) < 0 or rs.level_of(out) > k:
        raise LieError(f"current action left the alcove: {labels} -> {out}")  # pragma: no cover
    return out


def monodromy_charge(f: WZWFactor, a: CenterElement, labels) -> Fraction:
    """``h(a) + h(lam) - h(a . lam) mod 1``."""
    rs = f.root_system
    labels = tuple(labels)
    h_a = conformal_dim(a, f.level)
    h_l = _labels_conformal_dim(rs, f.level, labels)
    h_al = _labels_conformal_dim(rs, f.level, current_action(f, a, labels))
    return (h_a + h_l - h_al) % 1
