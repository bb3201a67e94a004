"""Exact root-system and weight-lattice arithmetic for the simple types A-G.

Weights are integer tuples in the fundamental-weight basis (Dynkin labels).
Node numbering is Bourbaki throughout.  The invariant form is normalized so
that the highest root has squared length 2, and every inner product is an
exact :class:`fractions.Fraction`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial

TYPES = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")
_FIXED_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


class LieError(ValueError):
    """Invalid Lie-theoretic input (bad rank, foreign weight, ...)."""


def _normalize_type(type_: str, rank: int) -> tuple[str, int]:
    t = type_.upper()
    if t in ("E", "F", "G"):
        t = f"{t}{rank}"
    if t not in TYPES:
        raise LieError(f"unknown simple type {type_!r}")
    if t in _FIXED_RANK:
        if rank != _FIXED_RANK[t]:
            raise LieError(f"type {t} has rank {_FIXED_RANK[t]}, got {rank}")
    elif rank < _MIN_RANK[t]:
        raise LieError(f"type {t} needs rank >= {_MIN_RANK[t]}, got {rank}")
    return t, rank


def _cartan_and_lengths(t: str, n: int) -> tuple[list[list[int]], list[Fraction]]:
    """Cartan matrix with row i = Dynkin labels of alpha_i, plus |alpha_i|^2."""
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        A[i][j], A[j][i] = aij, aji

    two, one = Fraction(2), Fraction(1)
    if t == "A":
        for i in range(n - 1):
            link(i, i + 1)
        lengths = [two] * n
    elif t == "B":
        for i in range(n - 2):
            link(i, i + 1)
        # alpha_n short
        link(n - 2, n - 1, aij=-2, aji=-1)
        lengths = [two] * (n - 1) + [one]
    elif t == "C":
        for i in range(n - 2):
            link(i, i + 1)
        # alpha_n long
        link(n - 2, n - 1, aij=-1, aji=-2)
        lengths = [one] * (n - 1) + [two]
    elif t == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
        lengths = [two] * n
    elif t in ("E6", "E7", "E8"):
        # Bourbaki: 1-3-4-5-...-n with 2 attached to 4
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
        lengths = [two] * n
    elif t == "F4":
        link(0, 1)
        link(1, 2, aij=-2, aji=-1)
        link(2, 3)
        lengths = [two, two, one, one]
    elif t == "G2":
        link(0, 1, aij=-1, aji=-3)
        lengths = [Fraction(2, 3), two]
    else:  # pragma: no cover
        raise LieError(t)
    return A, lengths


_DUAL_COXETER = {"E6": 12, "E7": 18, "E8": 30, "F4": 9, "G2": 4}
_DIM = {"E6": 78, "E7": 133, "E8": 248, "F4": 52, "G2": 14}


def _dual_coxeter(t, n):
    return {"A": n + 1, "B": 2 * n - 1, "C": n + 1, "D": 2 * n - 2}.get(t) or _DUAL_COXETER[t]


def _dim_g(t, n):
    return {"A": n * (n + 2), "B": n * (2 * n + 1), "C": n * (2 * n + 1),
            "D": n * (2 * n - 1)}.get(t) or _DIM[t]


def _center(t, n) -> tuple[int, ...]:
    """Invariant factors of the center of the simply connected group."""
    if t == "A":
        return (n + 1,)
    if t in ("B", "C", "E7"):
        return (2,)
    if t == "D":
        return (2, 2) if n % 2 == 0 else (4,)
    if t == "E6":
        return (3,)
    return ()


def _classical_metric(t, n) -> list[list[Fraction]]:
    """Closed forms for (omega_i, omega_j) in the classical types."""
    G = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            lo, hi = min(i, j), max(i, j)
            if t == "A":
                v = Fraction(lo * (n + 1 - hi), n + 1)
            elif t == "B":
                if hi < n:
                    v = Fraction(lo)
                elif lo < n:
                    v = Fraction(lo, 2)
                else:
                    v = Fraction(n, 4)
            elif t == "C":
                v = Fraction(lo, 2)
            else:  # D
                if hi <= n - 2:
                    v = Fraction(lo)
                elif lo <= n - 2:
                    v = Fraction(lo, 2)
                elif lo == hi:
                    v = Fraction(n, 4)
                else:
                    v = Fraction(n - 2, 4)
            G[i - 1][j - 1] = v
    return G


def fraction_inverse(M: list[list[Fraction]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over the rationals."""
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise LieError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@dataclass(frozen=True)
class RootSystem:
    """Cartan data of a simple Lie algebra.

    Construct through :func:`build_root_system`, which caches instances.
    ``cartan[i]`` holds the Dynkin labels of the simple root ``alpha_i``.
    """

    type: str
    rank: int
    cartan: tuple[tuple[int, ...], ...] = field(repr=False)
    root_lengths: tuple[Fraction, ...] = field(repr=False)
    dual_coxeter: int = field(repr=False)
    dim_g: int = field(repr=False)
    center: tuple[int, ...] = field(repr=False)

    @property
    def name(self) -> str:
        return self.type if self.type in _FIXED_RANK else f"{self.type}{self.rank}"

    def __str__(self):
        return self.name

    @cached_property
    def metric(self) -> tuple[tuple[Fraction, ...], ...]:
        """Gram matrix ``(omega_i, omega_j)`` of the fundamental weights."""
        if self.type in ("A", "B", "C", "D"):
            G = _classical_metric(self.type, self.rank)
        else:
            G = metric_by_inversion(self)
        return tuple(tuple(r) for r in G)

    @cached_property
    def metric_den(self) -> int:
        """Common denominator of :attr:`metric`."""
        from math import lcm
        return lcm(*(x.denominator for row in self.metric for x in row))

    @cached_property
    def metric_int(self) -> tuple[tuple[int, ...], ...]:
        """``metric_den * metric`` as integers, for fast exact inner products."""
        d = self.metric_den
        return tuple(tuple(int(x * d) for x in row) for row in self.metric)

    def inner_scaled(self, lam, mu) -> int:
        """``metric_den * (lam, mu)``."""
        G = self.metric_int
        n = self.rank
        s = 0
        for i in range(n):
            li = lam[i]
            if li:
                row = G[i]
                s += li * sum(row[j] * mu[j] for j in range(n))
        return s

    @cached_property
    def symmetrized_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        """``(alpha_i, alpha_j)``."""
        L = self.root_lengths
        return tuple(tuple(self.cartan[i][j] * L[j] / 2 for j in range(self.rank))
                     for i in range(self.rank))

    @cached_property
    def inverse_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(r) for r in fraction_inverse(
            [[Fraction(x) for x in row] for row in self.cartan]))

    @property
    def simple_roots(self) -> tuple[tuple[int, ...], ...]:
        return self.cartan

    @property
    def fundamental_weights(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    @property
    def rho(self) -> tuple[int, ...]:
        return (1,) * self.rank

    @cached_property
    def half_lengths(self) -> tuple[Fraction, ...]:
        return tuple(L / 2 for L in self.root_lengths)

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots in simple-root coordinates, sorted by height."""
        n = self.rank
        A = self.cartan
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        roots = set(simple)
        layer = list(simple)
        while layer:
            nxt = []
            for beta in layer:
                labels = [sum(beta[j] * A[j][i] for j in range(n)) for i in range(n)]
                for i in range(n):
                    # p = how far the alpha_i-string extends downward from beta
                    p = 0
                    down = list(beta)
                    while True:
                        down[i] -= 1
                        if tuple(down) in roots:
                            p += 1
                        else:
                            break
                    if p - labels[i] > 0:
                        up = list(beta)
                        up[i] += 1
                        up = tuple(up)
                        if up not in roots:
                            roots.add(up)
                            nxt.append(up)
            layer = nxt
        return tuple(sorted(roots, key=lambda r: (sum(r), r)))

    @cached_property
    def positive_root_labels(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.root_to_labels(r) for r in self.positive_roots)

    def root_to_labels(self, coeffs) -> tuple[int, ...]:
        n = self.rank
        return tuple(sum(coeffs[j] * self.cartan[j][i] for j in range(n)) for i in range(n))

    def labels_to_root_coords(self, labels) -> tuple[Fraction, ...]:
        """Coordinates of a weight in the basis of simple roots."""
        Ainv = self.inverse_cartan
        n = self.rank
        return tuple(sum(labels[i] * Ainv[i][j] for i in range(n)) for j in range(n))

    @cached_property
    def _root_class_data(self) -> tuple[int, tuple[tuple[int, ...], ...]]:
        Ainv = self.inverse_cartan
        from math import lcm
        D = lcm(*(x.denominator for row in Ainv for x in row))
        return D, tuple(tuple(int(x * D) for x in row) for row in Ainv)

    def root_class(self, labels) -> tuple[int, ...]:
        """Class of a weight modulo the root lattice, as integer residues."""
        D, M = self._root_class_data
        n = self.rank
        return tuple(sum(labels[i] * M[i][j] for i in range(n)) % D for j in range(n))

    @cached_property
    def theta(self) -> tuple[int, ...]:
        """Highest root, in Dynkin labels."""
        return self.positive_root_labels[-1]

    @cached_property
    def theta_coroot_marks(self) -> tuple[int, ...]:
        """Comarks: ``<omega_i, theta^vee>`` for each node."""
        th = self.positive_roots[-1]
        # theta^vee = theta (long, |theta|^2 = 2) = sum_i a_i alpha_i
        # <omega_i, theta> = a_i |alpha_i|^2 / 2
        marks = [th[i] * self.root_lengths[i] / 2 for i in range(self.rank)]
        assert all(m.denominator == 1 for m in marks)
        return tuple(int(m) for m in marks)

    @cached_property
    def weyl_group_order(self) -> int:
        return weyl_group_order(self.cartan)

    def inner(self, lam, mu) -> Fraction:
        return Fraction(self.inner_scaled(lam, mu), self.metric_den)

    def level_of(self, labels) -> int:
        """``<lambda, theta^vee>``."""
        return sum(a * m for a, m in zip(labels, self.theta_coroot_marks))

    def reflect_to_dominant(self, labels) -> tuple[int, ...]:
        """Dominant representative of the Weyl orbit of ``labels``."""
        t, n = self.type, self.rank
        if (t == "A") or (t in ("B", "C") and n >= 2) or (t == "D" and n >= 4):
            return _classical_dominant(t, n, labels)
        return self.reflect_to_dominant_generic(labels)

    def reflect_to_dominant_generic(self, labels) -> tuple[int, ...]:
        """Reflect through simple roots until dominant (any type)."""
        mu = list(labels)
        A = self.cartan
        n = self.rank
        while True:
            for i in range(n):
                if mu[i] < 0:
                    c = mu[i]
                    row = A[i]
                    for j in range(n):
                        mu[j] -= c * row[j]
                    break
            else:
                return tuple(mu)

    def weyl_orbit(self, labels) -> list[tuple[int, ...]]:
        """Full Weyl orbit of a weight (explicit enumeration)."""
        start = self.reflect_to_dominant(labels)
        A = self.cartan
        n = self.rank
        seen = {start}
        stack = [start]
        while stack:
            mu = stack.pop()
            for i in range(n):
                c = mu[i]
                if c > 0:
                    nu = tuple(mu[j] - c * A[i][j] for j in range(n))
                    if nu not in seen:
                        seen.add(nu)
                        stack.append(nu)
        return sorted(seen, reverse=True)

    def orbit_size(self, labels) -> int:
        mu = self.reflect_to_dominant(labels)
        zero_nodes = [i for i in range(self.rank) if mu[i] == 0]
        sub = [[self.cartan[i][j] for j in zero_nodes] for i in zero_nodes]
        return self.weyl_group_order // weyl_group_order(sub)



def _classical_dominant(t: str, n: int, labels) -> tuple[int, ...]:
    """Weyl-dominant representative via doubled orthogonal coordinates.

    ``S_{n+1}`` permutes coordinates for type A; types B, C, D also flip
    signs (an even number of them for D).
    """
    lab = list(labels)
    if t == "A":
        x = [0] * (n + 1)
        acc = 0
        for j in range(n - 1, -1, -1):
            acc += lab[j]
            x[j] = acc
        x.sort(reverse=True)
        return tuple(x[i] - x[i + 1] for i in range(n))
    if t == "B":
        acc = lab[n - 1]
        x = [0] * n
        x[n - 1] = acc
        for j in range(n - 2, -1, -1):
            acc += 2 * lab[j]
            x[j] = acc
        x = sorted((abs(v) for v in x), reverse=True)
        return tuple((x[i] - x[i + 1]) // 2 for i in range(n - 1)) + (x[n - 1],)
    if t == "C":
        acc = 0
        x = [0] * n
        for j in range(n - 1, -1, -1):
            acc += lab[j]
            x[j] = acc
        x = sorted((abs(v) for v in x), reverse=True)
        return tuple(x[i] - x[i + 1] for i in range(n - 1)) + (x[n - 1],)
    # type D, doubled coordinates
    x = [0] * n
    x[n - 1] = lab[n - 1] - lab[n - 2]
    acc = lab[n - 2] + lab[n - 1]
    x[n - 2] = acc
    for j in range(n - 3, -1, -1):
        acc += 2 * lab[j]
        x[j] = acc
    neg = sum(1 for v in x if v < 0)
    y = sorted((abs(v) for v in x), reverse=True)
    if neg % 2 and y[n - 1] != 0:
        y[n - 1] = -y[n - 1]
    out = [(y[i] - y[i + 1]) // 2 for i in range(n - 2)]
    out.append((y[n - 2] - y[n - 1]) // 2)
    out.append((y[n - 2] + y[n - 1]) // 2)
    return tuple(out)

def weyl_group_order(cartan) -> int:
    """Order of the Weyl group of a (possibly reducible) Cartan matrix."""
    n = len(cartan)
    seen: set[int] = set()
    order = 1
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and cartan[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        order *= _component_weyl_order([[cartan[i][j] for j in comp] for i in comp])
    return order


def _component_weyl_order(C) -> int:
    r = len(C)
    offdiag = {C[i][j] for i in range(r) for j in range(r) if i != j}
    if -3 in offdiag:
        return 12
    laced = -2 not in offdiag
    degree = [sum(1 for j in range(r) if j != i and C[i][j] != 0) for i in range(r)]
    if laced:
        if max(degree, default=0) <= 2:
            return factorial(r + 1)
        arms = _branch_arms(C)
        if arms[0] == 1 and arms[1] == 1:
            return 2 ** (r - 1) * factorial(r)
        return {6: 51840, 7: 2903040, 8: 696729600}[r]
    i, j = next((i, j) for i in range(r) for j in range(r) if C[i][j] == -2)
    if degree[i] == 2 and degree[j] == 2:
        # double bond in the middle of the chain: F4
        return 1152
    return 2 ** r * factorial(r)


def _branch_arms(C) -> list[int]:
    r = len(C)
    nbrs = {i: [j for j in range(r) if j != i and C[i][j] != 0] for i in range(r)}
    node = next(i for i in range(r) if len(nbrs[i]) == 3)
    arms = []
    for start in nbrs[node]:
        prev, cur, length = node, start, 1
        while True:
            nxt = [j for j in nbrs[cur] if j != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return sorted(arms)


def metric_by_inversion(rs: RootSystem) -> list[list[Fraction]]:
    """``(omega_i, omega_j) = (A^{-1})_{ij} |alpha_j|^2 / 2`` by exact inversion."""
    Ainv = rs.inverse_cartan
    n = rs.rank
    return [[Ainv[i][j] * rs.root_lengths[j] / 2 for j in range(n)] for i in range(n)]


@lru_cache(maxsize=None)
def build_root_system(type_: str, rank: int | None = None) -> RootSystem:
    """Bourbaki data for a simple type; exceptional types may omit ``rank``."""
    if rank is None:
        t = type_.upper()
        if t not in _FIXED_RANK:
            raise LieError(f"rank required for type {type_!r}")
        rank = _FIXED_RANK[t]
    t, n = _normalize_type(type_, rank)
    A, lengths = _cartan_and_lengths(t, n)
    return RootSystem(
        type=t,
        rank=n,
        cartan=tuple(tuple(r) for r in A),
        root_lengths=tuple(lengths),
        dual_coxeter=_dual_coxeter(t, n),
        dim_g=_dim_g(t, n),
        center=_center(t, n),
    )


def parse_root_system(name: str) -> RootSystem:
    """``"D12"``, ``"E7"``, ``"A1"`` -> RootSystem."""
    name = name.strip().upper()
    if name in _FIXED_RANK:
        return build_root_system(name)
    return build_root_system(name[0], int(name[1:]))


# --------------------------------------------------------------------- weights


@dataclass(frozen=True)
class Weight:
    """A weight in Dynkin labels together with its ambient root system."""

    coords: tuple[int, ...]
    rs: RootSystem

    def __post_init__(self):
        if len(self.coords) != self.rs.rank:
            raise LieError(f"weight {self.coords} has wrong length for {self.rs}")
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    @property
    def level(self) -> int:
        return self.rs.level_of(self.coords)

    def integrable_at(self, k: int) -> bool:
        return self.is_dominant and self.level <= k

    def __add__(self, other: "Weight") -> "Weight":
        _same(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.rs)

    def __sub__(self, other: "Weight") -> "Weight":
        _same(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.rs)

    def __rmul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coords), self.rs)

    def __str__(self):
        return f"{self.rs}{list(self.coords)}"


def _same(a: Weight, b: Weight):
    if a.rs != b.rs:
        raise LieError(f"weights live in different root systems: {a.rs} vs {b.rs}")


def weight(rs: RootSystem, coords) -> Weight:
    return Weight(tuple(coords), rs)


def fundamental(rs: RootSystem, i: int, k: int = 1) -> Weight:
    """``k * omega_i`` with 1-based Bourbaki node ``i``."""
    if not 1 <= i <= rs.rank:
        raise LieError(f"node {i} out of range for {rs}")
    return Weight(tuple(k * int(j == i - 1) for j in range(rs.rank)), rs)


def inner(lam: Weight, mu: Weight) -> Fraction:
    """Invariant form with ``(theta, theta) = 2``."""
    _same(lam, mu)
    return lam.rs.inner(lam.coords, mu.coords)


def rho(rs: RootSystem) -> Weight:
    return Weight(rs.rho, rs)


def theta(rs: RootSystem) -> Weight:
    return Weight(rs.theta, rs)


# ---------------------------------------------------------------- center data


# (center value) -> Bourbaki node, per type
def _node_table(rs: RootSystem) -> dict[tuple[int, ...], int]:
    t, n = rs.type, rs.rank
    if t == "A":
        return {(i,): i for i in range(1, n + 1)}
    if t == "B":
        return {(1,): 1}
    if t == "C":
        return {(1,): n}
    if t == "D":
        if n % 2 == 0:
            return {(1, 1): 1, (0, 1): n - 1, (1, 0): n}
        return {(2,): 1, (3,): n - 1, (1,): n}
    if t == "E6":
        return {(1,): 1, (2,): 6}
    if t == "E7":
        return {(1,): 7}
    return {}


_D_NAMES = {(1, 1): "v", (1, 0): "s+", (0, 1): "s-", (2,): "v", (1,): "s+", (3,): "s-"}


@dataclass(frozen=True)
class CenterElement:
    """Element of the center of the simply connected group.

    ``value`` is a tuple of residues modulo ``rs.center``.  The special
    ``exceptional=True`` element stands for the abelian anyon of E8 at
    level 2, which has no center counterpart.
    """

    rs: RootSystem
    value: tuple[int, ...]
    exceptional: bool = False

    def __post_init__(self):
        if self.exceptional:
            if self.rs.type != "E8":
                raise LieError("only E8 carries the exceptional current")
            return
        if len(self.value) != len(self.rs.center):
            raise LieError(f"{self.value} is not an element of the center of {self.rs}")
        object.__setattr__(self, "value",
                           tuple(v % m for v, m in zip(self.value, self.rs.center)))

    @property
    def is_trivial(self) -> bool:
        return not self.exceptional and all(v == 0 for v in self.value)

    @property
    def order(self) -> int:
        if self.exceptional:
            return 2
        o = 1
        for v, m in zip(self.value, self.rs.center):
            from math import gcd
            ov = m // gcd(v, m)
            o = o * ov // gcd(o, ov)
        return o

    @property
    def node(self) -> int | None:
        """Cominuscule node (1-based) attached to this element."""
        if self.exceptional:
            return 1
        if self.is_trivial:
            return None
        return _node_table(self.rs)[self.value]

    @property
    def name(self) -> str:
        if self.exceptional:
            return "x3875"
        if self.is_trivial:
            return "0"
        t = self.rs.type
        if t == "D":
            return _D_NAMES[self.value]
        if t == "B":
            return "v"
        if t == "C":
            return "c"
        return str(self.value[0])

    def __add__(self, other: "CenterElement") -> "CenterElement":
        if self.rs != other.rs:
            raise LieError("center elements of different groups")
        if self.exceptional or other.exceptional:
            if self.exceptional and other.exceptional:
                return identity_element(self.rs)
            return self if self.exceptional else other
        return CenterElement(self.rs, tuple(a + b for a, b in zip(self.value, other.value)))

    def __str__(self):
        return f"{self.rs}:{self.name}"


def identity_element(rs: RootSystem) -> CenterElement:
    return CenterElement(rs, tuple(0 for _ in rs.center))


def center_elements(rs: RootSystem) -> list[CenterElement]:
    """All elements of the center, identity first."""
    out = [()]
    for m in rs.center:
        out = [v + (i,) for v in out for i in range(m)]
    return [CenterElement(rs, v) for v in out]


def center_element(rs: RootSystem, name) -> CenterElement:
    """Look up a center element by name: ``'v'``, ``'s+'``, ``'c'``, ``3``, ``'x3875'``."""
    if name in ("x", "x3875") and rs.type == "E8":
        return CenterElement(rs, (), exceptional=True)
    for z in center_elements(rs):
        if z.name == str(name):
            return z
    raise LieError(f"no center element {name!r} in {rs}")


def current_weight(a: CenterElement, k: int) -> Weight:
    """Highest weight ``k * omega_node`` of the abelian anyon attached to ``a``.

    The E8 exceptional current is the level-2 anyon with highest weight
    ``omega_1`` (the 3875).
    """
    if k < 1:
        raise LieError("level must be positive")
    if a.exceptional:
        if k != 2:
            raise LieError("the exceptional E8 current exists only at level 2")
        return fundamental(a.rs, 1)
    if a.is_trivial:
        raise LieError("the trivial center element labels the vacuum")
    return fundamental(a.rs, a.node, k)


# ------------------------------------------------------------- WZW factors


@dataclass(frozen=True, order=True)
class WZWFactor:
    """A simply connected WZW algebra ``G_k``.

    ``type``/``rank`` may name the small-rank aliases B1 and D2, which only
    :func:`canonicalize` understands.
    """

    type: str
    rank: int
    level: int

    def __post_init__(self):
        if self.level < 1:
            raise LieError("level must be >= 1")
        t = self.type.upper()
        if t in ("E", "F", "G"):
            t = f"{t}{self.rank}"
        object.__setattr__(self, "type", t)

    @property
    def root_system(self) -> RootSystem:
        return build_root_system(self.type, self.rank)

    @property
    def is_alias(self) -> bool:
        return (self.type, self.rank) in (("B", 1), ("D", 2))

    @property
    def triality(self) -> bool:
        return self.type == "D" and self.rank == 4

    @property
    def name(self) -> str:
        base = self.type if self.type in _FIXED_RANK else f"{self.type}{self.rank}"
        return f"{base}_{self.level}"

    @property
    def group_name(self) -> str:
        """Compact-group notation: ``Spin(12)_2``, ``Sp(2x3)_1``, ``SU(6)_2``."""
        t, n, k = self.type, self.rank, self.level
        if t == "A":
            g = f"SU({n + 1})"
        elif t == "B":
            g = f"Spin({2 * n + 1})"
        elif t == "C":
            g = f"Sp(2x{n})"
        elif t == "D":
            g = f"Spin({2 * n})"
        else:
            g = t
        return f"{g}_{k}"

    def __str__(self):
        return self.name


def canonicalize(factor: WZWFactor) -> tuple[WZWFactor, ...]:
    """Rewrite small-rank Spin groups through the exceptional isomorphisms.

    B1 -> A1 at twice the level, D2 -> A1 x A1, B2 -> C2, D3 -> A3.  Returns
    a tuple because D2 is not simple.  D4 is returned unchanged; its triality
    is exposed as ``WZWFactor.triality``.
    """
    t, n, k = factor.type, factor.rank, factor.level
    if t == "B" and n == 1:
        return (WZWFactor("A", 1, 2 * k),)
    if t == "D" and n == 2:
        return (WZWFactor("A", 1, k), WZWFactor("A", 1, k))
    if t == "B" and n == 2:
        return (WZWFactor("C", 2, k),)
    if t == "D" and n == 3:
        return (WZWFactor("A", 3, k),)
    return (factor,)


def spin_factor(m: int, k: int) -> tuple[WZWFactor, ...]:
    """Canonical form of ``Spin(m)_k`` for any ``m >= 3``."""
    if m < 3:
        raise LieError("Spin(m) needs m >= 3")
    t = "B" if m % 2 else "D"
    return canonicalize(WZWFactor(t, m // 2, k))


def parse_factor(text: str) -> WZWFactor:
    """``"D12_1"`` / ``"E7_2"`` -> WZWFactor."""
    body, level = text.strip().upper().split("_")
    rs_name = body
    if rs_name in _FIXED_RANK:
        return WZWFactor(rs_name, _FIXED_RANK[rs_name], int(level))
    return WZWFactor(rs_name[0], int(rs_name[1:]), int(level))
