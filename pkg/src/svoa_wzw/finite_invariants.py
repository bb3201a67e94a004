"""Invariant dimensions for symmetric and wreath-type groups.

Two families are covered: ``S_{m+1}`` (or ``A_{m+1}``) acting on ``Sym^d``
of the standard ``m``-dimensional representation, and ``2^{2m}:(S_3 x S_m)``
acting on ``m x m x m``.  Both are computed from cycle types with exact
rationals, so ``m = 20`` costs ``p(21)`` terms instead of ``21!``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, prod

KINDS = ("symmetric", "alternating", "cube")


@dataclass(frozen=True)
class PermGroupSpec:
    """One of the finite groups handled here.

    ``kind`` is ``"symmetric"`` (``S_{m+1}`` on the standard rep),
    ``"alternating"`` (``A_{m+1}``) or ``"cube"`` (``2^{2m}:(S_3 x S_m)`` on
    ``m^{x3}``).
    """

    kind: str
    m: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        if self.m < 2:
            raise ValueError("m must be >= 2")

    @property
    def order(self) -> int:
        n = self.m + 1
        if self.kind == "symmetric":
            return factorial(n)
        if self.kind == "alternating":
            return factorial(n) // 2
        return 4 ** self.m * 6 * factorial(self.m)

    def invariant_dim(self, degree: int = 3) -> int:
        if self.kind == "cube":
            return invariant_dim_cube(self.m)
        return invariant_dim_sym3_standard(self.m, self.kind, degree)


# ------------------------------------------------------------- partitions


def partitions(n: int, largest: int | None = None):
    """Partitions of ``n`` as non-increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def centralizer_order(cycle_type) -> int:
    """``z_mu = prod_k k^{m_k} m_k!``."""
    return prod(k ** c * factorial(c) for k, c in Counter(cycle_type).items())


def is_even(cycle_type) -> bool:
    return sum(k - 1 for k in cycle_type) % 2 == 0


def fixed_points_of_power(cycle_type, r: int) -> int:
    """Number of points fixed by ``sigma^r``: cycles whose length divides ``r``."""
    return sum(k for k in cycle_type if r % k == 0)


@lru_cache(maxsize=None)
def _sym_power_terms(d: int) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    """``h_d = sum_{mu |- d} p_mu / z_mu`` as ``(mu, 1/z_mu)`` pairs."""
    return tuple((mu, Fraction(1, centralizer_order(mu))) for mu in partitions(d))


def sym_character(cycle_type, d: int) -> Fraction:
    """Character of ``Sym^d`` of the standard rep at a permutation of this cycle type.

    Uses power sums of the eigenvalues, ``p_r = fix(sigma^r) - 1``.
    """
    total = Fraction(0)
    for mu, w in _sym_power_terms(d):
        total += w * prod(fixed_points_of_power(cycle_type, r) - 1 for r in mu)
    return total


def invariant_dim_sym3_standard(m: int, kind: str = "symmetric", degree: int = 3) -> int:
    """Dimension of the ``S_{m+1}``- or ``A_{m+1}``-invariants in ``Sym^degree`` of the standard rep.

    Examples
    --------
    >>> invariant_dim_sym3_standard(9)
    1
    >>> invariant_dim_sym3_standard(4, "alternating")
    1
    >>> invariant_dim_sym3_standard(5, degree=1)
    0
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    if kind not in ("symmetric", "alternating"):
        raise ValueError("kind must be 'symmetric' or 'alternating'")
    if degree < 0:
        raise ValueError("degree must be >= 0")
    n = m + 1
    total = Fraction(0)
    for ct in partitions(n):
        if kind == "alternating" and not is_even(ct):
            continue
        total += Fraction(factorial(n), centralizer_order(ct)) * sym_character(ct, degree)
    order = factorial(n) // (2 if kind == "alternating" else 1)
    avg = total / order
    if avg.denominator != 1:
        raise ArithmeticError("character average is not an integer")  # pragma: no cover
    return int(avg)


# ------------------------------------------------------------------- cube


def klein_generators(m: int) -> list[tuple[tuple[int, ...], ...]]:
    """Generators of ``2^{2m}``: for each ``j``, flip coordinate ``j`` in two of the three factors.

    An element is a triple of sign vectors ``(e1, e2, e3)`` with
    ``e1[j] e2[j] e3[j] = 1`` for every ``j``.
    """
    gens = []
    for j in range(m):
        for pair in ((0, 1), (0, 2)):
            signs = [[1] * m for _ in range(3)]
            for f in pair:
                signs[f][j] = -1
            gens.append(tuple(tuple(s) for s in signs))
    return gens


def kernel_elements(m: int) -> list[tuple[tuple[int, ...], ...]]:
    """The central ``2^2`` whose quotient gives ``2^{2(m-1)}``: constant sign triples."""
    out = []
    for s1, s2 in product((1, -1), repeat=2):
        out.append(((s1,) * m, (s2,) * m, (s1 * s2,) * m))
    return out


def monomial_sign(g, index) -> int:
    a, b, c = index
    return g[0][a] * g[1][b] * g[2][c]


def sign_fixed_monomials(m: int) -> list[tuple[int, int, int]]:
    """Basis vectors ``e_{a,b,c}`` fixed by every sign generator.

    The sign group acts diagonally on the monomial basis, so its
    invariants are spanned by the monomials it fixes.
    """
    gens = klein_generators(m)
    return [idx for idx in product(range(m), repeat=3)
            if all(monomial_sign(g, idx) == 1 for g in gens)]


def kernel_acts_trivially(m: int) -> bool:
    """Whether the central ``2^2`` fixes every basis vector of ``m^{x3}``."""
    return all(monomial_sign(g, idx) == 1 for g in kernel_elements(m)
               for idx in product(range(m), repeat=3))


def _permutation_orbit_count(points, m: int) -> int:
    """Burnside count of ``S_3 x S_m`` orbits on a set of index triples.

    ``S_m`` relabels all three indices at once and ``S_3`` permutes the
    tensor positions.  A point ``(a, b, c)`` is fixed by ``(pi, sigma)`` iff
    the triple of its ``sigma``-images equals its ``pi``-permutation.
    Averaged over cycle types of ``S_m``; exact when the points are
    diagonal triples (the only case that arises).
    """
    pts = set(points)
    if any(len(set(p)) != 1 for p in pts):
        raise ValueError("orbit counting by cycle type needs diagonal triples")
    diag = {p[0] for p in pts}
    if diag != set(range(m)) and diag:
        raise ValueError("diagonal support must be all of 1..m or empty")
    if not diag:
        return 0
    total = Fraction(0)
    for ct in partitions(m):
        # every S_3 element fixes a diagonal triple; sigma fixes e_{iii} iff i is a fixed point
        total += Fraction(factorial(m), centralizer_order(ct)) * 6 * fixed_points_of_power(ct, 1)
    avg = total / (6 * factorial(m))
    if avg.denominator != 1:
        raise ArithmeticError("Burnside count is not an integer")  # pragma: no cover
    return int(avg)


def invariant_dim_cube(m: int, with_permutations: bool = True) -> int:
    """Invariants of ``2^{2m}:(S_3 x S_m)`` on ``m x m x m``.

    Computed in stages: the sign group ``2^{2m}`` fixes exactly the span of
    the diagonal vectors ``e_{i,i,i}``, then a Burnside count over cycle
    types of ``S_m`` (with ``S_3`` acting trivially on that span) gives the
    permutation invariants.  With ``with_permutations=False`` only the sign
    stage is applied.

    Examples
    --------
    >>> invariant_dim_cube(3)
    1
    >>> invariant_dim_cube(5, with_permutations=False)
    5
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    if not kernel_acts_trivially(m):
        raise ArithmeticError("central 2^2 acts nontrivially")  # pragma: no cover
    fixed = sign_fixed_monomials(m)
    if not with_permutations:
        return len(fixed)
    return _permutation_orbit_count(fixed, m)
