"""Independent oracles shared by the test modules."""
from fractions import Fraction
from itertools import permutations, product
from math import factorial

import numpy as np
from scipy.linalg import null_space

from svoa_wzw.finite_invariants import klein_generators


def weyl_kac_dims(f, lam, depth, box=3):
    """Graded dimensions from the specialized Weyl-Kac character formula.

    ``sum_gamma d(lam + rho + K gamma) q^{(lam+rho, gamma) + K |gamma|^2 / 2}``
    over the coroot lattice, divided by ``prod (1 - q^n)^{dim g}``.
    """
    rs = f.root_system
    n = rs.rank
    K = f.level + rs.dual_coxeter
    rho = (1,) * n
    lr = tuple(a + 1 for a in lam)
    pos = rs.positive_root_labels
    coroots = []
    for i, al in enumerate(rs.simple_roots):
        s = Fraction(2) / rs.inner(al, al)
        coroots.append(tuple(int(s * x) for x in al))

    def d(v):
        num = den = Fraction(1)
        for a in pos:
            num *= rs.inner(a, v)
            den *= rs.inner(a, rho)
        return num / den

    num = [Fraction(0)] * (depth + 1)
    for cs in product(range(-box, box + 1), repeat=n):
        g = tuple(sum(c * r[j] for c, r in zip(cs, coroots)) for j in range(n))
        e = rs.inner(lr, g) + K * rs.inner(g, g) / 2
        assert e.denominator == 1
        if 0 <= e <= depth:
            num[int(e)] += d(tuple(x + K * y for x, y in zip(lr, g)))
    inv = [1] + [0] * depth
    for m in range(1, depth + 1):
        for _ in range(rs.dim_g):
            for j in range(m, depth + 1):
                inv[j] += inv[j - m]
    return tuple(int(sum(num[i] * inv[j - i] for i in range(j + 1))) for j in range(depth + 1))


def rr_oracle(current, depth):
    """Ramond-Ramond constancy from Weyl-Kac graded dimensions.

    Returns the list of ``(pair, exponent, difference)`` entries where
    ``chi(a) - chi(J a)`` has a nonzero coefficient away from ``q^0``.
    """
    from svoa_wzw.anyon_arith import (
        current_action, integrable_weights, monodromy_charge, sugawara_c, weight_conformal_dim)
    from svoa_wzw.lie_core import Weight

    fs, els = current.factors, current.elements
    c = sugawara_c(fs)
    cache = {}

    def series(labels):
        out = {}
        h = sum(weight_conformal_dim(Weight(l, f.root_system), f.level) for f, l in zip(fs, labels))
        poly = [1]
        for f, l in zip(fs, labels):
            key = (f, l)
            if key not in cache:
                cache[key] = weyl_kac_dims(f, l, depth + 1)
            g = cache[key]
            poly = [sum(poly[i] * g[n - i] for i in range(min(n + 1, len(poly))))
                    for n in range(depth + 2)]
        for n, v in enumerate(poly):
            out[h - c / 24 + n] = v
        return out

    bad = []
    for labels in product(*(integrable_weights(f) for f in fs)):
        q = sum(monodromy_charge(f, a, l) for f, a, l in zip(fs, els, labels)) % 1
        if q != Fraction(1, 2):
            continue
        partner = tuple(current_action(f, a, l) for f, a, l in zip(fs, els, labels))
        sa, sb = series(labels), series(partner)
        lo = min(min(sa), min(sb))
        for e in sorted(set(sa) | set(sb)):
            if e > lo + depth:
                continue
            diff = sa.get(e, 0) - sb.get(e, 0)
            if diff and e != 0:
                bad.append(((labels, partner), e, diff))
    return bad


# ------------------------------------------------------- finite groups


def _standard_matrix(perm):
    """Matrix of a permutation of ``{0..m}`` on ``sum x = 0`` in the basis ``e_i - e_m``."""
    n = len(perm)
    P = np.zeros((n, n))
    for i, j in enumerate(perm):
        P[j, i] = 1
    B = np.zeros((n, n - 1))
    for i in range(n - 1):
        B[i, i], B[n - 1, i] = 1, -1
    return np.linalg.lstsq(B, P @ B, rcond=None)[0]


def _sign(perm):
    s, seen = 1, set()
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        s *= (-1) ** (length - 1)
    return s


def brute_sym_invariants(m, degree, alternating=False):
    """Average ``g^{x d}`` over the group, then trace against the symmetrizer."""
    d = m ** degree
    S = np.zeros((d, d))
    idx = list(product(range(m), repeat=degree))
    pos = {t: i for i, t in enumerate(idx)}
    for sigma in permutations(range(degree)):
        for t in idx:
            S[pos[tuple(t[s] for s in sigma)], pos[t]] += 1
    S /= factorial(degree)
    avg = np.zeros((d, d))
    count = 0
    for perm in permutations(range(m + 1)):
        if alternating and _sign(perm) < 0:
            continue
        g = _standard_matrix(perm)
        G = g
        for _ in range(degree - 1):
            G = np.kron(G, g)
        avg += G
        count += 1
    return int(round(np.trace(S @ avg / count)))


def cube_generators(m):
    """Matrices on ``m^{x3}`` generating ``2^{2m}:(S_3 x S_m)``."""
    idx = list(product(range(m), repeat=3))
    pos = {t: i for i, t in enumerate(idx)}
    N = len(idx)
    mats = []
    for g in klein_generators(m):
        D = np.diag([g[0][a] * g[1][b] * g[2][c] for a, b, c in idx]).astype(float)
        mats.append(D)
    perms_m = [tuple([1, 0] + list(range(2, m))), tuple(list(range(1, m)) + [0])]
    for p in perms_m:
        M = np.zeros((N, N))
        for t in idx:
            M[pos[tuple(p[x] for x in t)], pos[t]] = 1
        mats.append(M)
    for s in [(1, 0, 2), (1, 2, 0)]:
        M = np.zeros((N, N))
        for t in idx:
            M[pos[tuple(t[i] for i in s)], pos[t]] = 1
        mats.append(M)
    return mats


def brute_cube_invariants(m):
    """Null space of ``g - 1`` stacked over the generators of the cube group."""
    mats = cube_generators(m)
    N = mats[0].shape[0]
    return null_space(np.vstack([M - np.eye(N) for M in mats])).shape[1]
