"""Numerical checks on cubic tensors: constrained maxima of ``sum x_i^3`` and
the quadratic contraction identity satisfied by superconformal cubics.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DEFAULT_TOL = 1e-8
DEDUP_TOL = 1e-6
MAX_ASCENT_STEPS = 2000
MAX_NEWTON_STEPS = 50


# ------------------------------------------------------------ maximization


@dataclass(frozen=True)
class ConstrainedPoint:
    """Critical point of ``tau(x) = sum x_i^3`` on ``sum x = 0``, ``sum x^2 = m(m+1)``.

    ``a`` and ``b`` are the Lagrange multipliers in ``3 x_i^2 = a + 2 b x_i``.
    ``restricted_eigs`` are the eigenvalues of the Lagrangian Hessian on the
    tangent space; ``signature`` counts positive and negative entries of the
    full Hessian ``6 diag(x)``.
    """

    x: tuple[float, ...]
    c1: float
    c2: float
    objective: float
    a: float
    b: float
    restricted_eigs: tuple[float, ...] = field(repr=False)
    signature: tuple[int, int]

    @property
    def m(self) -> int:
        return len(self.x) - 1

    @property
    def is_strong_max(self) -> bool:
        return all(e < 0 for e in self.restricted_eigs)


@dataclass
class MaximaReport:
    """Result of :func:`find_strong_maxima`."""

    m: int
    points: tuple[ConstrainedPoint, ...]
    starts: int
    seed: int
    unconverged: int

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def _retract(X: np.ndarray, radius: float) -> np.ndarray:
    X = X - X.mean(axis=1, keepdims=True)
    return X * (radius / np.linalg.norm(X, axis=1, keepdims=True))


def _tangent_project(X: np.ndarray, G: np.ndarray) -> np.ndarray:
    G = G - G.mean(axis=1, keepdims=True)
    nx = np.einsum("ij,ij->i", X, X)
    return G - X * (np.einsum("ij,ij->i", G, X) / nx)[:, None]


def _ascend(X: np.ndarray, radius: float, tol: float) -> np.ndarray:
    """Batched projected-gradient ascent with a step scaled to the sphere."""
    step = 0.05 / radius
    for _ in range(MAX_ASCENT_STEPS):
        G = _tangent_project(X, 3.0 * X * X)
        X = _retract(X + step * G, radius)
        if np.max(np.linalg.norm(G, axis=1)) < tol * radius:
            break
    return X


def _newton(x: np.ndarray, radius: float, tol: float):
    """Solve the Lagrange system for ``(x, a, b)`` starting near ``x``."""
    n = len(x)
    r2 = radius * radius
    b = 3.0 * float(np.sum(x ** 3)) / (2.0 * r2)
    a = 3.0 * r2 / n
    for _ in range(MAX_NEWTON_STEPS):
        F = np.concatenate([3 * x * x - a - 2 * b * x, [x.sum(), x @ x - r2]])
        if np.max(np.abs(F)) < tol * max(1.0, r2):
            return x, a, b, True
        J = np.zeros((n + 2, n + 2))
        J[:n, :n] = np.diag(6 * x - 2 * b)
        J[:n, n] = -1.0
        J[:n, n + 1] = -2 * x
        J[n, :n] = 1.0
        J[n + 1, :n] = 2 * x
        try:
            d = np.linalg.solve(J, -F)
        except np.linalg.LinAlgError:
            return x, a, b, False
        x = x + d[:n]
        a += d[n]
        b += d[n + 1]
    F = np.concatenate([3 * x * x - a - 2 * b * x, [x.sum(), x @ x - r2]])
    return x, a, b, bool(np.max(np.abs(F)) < tol * max(1.0, r2))


def tangent_basis(x: np.ndarray) -> np.ndarray:
    """Orthonormal basis (as columns) of ``{v : sum v = 0, x . v = 0}``."""
    n = len(x)
    C = np.vstack([np.ones(n), x])
    _, _, Vt = np.linalg.svd(C)
    return Vt[2:].T


def _classify(x: np.ndarray, a: float, b: float) -> ConstrainedPoint:
    B = tangent_basis(x)
    L = np.diag(6 * x - 2 * b)
    eigs = np.linalg.eigvalsh(B.T @ L @ B)
    h = 6 * x
    return ConstrainedPoint(
        x=tuple(float(v) for v in x),
        c1=float(x.sum()),
        c2=float(x @ x),
        objective=float(np.sum(x ** 3)),
        a=float(a),
        b=float(b),
        restricted_eigs=tuple(float(e) for e in eigs),
        signature=(int(np.sum(h > 0)), int(np.sum(h < 0))),
    )


def find_strong_maxima(m: int, starts: int | None = None, tol: float = DEFAULT_TOL,
                       seed: int = 0) -> MaximaReport:
    """Strong maxima of ``sum x_i^3`` subject to ``sum x_i = 0``, ``sum x_i^2 = m(m+1)``.

    Random starts on the constraint sphere are pushed uphill by projected
    gradient ascent, polished by Newton's method on the Lagrange system and
    deduplicated at ``1e-6``.  Only points whose restricted Hessian is
    negative definite are returned, sorted by the index of their largest
    coordinate.  Starts that fail to converge are counted, not raised.

    Parameters
    ----------
    m : int
        Dimension of the hyperplane; points live in ``R^{m+1}``.
    starts : int, optional
        Number of random starts, at least ``100 (m + 1)``.  Defaults to
        ``200 (m + 1)``.
    tol : float
        Convergence tolerance for the Lagrange residual.
    seed : int
        Seed for :func:`numpy.random.default_rng`.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    n = m + 1
    if starts is None:
        starts = 200 * n
    if starts < 100 * n:
        raise ValueError(f"need at least {100 * n} starts")
    radius = float(np.sqrt(m * (m + 1)))
    rng = np.random.default_rng(seed)
    X = _retract(rng.standard_normal((starts, n)), radius)
    X = _ascend(X, radius, tol)
    found: list[ConstrainedPoint] = []
    unconverged = 0
    for x0 in X:
        x, a, b, ok = _newton(x0.copy(), radius, tol)
        if not ok:
            unconverged += 1
            continue
        if any(np.max(np.abs(np.array(p.x) - x)) < DEDUP_TOL for p in found):
            continue
        p = _classify(x, a, b)
        if p.is_strong_max:
            found.append(p)
    found.sort(key=lambda p: int(np.argmax(p.x)))
    return MaximaReport(m, tuple(found), starts, seed, unconverged)


# ------------------------------------------------------------ cubic tensors


@dataclass
class CubicTensor:
    """Symmetric 3-tensor ``T`` with ``tau(y) = T_{pqr} y_p y_q y_r / 6``."""

    data: np.ndarray

    def __post_init__(self):
        T = np.asarray(self.data, dtype=float)
        if T.ndim != 3 or len(set(T.shape)) != 1:
            raise ValueError("expected an n x n x n array")
        self.data = T

    @property
    def n(self) -> int:
        return self.data.shape[0]

    def is_symmetric(self, tol: float = 1e-12) -> bool:
        T = self.data
        perms = [(0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
        return all(np.max(np.abs(T - T.transpose(p))) <= tol for p in perms)

    def value(self, y) -> float:
        y = np.asarray(y, dtype=float)
        return float(np.einsum("pqr,p,q,r->", self.data, y, y, y)) / 6.0

    def rotated(self, Q: np.ndarray) -> "CubicTensor":
        return CubicTensor(np.einsum("ap,bq,cr,pqr->abc", Q, Q, Q, self.data))

    def scaled(self, s: float) -> "CubicTensor":
        return CubicTensor(self.data * s)


def symmetrize(A: np.ndarray) -> np.ndarray:
    perms = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
    return sum(A.transpose(p) for p in perms) / 6.0


def hyperplane_basis(m: int) -> np.ndarray:
    """``(m+1) x m`` matrix with orthonormal columns spanning ``sum x_i = 0``."""
    n = m + 1
    _, _, Vt = np.linalg.svd(np.ones((1, n)))
    return Vt[1:].T


def canonical_tensor(m: int) -> CubicTensor:
    """``sum_i x_i^3`` restricted to the hyperplane ``sum x_i = 0`` in orthonormal coordinates."""
    if m < 2:
        raise ValueError("m must be >= 2")
    U = hyperplane_basis(m)
    return CubicTensor(6.0 * np.einsum("ip,iq,ir->pqr", U, U, U))


def contraction(T: CubicTensor) -> np.ndarray:
    """``C_{pqst} = T_{rps} T_{rqt} - T_{rpt} T_{rqs}``."""
    A = np.einsum("rps,rqt->pqst", T.data, T.data)
    return A - A.transpose(0, 1, 3, 2)


def _delta_form(n: int) -> np.ndarray:
    I = np.eye(n)
    D = np.einsum("ps,qt->pqst", I, I)
    return D - D.transpose(0, 1, 3, 2)


@dataclass(frozen=True)
class IdentityReport:
    passed: bool
    scale: float
    residual: float


def check_superconformal_identity(T: CubicTensor, tol: float = DEFAULT_TOL) -> IdentityReport:
    """Test ``C_{pqst} = -lambda (d_ps d_qt - d_pt d_qs)`` for one positive ``lambda``.

    ``lambda`` is the least-squares fit; the residual is the largest
    entrywise deviation, relative to ``max(1, lambda)``.
    """
    if not T.is_symmetric(1e-10):
        raise ValueError("tensor is not symmetric")
    C = contraction(T)
    D = _delta_form(T.n)
    lam = -float(np.sum(C * D) / np.sum(D * D))
    resid = float(np.max(np.abs(C + lam * D))) / max(1.0, abs(lam))
    return IdentityReport(passed=lam > tol and resid < tol, scale=lam, residual=resid)


@dataclass(frozen=True)
class SecondOrderReport:
    """Taylor data of a unit-normalized tensor at a maximizing direction."""

    tau0: float
    tau1_norm: float
    tau2_eigs: tuple[float, ...]
    predicted: float
    scalar_residual: float
    trace_residual: float
    scale: float
    tol: float

    @property
    def passed(self) -> bool:
        return (self.tau1_norm < self.tol and self.scalar_residual < self.tol
                and self.trace_residual < self.tol)


def _complete_basis(e0: np.ndarray) -> np.ndarray:
    n = len(e0)
    _, _, Vt = np.linalg.svd(e0.reshape(1, n))
    return np.vstack([e0, Vt[1:]])


def check_second_order_relation(T: CubicTensor, e0, tol: float = DEFAULT_TOL) -> SecondOrderReport:
    """Check the second-order structure of ``tau`` at a maximizing unit vector ``e0``.

    ``T`` is first rescaled so that the contraction identity holds with
    ``lambda = 1``.  In an orthonormal basis ``e0, e1, ...`` with
    ``tau0 = T_000 / 6``, ``tau1_i = T_00i / 2`` and ``tau2_ij = T_0ij``,
    the report compares ``tau2`` with the scalar
    ``3 tau0 - sqrt(1 + 9 tau0^2)`` and evaluates the trace condition
    ``6 tau0 + (n - 1)(3 tau0 - sqrt(1 + 9 tau0^2))``.

    Raises
    ------
    ValueError
        If the identity fails or ``e0`` is not a critical direction.
    """
    ident = check_superconformal_identity(T, tol)
    if not ident.passed:
        raise ValueError("tensor does not satisfy the contraction identity")
    e0 = np.asarray(e0, dtype=float)
    e0 = e0 / np.linalg.norm(e0)
    Tn = T.scaled(1.0 / np.sqrt(ident.scale)).rotated(_complete_basis(e0))
    A = Tn.data
    tau0 = A[0, 0, 0] / 6.0
    tau1 = A[0, 0, 1:] / 2.0
    tau1_norm = float(np.linalg.norm(tau1))
    if tau1_norm > tol:
        raise ValueError(f"e0 is not a critical direction (gradient {tau1_norm:.3g})")
    tau2 = A[0, 1:, 1:]
    pred = 3 * tau0 - np.sqrt(1 + (3 * tau0) ** 2)
    n = T.n
    return SecondOrderReport(
        tau0=float(tau0),
        tau1_norm=tau1_norm,
        tau2_eigs=tuple(float(e) for e in np.linalg.eigvalsh(tau2)),
        predicted=float(pred),
        scalar_residual=float(np.max(np.abs(tau2 - pred * np.eye(n - 1)))),
        trace_residual=float(abs(6 * tau0 + (n - 1) * pred)),
        scale=ident.scale,
        tol=tol,
    )


def maximizing_direction(m: int, index: int = 0) -> np.ndarray:
    """Unit vector in hyperplane coordinates along the maximum with ``x_index = m``."""
    x = -np.ones(m + 1)
    x[index] = m
    y = hyperplane_basis(m).T @ x
    return y / np.linalg.norm(y)
