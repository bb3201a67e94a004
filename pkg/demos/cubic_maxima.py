"""Strong maxima of sum x_i^3 on the sphere in the hyperplane sum x_i = 0.

Run with ``python demos/cubic_maxima.py``.
"""
import numpy as np

from svoa_wzw.finite_invariants import invariant_dim_cube, invariant_dim_sym3_standard
from svoa_wzw.tau_lab import (
    canonical_tensor, check_second_order_relation, check_superconformal_identity,
    find_strong_maxima, maximizing_direction,
)

if __name__ == "__main__":
    for m in (3, 5, 8):
        rep = find_strong_maxima(m, seed=0)
        print(f"m = {m}: {len(rep)} maxima, e.g. {np.round(rep.points[0].x, 6)}")
        T = canonical_tensor(m)
        ident = check_superconformal_identity(T)
        so = check_second_order_relation(T, maximizing_direction(m))
        print(f"  contraction scale {ident.scale:.6f} (36/(m+1) = {36 / (m + 1):.6f}), "
              f"tau2 eigenvalue {so.predicted:.6f}, second order ok: {so.passed}")
        print(f"  cubic invariants: S_{m + 1} {invariant_dim_sym3_standard(m)}, "
              f"cube group {invariant_dim_cube(m)}")
