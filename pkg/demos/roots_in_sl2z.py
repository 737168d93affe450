"""Walk through square roots in SL(2, Z) and the torsion classes.

Run with ``python demos/roots_in_sl2z.py``.
"""

from mcg_roots import sl2z
from mcg_roots.sl2z import Sl2Matrix

# %% A hyperbolic element and its square
R = Sl2Matrix(2, 1, 1, 1)
M = R ** 2
print("R     =", R.rows(), "trace", R.trace)
print("R^2   =", M.rows())

# the trace equation picks out t = tr R; the root is rebuilt from M
roots = sl2z.mth_roots(M, 2)
print("roots =", [r.rows() for r in roots.roots])

# brute force over a box agrees
print("brute =", [r.rows() for r in sl2z.brute_force_roots(M, 2, 3 * M.max_entry())])

# %% R itself has no square root
print("sqrt R:", sl2z.mth_roots(R, 2).to_json())

# %% Parabolic: tau_a^2 has exactly the two roots +-tau_a
print("tau_a^2 roots:", sl2z.mth_roots(sl2z.TAU_A ** 2, 2).to_json())

# %% Central targets have a family of torsion roots, reported by class
print("roots of -I, m=2:", sl2z.mth_roots(-sl2z.IDENTITY, 2).to_json())

# %% The eight torsion classes and a conjugation check
S, T = Sl2Matrix(0, -1, 1, 0), sl2z.TAU_A
for label, rep in sl2z.TORSION_REPRESENTATIVES.items():
    moved = rep.conjugate_by(T @ S @ T @ T)
    print(f"{label.value:>10}  order {label.order}  ->  {sl2z.torsion_class(moved).value}")
