"""Twist relations on bordered tori, then two rotations that square to the
same map but have different spectra.

Run with ``python demos/twists_and_rotations.py``.
"""

from mcg_roots import gluing_homology as gh
from mcg_roots import twist_catalogue as tc

# %% Relations on the torus with three and four boundary components
for rel_id in sorted(tc.RELATIONS):
    rep = tc.relation_report(rel_id)
    print(f"{rel_id:<15} h1={rep['h1']} pi1={rep['pi1']}")

# the cube is needed: the square of g0 is not the boundary product
m = tc.model("genus1_q3")
g0_squared = tc.word_power(tc.G0_Q3, 2)
print("g0^2 == boundary product?", tc.verify_relation(m, g0_squared, tc.boundary_product(3)))

# %% Rotations of the glued polygons
for rho in (2, 3, 4):
    pf = gh.char_poly(gh.induced_h1(gh.f_pattern(rho)))
    pg = gh.char_poly(gh.induced_h1(gh.g_pattern(rho)))
    print(f"rho={rho}: f {pf.factored_string():<16} g {pg.factored_string():<20}"
          f" different classes: {gh.conjugacy_obstruction(pf, pg)}")
