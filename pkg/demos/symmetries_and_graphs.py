"""Dihedral bookkeeping, branched-cover arithmetic, decomposition graphs and
ordered groups.

Run with ``python demos/symmetries_and_graphs.py``.
"""

import random

from mcg_roots import orbifold as orb
from mcg_roots import ordered_groups as og
from mcg_roots import reduction_graph as rg
from mcg_roots import symmetry_groups as sg

# %% Who commutes with RS in D_16?
G = sg.dihedral(8)
rs = G.element(1, 1)
print("order-2 centralizer of RS:",
      sorted(str(x) for x in sg.centralizer(G, rs) if sg.elem_order(G, x) == 2))
print("closed form:", sorted(str(x) for x in sg.corrected_centralizer_set(8)))

# %% Riemann-Hurwitz for one member of each family
for cover in (orb.thm521_cover(3), orb.thm522_cover(8)):
    print(cover, "->", orb.check_riemann_hurwitz(cover))

# orders of rotations of a torus with q fixed points
for q in range(1, 7):
    print(f"q={q}: {sorted(orb.admissible_orders(1, q, max_order=12))}")

# %% The four shapes of decomposition graph
for g in (rg.case1_tree(3), rg.case2_loop(2), rg.cycle_graph(2), rg.cycle_graph(3)):
    autos = rg.leaf_fixing_automorphisms(g)
    print(rg.classify_case(g), "automorphisms:", len(autos))

# %% Ordered Heisenberg group
H = og.heisenberg()
rng = random.Random(0)
print("bi-invariance counterexamples:", len(og.bi_invariance_counterexamples(H, rng, 2000)))
print("root counterexamples:", len(og.root_uniqueness_counterexamples(H, rng, 2000)))
