"""The ten end-to-end criteria, each checked exactly and timed.

Each test records a one-line verdict that conftest prints in the terminal
summary.
"""

import random
import time

import pytest

from conftest import record_criterion
from mcg_roots import gluing_homology as gh
from mcg_roots import orbifold as orb
from mcg_roots import ordered_groups as og
from mcg_roots import reduction_graph as rg
from mcg_roots import sl2z
from mcg_roots import symmetry_groups as sg
from mcg_roots import twist_catalogue as tc
from mcg_roots.polynomial import IntPolynomial
from mcg_roots.sentinels import INFINITE

x = IntPolynomial.x()


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def finish(number, title, ok, timer, budget, note=""):
    within = timer.seconds < budget
    note = f"{timer.seconds:.2f}s of {budget}s" + (f"; {note}" if note else "")
    record_criterion(number, title, ok and within, note)
    assert ok
    assert within, f"took {timer.seconds:.2f}s, budget {budget}s"


def test_criterion_01_relations_on_three_boundaries():
    with Timer() as t:
        m = tc.model("genus1_q3")
        star = tc.evaluate(m, tc.word_power(tc.G0_Q3, 3))
        chain = tc.evaluate(m, tc.word_power(tc.F0_Q3, 2))
        boundary = tc.evaluate(m, tc.boundary_product(3))
        same = star.images == chain.images == boundary.images
        ok = same and tc.relation_report("lemma7.9.star")["verified"] \
            and tc.relation_report("lemma7.9.chain")["verified"]
    finish(1, "g0^3 = f0^2 = boundary product on genus1_q3", ok, t, 1)


def test_criterion_02_relation_on_four_boundaries():
    with Timer() as t:
        m = tc.model("genus1_q4")
        rel = tc.RELATIONS["lemma7.10"]
        lhs = tc.evaluate(m, rel.lhs)
        ok = lhs.images == tc.evaluate(m, tc.boundary_product(4)).images \
            and tc.relation_report("lemma7.10")["verified"]
    finish(2, "f0^2 = boundary product on genus1_q4", ok, t, 1)


def test_criterion_03_rotation_spectra():
    with Timer() as t:
        ok = True
        for rho in (2, 3, 4, 5, 6):
            f, g = gh.f_pattern(rho), gh.g_pattern(rho)
            pf = gh.char_poly(gh.induced_h1(f))
            pg = gh.char_poly(gh.induced_h1(g))
            ok &= pf == (x + 1) ** (2 * rho)
            ok &= pg == (x + 1) ** (2 * rho - 2) * (x - 1) ** 2
            for rep in (gh.analyze(f), gh.analyze(g)):
                ok &= (rep.genus, rep.boundary_count) == (rho, 1)
            ok &= gh.conjugacy_obstruction(pf, pg)
    finish(3, "rotation spectra of the f and g gluings", ok, t, 1)


def test_criterion_04_sl2_roots_and_torsion_classes():
    rng = random.Random(2024)
    S, T = sl2z.Sl2Matrix(0, -1, 1, 0), sl2z.TAU_A
    with Timer() as t:
        failures, tested = [], 0
        while tested < 1000:
            a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
            if a * d - b * c != 1:
                continue
            r = sl2z.Sl2Matrix(a, b, c, d)
            if sl2z.element_order(r) is not INFINITE:
                continue
            m = rng.randint(1, 6)
            target = r ** m
            roots = sl2z.mth_roots(target, m)
            brute = sl2z.brute_force_roots(target, m, 3 * target.max_entry())
            if not (roots.is_finite and set(roots.roots) == set(brute) and r in roots.roots
                    and set(roots.roots) <= {r, -r}):
                failures.append((r, m))
            tested += 1
        for label, rep in sl2z.TORSION_REPRESENTATIVES.items():
            for _ in range(1000):
                p = sl2z.IDENTITY
                for _ in range(rng.randint(1, 10)):
                    p = p @ rng.choice((S, T, T.inverse()))
                if sl2z.torsion_class(rep.conjugate_by(p)) is not label:
                    failures.append((label, p))
        ok = not failures
    finish(4, "m-th roots match brute force; torsion classes are conjugation stable", ok, t, 20,
           "1000 roots, 8000 conjugations")


def test_criterion_05_order_rho_plus_one_elements():
    with Timer() as t:
        ok = all(sg.verify_thm_5_2_1(rho)["passed"] for rho in range(2, 11))
        for rho in range(2, 11):
            G = sg.dihedral_times_c2(rho + 1)
            ok &= set(sg.elements_of_order(G, rho + 1)) == sg.bullet_order_elements(rho)
            ok &= not any(sg.commutes(G, e, G.S) for e in sg.elements_of_order(G, rho + 1))
            ok &= sg.elem_order(G, G.R) != sg.elem_order(G, G.S)
    finish(5, "order-(rho+1) elements of D2n x C2", ok, t, 1)


def centralizer_check(rho, expected):
    G = sg.dihedral(rho)
    rule = sg.FixedPointRule("Thm522", rho)
    rs = G.element(1, 1)
    found = {e for e in sg.centralizer(G, rs) if sg.elem_order(G, e) == 2}
    ok = found == expected
    ok &= all(sg.fixed_points(rule, e) == 2 for e in found)
    ok &= sg.fixed_points(rule, G.S) == 6
    ok &= all(sg.fixed_points(rule, sg.conjugate(G, a, g)) == sg.fixed_points(rule, a)
              for a in G.elements() for g in G.elements())
    return ok


def test_criterion_06_order_two_centralizer():
    with Timer() as t:
        ok = True
        for rho in (4, 8, 12):
            G = sg.dihedral(rho)
            expected = {G.element(1, 1), G.element((rho + 2) // 2, 1), G.element(rho // 2)}
            ok &= expected == sg.corrected_centralizer_set(rho)
            ok &= centralizer_check(rho, expected)
            ok &= sg.verify_thm_5_2_2(rho)["passed"]
    finish(6, "order-2 centralizer of RS and fixed-point counts", ok, t, 1,
           "checked with exponent (rho+2)/2; the (rho-2)/2 set is refuted, see the xfail test")


@pytest.mark.xfail(strict=True, reason="R^((rho-2)/2) S does not commute with RS in D_2rho")
def test_criterion_06_literal_exponent():
    for rho in (4, 8, 12):
        G = sg.dihedral(rho)
        literal = {G.element(1, 1), G.element((rho - 2) // 2, 1), G.element(rho // 2)}
        assert centralizer_check(rho, literal)


def test_criterion_07_orbifold_identities():
    def ones(k):
        return [orb.SingularityDatum(f"P{i}", 1) for i in range(k)]

    with Timer() as t:
        ok = all(orb.check_riemann_hurwitz(orb.thm521_cover(r)) for r in range(2, 17))
        ok &= all(orb.check_riemann_hurwitz(orb.thm522_cover(r)) for r in (4, 8, 12, 16))
        ok &= orb.check_prong_formula(2, ones(4))
        ok &= orb.check_prong_formula(2, ones(5) + [orb.SingularityDatum("P5", 3)])
        ok &= all(orb.check_prong_formula(2 - 2 * r, orb.thm522_lifted_singularities(r))
                  for r in (4, 8, 12))
        ok &= all(orb.is_pivot(orb.thm521_pivot_data(r), 0) for r in range(2, 17))
        ok &= all(orb.is_pivot(orb.thm522_pivot_data(r), 0) for r in (4, 8, 12, 16))
    finish(7, "Riemann-Hurwitz, prong sums and pivots", ok, t, 1)


def test_criterion_08_feasibility_tables():
    primes = [p for p in range(2, 100) if all(p % d for d in range(2, p))]
    assert len(primes) == 25
    with Timer() as t:
        ok = orb.admissible_orders(1, 3) == {1, 2, 3}
        ok &= orb.admissible_orders(1, 4) == {1, 2}
        ok &= all(orb.admissible_orders(1, q) == {1} for q in range(5, 21))
        ok &= all(orb.max_fixed_points_sphere(m) == 2 for m in range(2, 51))
        ok &= all(orb.admissible_orders(rho, q) == {1}
                  for rho in range(0, 6) for q in range(2 * rho + 3, 21))
        ok &= all(orb.cyclic_orbit_factorizations(p) == [] for p in primes)
    finish(8, "admissible orders, sphere fixed points, prime orbits", ok, t, 5)


def test_criterion_09_reduction_graphs():
    with Timer() as t:
        ok = True
        for g in (rg.case1_star(3), rg.case1_tree(3)):
            autos = rg.leaf_fixing_automorphisms(g)
            ok &= rg.classify_case(g) is rg.CaseLabel.Case1
            ok &= len(autos) == 1 and autos[0].is_identity()
        g2 = rg.case2_loop(2)
        autos = rg.leaf_fixing_automorphisms(g2)
        ok &= rg.classify_case(g2) is rg.CaseLabel.Case2
        ok &= len(autos) == 2 and all(a.vertex_identity() for a in autos)
        ok &= {a.flipped_loops for a in autos} == {frozenset(), frozenset({"e0"})}
        g3 = rg.cycle_graph(2)
        autos = rg.leaf_fixing_automorphisms(g3)
        ok &= rg.classify_case(g3) is rg.CaseLabel.Case3
        ok &= len(autos) == 2 and rg.is_group(autos)
        ok &= autos[1].emap == {**autos[0].emap, "d0": "d1", "d1": "d0"}
        for g in (rg.cycle_graph(3), rg.cycle_graph(4)):
            autos = rg.leaf_fixing_automorphisms(g)
            ok &= rg.classify_case(g) is rg.CaseLabel.Case4
            ok &= len(autos) == 1 and autos[0].is_identity()
    finish(9, "case labels and leaf-fixing automorphisms", ok, t, 1)


def test_criterion_10_ordered_groups():
    rng = random.Random(10)
    with Timer() as t:
        bad = 0
        for G in (og.LexZq(3), og.heisenberg()):
            bad += len(og.bi_invariance_counterexamples(G, rng, 10_000))
            bad += len(og.root_uniqueness_counterexamples(G, rng, 10_000))
        ok = bad == 0
    finish(10, "bi-invariance and unique roots", ok, t, 5, "10^4 samples per suite and group")
