import itertools
import random

import pytest

from mcg_roots import reduction_graph as rg
from mcg_roots.reduction_graph import BudgetExceeded, CaseLabel, DecompositionGraph


def brute_automorphisms(g):
    """Count leaf-fixing automorphisms by trying every vertex permutation,
    every edge permutation and every set of reversed loops."""
    genus = g.genus_of
    verts = g.vertices
    edges = dict(g.edges)
    names = list(edges)
    loops = [e for e in names if edges[e][0] == edges[e][1]]
    count = 0
    for perm in itertools.permutations(verts):
        vmap = dict(zip(verts, perm))
        if any(vmap[leaf] != leaf for leaf in g.leaves):
            continue
        if any(genus.get(v) != genus.get(vmap[v]) for v in verts):
            continue
        for eperm in itertools.permutations(names):
            ok = True
            for e, f in zip(names, eperm):
                u, v = edges[e]
                if {vmap[u], vmap[v]} != set(edges[f]) or (u == v) != (edges[f][0] == edges[f][1]):
                    ok = False
                    break
            if ok:
                count += 2 ** len(loops)
    return count


def triangle():
    return rg.cycle_graph(3)


def parallel_pair():
    return rg.cycle_graph(2)


def test_validate_examples():
    assert rg.validate(rg.case1_star(3))
    bad = DecompositionGraph((("P", 0), ("T", 1)), ("L1",), (("e1", ("P", "T")), ("e2", ("P", "L1"))))
    check = rg.validate(bad)
    assert not check and "valence" in check.reason
    split = DecompositionGraph((("T", 1), ("P", 0)), ("L1",), (("e1", ("T", "L1")),))
    assert not rg.validate(split)


def test_validate_rejects_wrong_genus_total():
    two_tori = DecompositionGraph((("T", 1), ("U", 1)), ("L1",),
                                  (("e1", ("T", "U")), ("e2", ("T", "L1"))))
    assert not rg.validate(two_tori)
    no_genus = DecompositionGraph((("P", 0),), ("L1", "L2", "L3"),
                                  tuple((f"e{i}", ("P", f"L{i}")) for i in (1, 2, 3)))
    assert not rg.validate(no_genus)


def test_validate_rejects_bad_leaf_and_ids():
    g = rg.case1_star(2)
    doubled = DecompositionGraph(g.components, g.leaves, g.edges + (("e9", ("T", "L1")),))
    assert not rg.validate(doubled)
    dup = DecompositionGraph(g.components, g.leaves, (("e1", ("T", "L1")), ("e1", ("T", "L2"))))
    assert not rg.validate(dup)
    with pytest.raises(ValueError):
        rg.cycle_rank(doubled)


def test_cycle_rank_examples():
    assert rg.cycle_rank(rg.case1_star(4)) == 0
    assert rg.cycle_rank(rg.case1_tree(3)) == 0
    assert rg.cycle_rank(rg.case2_loop(3)) == 1
    assert rg.cycle_rank(parallel_pair()) == 1


def test_classify_examples():
    assert rg.classify_case(rg.case1_star(2)) is CaseLabel.Case1
    assert rg.classify_case(rg.case1_tree(2)) is CaseLabel.Case1
    assert rg.classify_case(rg.case2_loop(1)) is CaseLabel.Case2
    assert rg.classify_case(parallel_pair()) is CaseLabel.Case3
    assert rg.classify_case(triangle()) is CaseLabel.Case4
    assert str(rg.classify_case(rg.cycle_graph(5))) == "Case4"


def test_classify_ignores_trees_hanging_off_the_cycle():
    g = rg.case2_loop(1)
    extra = DecompositionGraph(g.components + (("Q", 0),), g.leaves + ("M1", "M2"),
                               g.edges + (("f0", ("P", "Q")), ("f1", ("Q", "M1")), ("f2", ("Q", "M2"))))
    assert rg.validate(extra)
    assert rg.classify_case(extra) is CaseLabel.Case2


def test_autos_case1_and_case4_are_trivial():
    for g in (rg.case1_star(3), rg.case1_tree(4), triangle(), rg.cycle_graph(4)):
        autos = rg.leaf_fixing_automorphisms(g)
        assert len(autos) == 1 and autos[0].is_identity()


def test_autos_case2_loop_flip():
    autos = rg.leaf_fixing_automorphisms(rg.case2_loop(3))
    assert len(autos) == 2
    assert all(a.vertex_identity() for a in autos)
    assert {a.flipped_loops for a in autos} == {frozenset(), frozenset({"e0"})}


def test_autos_case3_swap():
    autos = rg.leaf_fixing_automorphisms(parallel_pair())
    assert len(autos) == 2
    assert autos[0].is_identity()
    swap = autos[1]
    assert swap.vertex_identity()
    assert swap.emap["d0"] == "d1" and swap.emap["d1"] == "d0"
    assert rg.compose(swap, swap).is_identity()


def test_budget():
    with pytest.raises(BudgetExceeded):
        rg.leaf_fixing_automorphisms(rg.cycle_graph(5, 2))
    assert rg.leaf_fixing_automorphisms(rg.cycle_graph(5, 2), budget=15)


def test_json_round_trip():
    g = rg.cycle_graph(3)
    assert DecompositionGraph.from_json(g.to_json()) == g
    with pytest.raises(ValueError):
        DecompositionGraph.from_json({"components": [{"genus": 0}], "edges": []})


def test_constructions_reject_bad_sizes():
    with pytest.raises(ValueError):
        rg.case1_tree(1)
    with pytest.raises(ValueError):
        rg.case2_loop(0)


def test_random_graphs_get_exactly_one_label():
    rng = random.Random(0)
    seen = set()
    for _ in range(1000):
        g = rg.random_valid_graph(rng)
        assert rg.validate(g), rg.validate(g).reason
        label = rg.classify_case(g)
        assert isinstance(label, CaseLabel)
        has_torus = any(genus == 1 for _c, genus in g.components)
        assert (label is CaseLabel.Case1) == has_torus
        seen.add(label)
    assert seen == set(CaseLabel)


def test_autos_form_a_group_and_match_brute_force():
    rng = random.Random(1)
    checked = 0
    while checked < 60:
        g = rg.random_valid_graph(rng, max_components=3, max_vertices=7)
        if len(g.vertices) > 7:
            continue
        autos = rg.leaf_fixing_automorphisms(g)
        assert rg.is_group(autos)
        assert autos[0].is_identity()
        assert len(autos) == len(set(autos)) == brute_automorphisms(g)
        checked += 1


def test_trees_have_only_the_identity():
    rng = random.Random(2)
    checked = 0
    while checked < 200:
        g = rg.random_valid_graph(rng)
        if rg.cycle_rank(g) != 0 or len(g.vertices) > rg.DEFAULT_BUDGET:
            continue
        autos = rg.leaf_fixing_automorphisms(g)
        assert [a.is_identity() for a in autos] == [True]
        checked += 1


def test_inverse_and_compose():
    autos = rg.leaf_fixing_automorphisms(rg.case2_loop(2))
    for a in autos:
        assert rg.compose(a, rg.inverse(a)).is_identity()
        assert rg.compose(rg.identity_automorphism(rg.case2_loop(2)), a) == a
