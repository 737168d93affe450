import itertools
import random

import pytest
from hypothesis import given, strategies as st

from mcg_roots import orbifold as orb
from mcg_roots.free_group import FreeEndo
from mcg_roots.orbifold import CoverDatum, PermRep, SingularityDatum
from mcg_roots.sentinels import NOT_FOUND


def sings(*prongs):
    return [SingularityDatum(f"P{i}", k) for i, k in enumerate(prongs)]


def brute_admissible(genus, q, m):
    """Enumerate quotient genus and multisets of extra branch orders directly."""
    if m == 1:
        return True
    chi = 2 - 2 * genus
    orders = [r for r in range(2, m + 1) if m % r == 0]
    for g0 in range(orb.G_MAX + 1):
        target = m * (2 - 2 * g0) - chi - q * (m - 1)
        if target < 0:
            continue
        # every extra branch point contributes at least m/2
        for count in range(0, 2 * target // m + 2):
            for rs in itertools.combinations_with_replacement(orders, count):
                if sum(m - m // r for r in rs) == target:
                    return True
    return False


def test_euler_examples():
    assert orb.euler_char(0, 0) == 2
    assert orb.euler_char(1, 0) == 0
    assert orb.euler_char(2, 1) == -3


def test_prong_examples():
    assert orb.check_prong_formula(2, sings(1, 1, 1, 1))
    assert orb.check_prong_formula(2, sings(1, 1, 1, 1, 1, 3))
    assert orb.check_prong_formula(0, [])
    assert not orb.check_prong_formula(2, sings(1, 1, 1))


def test_riemann_hurwitz_examples():
    assert orb.check_riemann_hurwitz(CoverDatum(12, -2, 2, ((4, 3), (6, 2), (6, 2), (6, 2))))
    assert orb.check_riemann_hurwitz(CoverDatum(8, -6, 2, ((2, 4),) + ((4, 2),) * 4))
    assert orb.check_riemann_hurwitz(CoverDatum(2, 0, 0, ()))
    assert not orb.check_riemann_hurwitz(CoverDatum(2, 0, 2, ()))


def test_cover_datum_validation_and_json():
    with pytest.raises(ValueError):
        CoverDatum(6, 0, 0, ((2, 2),))
    with pytest.raises(ValueError):
        CoverDatum(6, 0, 0, ((6, 1),))
    c = orb.thm521_cover(3)
    assert CoverDatum.from_json(c.to_json()) == c


def test_branch_orders_small_cases():
    assert [r for _o, r in orb.thm521_cover(2).branch] == [3, 2, 2, 2]
    assert [r for _o, r in orb.thm522_cover(4).branch] == [4, 2, 2, 2, 2]


@pytest.mark.parametrize("rho", range(2, 17))
def test_riemann_hurwitz_521_family(rho):
    c = orb.thm521_cover(rho)
    assert c.m == 4 * (rho + 1) and c.chi_total == 2 - 2 * rho
    assert [o for o, _r in c.branch] == [4] + [2 * (rho + 1)] * 3
    assert orb.check_riemann_hurwitz(c)


@pytest.mark.parametrize("rho", [4, 8, 12, 16])
def test_riemann_hurwitz_522_family(rho):
    assert orb.check_riemann_hurwitz(orb.thm522_cover(rho))


@pytest.mark.parametrize("rho", [4, 8, 12])
def test_lifted_522_prongs(rho):
    lifted = orb.thm522_lifted_singularities(rho)
    assert orb.check_prong_formula(2 - 2 * rho, lifted)
    assert sorted({s.prongs for s in lifted}) == [3, rho]


def test_lift_index_examples():
    assert orb.lift_index(1, 4) == 4
    assert orb.lift_index(1, 2) == 2
    assert orb.lift_index(3, 1) == 3


def test_pivot_examples():
    for rho in range(2, 10):
        assert orb.is_pivot(orb.thm521_pivot_data(rho), 0)
    for rho in (4, 8, 12):
        assert orb.is_pivot(orb.thm522_pivot_data(rho), 0)
    assert not orb.is_pivot([(2, 5), (1, 2)], 0)
    assert not orb.is_pivot([(1, 2), (1, 2)], 0)


def test_admissible_order_examples():
    assert orb.admissible_orders(1, 3) == {1, 2, 3}
    assert orb.admissible_orders(1, 4) == {1, 2}
    assert orb.admissible_orders(1, 5) == {1}
    assert orb.admissible_orders(0, 3) == {1}
    assert orb.admissible_orders(2, 7) == {1}


@pytest.mark.parametrize("genus", range(0, 4))
def test_admissible_orders_match_enumeration(genus):
    for q in range(1, 9):
        got = orb.admissible_orders(genus, q, max_order=24)
        top = 24 if q <= 2 else orb.order_search_bound(genus, q)
        assert got == {m for m in range(1, top + 1) if brute_admissible(genus, q, m)}


def test_search_bound_is_tight_enough():
    # no admissible order above the bound, checked well past it
    for genus in range(0, 4):
        for q in range(3, 9):
            bound = orb.order_search_bound(genus, q)
            assert not any(brute_admissible(genus, q, m) for m in range(bound + 1, bound + 30))


def test_admissible_orders_antitone_in_q():
    for genus in range(0, 4):
        sets = [orb.admissible_orders(genus, q, max_order=40) for q in range(1, 13)]
        for a, b in zip(sets, sets[1:]):
            assert b <= a


def test_max_fixed_points_sphere():
    assert orb.max_fixed_points_sphere(2) == 2
    assert orb.max_fixed_points_sphere(3) == 2
    assert orb.max_fixed_points_sphere(7) == 2
    assert all(orb.max_fixed_points_sphere(m) == 2 for m in range(2, 51))
    with pytest.raises(ValueError):
        orb.max_fixed_points_sphere(1)


def test_cyclic_orbit_factorizations():
    assert orb.cyclic_orbit_factorizations(5) == []
    assert orb.cyclic_orbit_factorizations(6) == [(2, 3), (3, 2)]
    assert orb.cyclic_orbit_factorizations(4) == [(2, 2)]
    assert orb.cyclic_orbit_factorizations(1) == []
    for n in range(2, 200):
        prime = all(n % d for d in range(2, n))
        assert (orb.cyclic_orbit_factorizations(n) == []) == prime


def test_parse_permutation():
    assert orb.parse_permutation("(1 2 3)(4 5)", 5) == (1, 2, 0, 4, 3)
    assert orb.parse_permutation("(1 2) (3 4)", 4) == (1, 0, 3, 2)
    assert orb.parse_permutation("()", 3) == (0, 1, 2)
    with pytest.raises(ValueError):
        orb.parse_permutation("(1 2)(2 3)", 3)
    with pytest.raises(ValueError):
        orb.parse_permutation("(1 4)", 3)


def test_perm_rep_json():
    rep = PermRep.from_json({"degree": 3, "perms": ["(1 2 3)", [2, 1, 3]]})
    assert rep.perms == ((1, 2, 0), (1, 0, 2))
    assert PermRep.from_json(rep.to_json()) == rep


def test_lift_exponent_examples():
    rep = PermRep(2, ((1, 0),))
    assert orb.lift_exponent(rep, FreeEndo(1, ((-1,),))) == 1
    rep2 = PermRep(3, ((1, 2, 0), (0, 1, 2)))
    swap = FreeEndo(2, ((2,), (1,)))
    assert orb.lift_exponent(rep2, swap) == 2
    assert orb.lift_exponent(rep2, FreeEndo.identity(2)) == 1
    with pytest.raises(ValueError):
        orb.lift_exponent(rep2, FreeEndo.identity(3))


def test_lift_exponent_not_found_under_cap():
    # x -> y, y -> y x on a rep where the induced map has order > 1
    rep = PermRep(3, ((1, 0, 2), (0, 2, 1)))
    phi = FreeEndo(2, ((2,), (2, 1)))
    k = orb.lift_exponent(rep, phi, cap=64)
    assert k is not NOT_FOUND
    assert orb.lift_exponent(rep, phi, cap=k - 1) is NOT_FOUND if k > 1 else True


def random_rep(rng, degree, rank):
    perms = []
    for _ in range(rank):
        p = list(range(degree))
        rng.shuffle(p)
        perms.append(tuple(p))
    return PermRep(degree, tuple(perms))


def relabel(rep, sigma):
    inv = [0] * len(sigma)
    for v, w in enumerate(sigma):
        inv[w] = v
    return PermRep(rep.degree, tuple(tuple(sigma[p[inv[v]]] for v in range(rep.degree))
                                     for p in rep.perms))


@given(st.integers(1, 6), st.integers(1, 3), st.randoms(use_true_random=False))
def test_canonical_form_agrees_with_exhaustive(degree, rank, rnd):
    r1 = random_rep(rnd, degree, rank)
    sigma = list(range(degree))
    rnd.shuffle(sigma)
    r2 = relabel(r1, sigma)
    assert orb.equivalent_exhaustive(r1, r2)
    assert orb.canonical_form(r1) == orb.canonical_form(r2)
    r3 = random_rep(rnd, degree, rank)
    assert orb.equivalent_exhaustive(r1, r3) == (orb.canonical_form(r1) == orb.canonical_form(r3))


def test_lift_exponent_is_minimal():
    rng = random.Random(2)
    words = [(1,), (2,), (-1,), (1, 2), (2, 1), (1, 1, 2), (-2, 1)]
    for _ in range(60):
        rep = random_rep(rng, rng.randint(2, 5), 2)
        phi = FreeEndo(2, (rng.choice(words), rng.choice(words)))
        k = orb.lift_exponent(rep, phi, cap=30)
        current = rep
        hits = []
        for j in range(1, 31):
            current = orb.pull_back(current, phi)
            hits.append(orb.equivalent_exhaustive(current, rep))
        if k is NOT_FOUND:
            assert not any(hits)
        else:
            assert hits[k - 1] and not any(hits[:k - 1])
