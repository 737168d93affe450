import random

import pytest
from hypothesis import given, strategies as st

from mcg_roots import free_group as fg
from mcg_roots import twist_catalogue as tc
from mcg_roots.sl2z import MINUS_IDENTITY, TAU_A, TAU_B

BORDERED = ("genus1_q1", "genus1_q2", "genus1_q3", "genus1_q4")


def matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))]
            for i in range(len(A))]


def random_word(rng, m, length=6):
    names = m.curve_names()
    return tuple((rng.choice(names), rng.choice((-2, -1, 1, 2))) for _ in range(rng.randint(0, length)))


def inverse_word(w):
    return tuple((name, -e) for name, e in reversed(w))


def test_model_shapes():
    q3 = tc.model("genus1_q3")
    assert q3.pi1_rank == 4
    assert len(q3.curves) == 7
    assert tc.model("genus1_q4").pi1_rank == 5
    q1 = tc.model("genus1_q1")
    assert q1.pi1_rank == 2
    assert set(q1.curves) == {"a", "b", "c1"}


def test_unknown_model():
    with pytest.raises(KeyError):
        tc.model("genus2_q1")


@pytest.mark.parametrize("name", BORDERED)
def test_certification_passes(name):
    rep = tc.certify_model(tc.model(name))
    assert rep.passed
    assert all(n > 0 for n in rep.checks.values())


def test_mutation_breaks_braid_clause():
    m = tc.model("genus1_q3")
    broken = tc.with_twist(m, "b", m.curves["b"].twist.inverse())
    rep = tc.certify_model(broken)
    assert not rep.passed
    assert not rep.clause_passed("ii")
    with pytest.raises(AssertionError):
        rep.raise_if_failed()


def test_mutation_swapping_twists_is_caught():
    m = tc.model("genus1_q2")
    broken = tc.with_twist(m, "a1", m.curves["a2"].twist)
    assert not tc.certify_model(broken).passed


def test_empty_word_and_inverse_pair():
    m = tc.model("genus1_q3")
    ident = fg.FreeEndo.identity(m.free_rank)
    assert tc.evaluate(m, []) == ident
    assert tc.evaluate(m, [("a1", 1), ("a1", -1)]) == ident


def test_braid_relation_example():
    m = tc.model("genus1_q3")
    assert tc.verify_relation(m, [("a1", 1), ("b", 1), ("a1", 1)], [("b", 1), ("a1", 1), ("b", 1)])


@pytest.mark.parametrize("rel_id", sorted(tc.RELATIONS))
def test_named_relations_hold(rel_id):
    rep = tc.relation_report(rel_id)
    assert rep["h1"] and rep["pi1"] and rep["verified"]


def test_g0_squared_is_not_central():
    m = tc.model("genus1_q3")
    assert not tc.verify_relation(m, tc.word_power(tc.G0_Q3, 2), tc.boundary_product(3))


def test_f0_is_not_a_root_of_the_boundary_product_in_naive_order():
    m = tc.model("genus1_q4")
    naive = (("a1", 1), ("b", 1), ("a2", 1), ("b", 1), ("a3", 1), ("b", 1), ("a4", 1), ("b", 1))
    assert not tc.verify_relation(m, tc.word_power(naive, 2), tc.boundary_product(4))


def test_chain_relation_on_one_boundary():
    m = tc.model("genus1_q1")
    assert tc.verify_relation(m, [("a", 1), ("b", 1)] * 6, [("c1", 1)])
    assert not tc.verify_relation(m, [("a", 1), ("b", 1)] * 3, [("c1", 1)])


def test_boundary_twists_are_not_inner_when_q_is_large():
    m = tc.model("genus1_q3")
    ident = fg.FreeEndo.identity(m.free_rank)
    for c in ("c1", "c2", "c3"):
        assert tc.evaluate(m, [(c, 1)]) != ident


def test_relations_survive_conjugation():
    rng = random.Random(3)
    for rel_id in ("lemma7.9.star", "lemma7.10"):
        rel = tc.RELATIONS[rel_id]
        m = tc.model(rel.model)
        for _ in range(5):
            h = random_word(rng, m, 4)
            lhs = h + rel.lhs + inverse_word(h)
            rhs = h + rel.rhs + inverse_word(h)
            assert tc.verify_relation(m, lhs, rhs)


def test_h1_examples():
    q1 = tc.model("genus1_q1")
    assert tc.h1_matrix(q1, [("a", 1)]) == [[1, 1], [0, 1]]
    q3 = tc.model("genus1_q3")
    top = [row[:2] for row in tc.h1_matrix(q3, [("c1", 1)])[:2]]
    assert top == [[1, 0], [0, 1]]
    g12 = tc.h1_matrix(q3, tc.word_power(tc.G0_Q3, 12))
    assert [row[:2] for row in g12[:2]] == [[1, 0], [0, 1]]


@pytest.mark.parametrize("name", BORDERED)
def test_h1_is_multiplicative(name):
    m = tc.model(name)
    rng = random.Random(name)
    for _ in range(10):
        u, v = random_word(rng, m), random_word(rng, m)
        assert tc.h1_matrix(m, u + v) == matmul(tc.h1_matrix(m, u), tc.h1_matrix(m, v))


@pytest.mark.parametrize("name", BORDERED)
def test_single_twist_h1_is_transvection(name):
    m = tc.model(name)
    for c in m.curve_names():
        assert tc.h1_matrix(m, [(c, 1)]) == tc.transvection(m, c)


def test_closed_torus_model():
    m = tc.model("torus_closed_h1only")
    assert m.h1_only and m.pi1_rank is None
    assert tc.h1_matrix(m, [("a", 1)]) == TAU_A.rows()
    assert tc.h1_matrix(m, [("b", 1)]) == TAU_B.rows()
    assert tc.h1_matrix(m, [("a", 1), ("b", 1)] * 3) == MINUS_IDENTITY.rows()
    assert tc.verify_relation(m, [("a", 1), ("b", 1)] * 6, [])
    with pytest.raises(ValueError):
        tc.evaluate(m, [("a", 1)])


def test_word_caps():
    m = tc.model("genus1_q1")
    with pytest.raises(ValueError):
        tc.evaluate(m, [("a", tc.MAX_EXPONENT + 1)])
    with pytest.raises(ValueError):
        tc.evaluate(m, [("a", 1)] * (tc.MAX_WORD_LENGTH + 1))
    with pytest.raises(KeyError):
        tc.evaluate(m, [("z", 1)])


def test_central_power_exponents_examples():
    assert tc.central_power_exponents(2, (0, 0, 0), 6) == (3, 3, 3)
    assert tc.central_power_exponents(3, (1, 0, -1), 6) == (8, 2, -4)
    assert tc.central_power_exponents(1, (4, -2), 1) == (5, -1)
    with pytest.raises(ValueError):
        tc.central_power_exponents(4, (0,), 6)


@given(st.lists(st.tuples(st.sampled_from(["a1", "a2", "b", "c1", "c2"]),
                          st.sampled_from([-1, 1])), max_size=8))
def test_evaluation_matches_factorwise_composition(word):
    m = tc.model("genus1_q2")
    expected = fg.FreeEndo.identity(m.free_rank)
    for name, e in word:
        t = m.curves[name].twist
        expected = expected @ (t.forward if e > 0 else t.backward)
    assert tc.evaluate(m, word) == expected
