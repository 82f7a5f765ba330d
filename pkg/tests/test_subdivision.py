"""The subdivision algebra rewriting engine."""

import random

import pytest

from pipedreams.poly import MultiPolynomial
from pipedreams.subdivision import (
    PATH4_SCRIPT,
    EdgeMonomial,
    LexFirst,
    ReverseLex,
    Scripted,
    SeededRandom,
    parse_strategy,
    path_edges,
    product_monomial,
    q_polynomial,
    reduce_once,
    reduced_form,
    reducible_pair,
    reducible_triples,
    verify_kirillov,
)

B = MultiPolynomial.variable("b", ("b",))


def test_reducible_pair_examples():
    m = product_monomial(4, [(1, 2), (2, 3), (3, 4)])
    assert reducible_pair(m, LexFirst()) == (1, 2, 3)
    assert reducible_pair(m, ReverseLex()) == (2, 3, 4)
    assert reducible_pair(product_monomial(3, [(1, 2), (1, 3)]), LexFirst()) is None
    assert reducible_pair(product_monomial(3, [(1, 3), (2, 3)]), LexFirst()) is None


def test_reduce_once_base_relation():
    m = product_monomial(3, [(1, 2), (2, 3)])
    g1, g2, g3 = reduce_once(m, (1, 2, 3))
    assert g1.edges == ((1, 2), (1, 3)) and g1.beta == 0
    assert g2.edges == ((1, 3), (2, 3)) and g2.beta == 0
    assert g3.edges == ((1, 3),) and g3.beta == 1


def test_reduce_once_path4_first_step():
    m = product_monomial(4, path_edges(4))
    g1, g2, g3 = reduce_once(m, (2, 3, 4))
    assert g1.edges == ((1, 2), (2, 3), (2, 4))
    assert g2.edges == ((1, 2), (2, 4), (3, 4))
    assert g3.edges == ((1, 2), (2, 4)) and g3.beta == 1


def test_reduce_once_multiset_semantics():
    m = EdgeMonomial(3, ((1, 2), (1, 2), (2, 3)))
    g1, g2, g3 = reduce_once(m, (1, 2, 3))
    assert g1.edges == ((1, 2), (1, 2), (1, 3))
    assert g2.edges == ((1, 2), (1, 3), (2, 3))
    assert g3.edges == ((1, 2), (1, 3)) and g3.beta == 1


def test_reduce_once_requires_pair():
    with pytest.raises(ValueError):
        reduce_once(product_monomial(3, [(1, 2)]), (1, 2, 3))


def test_potential_drops_on_every_branch():
    rng = random.Random(2)
    for _ in range(60):
        n = rng.randint(3, 6)
        edges = []
        for _ in range(rng.randint(2, 5)):
            i = rng.randint(1, n - 1)
            j = rng.randint(i + 1, n)
            edges.append((i, j))
        m = EdgeMonomial(n, tuple(edges))
        phi = m.potential()
        assert phi >= 0
        triples = reducible_triples(m.edges)
        if triples:
            for child in reduce_once(m, triples[0]):
                assert child.potential() < phi


def test_scripted_path4_reduced_form_verbatim():
    """The three-step scripted rewrite of x12 x23 x34 ends in the known
    11-term form, coefficients all 1."""
    rf = reduced_form(product_monomial(4, path_edges(4)), Scripted(PATH4_SCRIPT))
    expected = {
        (((1, 2), (1, 3), (1, 4)), 0),
        (((1, 3), (1, 4), (2, 4)), 0),
        (((1, 3), (1, 4)), 1),
        (((1, 3), (2, 3), (2, 4)), 0),
        (((1, 3), (2, 4)), 1),
        (((1, 2), (1, 4), (3, 4)), 0),
        (((1, 4), (2, 4), (3, 4)), 0),
        (((1, 4), (3, 4)), 1),
        (((1, 2), (1, 4)), 1),
        (((1, 4), (2, 4)), 1),
        (((1, 4),), 2),
    }
    assert {(m.edges, m.beta) for m in rf.monomials} == expected
    assert all(m.coeff == 1 for m in rf.monomials)


def test_already_reduced_monomial():
    m = product_monomial(2, [(1, 2)])
    rf = reduced_form(m)
    assert len(rf.monomials) == 1 and rf.monomials[0].edges == ((1, 2),)


def test_base_relation_reduced_form():
    rf = reduced_form(product_monomial(3, [(1, 2), (2, 3)]))
    assert {(m.edges, m.beta) for m in rf.monomials} == {
        (((1, 2), (1, 3)), 0),
        (((1, 3), (2, 3)), 0),
        (((1, 3),), 1),
    }


def test_q_polynomial_examples():
    assert q_polynomial(4, path_edges(4)) == B**2 + 5 * B + 5
    assert q_polynomial(2, path_edges(2)) == MultiPolynomial.one(("b",))
    assert q_polynomial(3, path_edges(3)) == B + 2


def test_strategy_independence_of_specialization():
    rng = random.Random(9)
    for _ in range(25):
        n = rng.randint(3, 6)
        edges = set()
        for _ in range(rng.randint(1, 5)):
            i = rng.randint(1, n - 1)
            j = rng.randint(i + 1, n)
            edges.add((i, j))
        base = q_polynomial(n, tuple(edges), LexFirst())
        for seed in range(5):
            assert q_polynomial(n, tuple(edges), SeededRandom(seed)) == base
        assert q_polynomial(n, tuple(edges), ReverseLex()) == base


def test_strategy_dependence_of_x_forms():
    m = product_monomial(4, path_edges(4))
    scripted = reduced_form(m, Scripted(PATH4_SCRIPT))
    lex = reduced_form(m, LexFirst())
    assert scripted.to_polynomial() != lex.to_polynomial()
    assert scripted.beta_specialization() == lex.beta_specialization()


def test_parse_strategy():
    assert isinstance(parse_strategy("lex"), LexFirst)
    assert isinstance(parse_strategy("rlex"), ReverseLex)
    assert isinstance(parse_strategy("random", seed=3), SeededRandom)
    s = parse_strategy("script:2,3,4;1,2,3;1,2,4")
    assert isinstance(s, Scripted) and s.script == PATH4_SCRIPT
    with pytest.raises(ValueError):
        parse_strategy("clever")
    with pytest.raises(ValueError):
        parse_strategy("script:1,2")


def test_scripted_falls_back_to_lex():
    m = product_monomial(3, [(1, 2), (2, 3)])
    assert Scripted(((3, 4, 5),)).choose(m.edges) == (1, 2, 3)


def test_reduced_form_rejects_none_and_validates():
    with pytest.raises(ValueError):
        from pipedreams.subdivision import ReducedForm

        ReducedForm(3, (EdgeMonomial(3, ((1, 2), (2, 3))),))


def test_kirillov_small():
    for n in (2, 3, 4, 5):
        assert verify_kirillov(n).ok


def test_monomial_str():
    m = EdgeMonomial(4, ((1, 2), (1, 4)), beta=2, coeff=1)
    assert str(m) == "b^2*x12*x14"
    assert str(EdgeMonomial(3, (), 0, 1)) == "1"


def test_json_round_trip():
    from pipedreams.subdivision import ReducedForm

    rf = reduced_form(product_monomial(4, path_edges(4)), LexFirst())
    assert ReducedForm.from_jsonable(rf.to_jsonable()) == rf
