import hypothesis
import hypothesis.strategies as strat
import pytest

import poalgebra
from poalgebra.tests.strategies import relations


def test_relation_pairs_are_sorted():
    r = poalgebra.Relation(2, 2, [(1, 0), (0, 1), (1, 0)])
    assert r.pairs == ((0, 1), (1, 0))
    assert len(r) == 2
    assert (1, 0) in r


def test_relation_out_of_range():
    with pytest.raises(ValueError):
        poalgebra.Relation(1, 1, [(0, 1)])


def test_all_relations():
    assert len(list(poalgebra.all_relations(2, 2))) == 16
    assert list(poalgebra.all_relations(0, 3)) == [poalgebra.Relation(0, 3)]


def test_from_matrix():
    r = poalgebra.Relation(2, 3, {(0, 2), (1, 0)})
    assert poalgebra.Relation.from_matrix(r.matrix()) == r


def test_rel_compose_arity_mismatch():
    with pytest.raises(poalgebra.ArityError):
        poalgebra.rel_compose(poalgebra.rel_id(1), poalgebra.rel_id(2))


def test_poset_to_rel_rejects_internal_events():
    assert poalgebra.poset_to_rel(poalgebra.interp(poalgebra.parse('sigma'))) is None


def test_identity_embeds():
    for n in range(4):
        assert poalgebra.rel_to_poset(poalgebra.rel_id(n)) == poalgebra.identity(n)


@hypothesis.settings(max_examples=100, deadline=None)
@hypothesis.given(strat.integers(0, 3).flatmap(
    lambda n: strat.tuples(relations(m=None, n=n), relations(m=n, n=None))
))
def test_embedding_preserves_composition(pair):
    r, s = pair
    expected = poalgebra.rel_to_poset(poalgebra.rel_compose(r, s))
    assert poalgebra.compose(poalgebra.rel_to_poset(r), poalgebra.rel_to_poset(s)) == expected


@hypothesis.settings(max_examples=50, deadline=None)
@hypothesis.given(relations(), relations())
def test_embedding_preserves_tensor(r, s):
    expected = poalgebra.rel_to_poset(poalgebra.rel_tensor(r, s))
    assert poalgebra.tensor(poalgebra.rel_to_poset(r), poalgebra.rel_to_poset(s)) == expected


@hypothesis.settings(max_examples=50, deadline=None)
@hypothesis.given(relations())
def test_transpose_is_dual(r):
    assert poalgebra.rel_to_poset(poalgebra.transpose(r)) == poalgebra.dual(poalgebra.rel_to_poset(r))
    assert poalgebra.poset_to_rel(poalgebra.rel_to_poset(r)) == r


@hypothesis.settings(max_examples=50, deadline=None)
@hypothesis.given(relations(max_arity=2))
def test_relation_terms(r):
    term = poalgebra.rel_to_term(r)
    assert term.arity == r.arity
    assert poalgebra.is_relation_term(term)
    assert poalgebra.poset_to_rel(poalgebra.interp(term)) == r
