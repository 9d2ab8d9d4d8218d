import itertools

import hypothesis
import pytest

import poalgebra
from poalgebra.tests.strategies import morphisms


@pytest.fixture
def diamond():
    return poalgebra.DiamondModel()


def test_linearizations(diamond):
    orders = [x.events for x in poalgebra.linearizations(diamond.morphism)]
    assert orders == [(3, 4, 5, 6), (3, 4, 6, 5), (3, 5, 4, 6)]


def test_invalid_linearization(diamond):
    with pytest.raises(poalgebra.InvalidLinearization):
        poalgebra.Linearization(diamond.morphism, (4, 3, 5, 6))
    with pytest.raises(poalgebra.InvalidLinearization):
        poalgebra.Linearization(diamond.morphism, (3, 4, 5))
    with pytest.raises(poalgebra.InvalidLinearization):
        poalgebra.factorize(diamond.morphism, (3, 4, 4, 6))


def test_adjacent_linearizations(diamond):
    first = poalgebra.Linearization(diamond.morphism, diamond.first)
    second = poalgebra.Linearization(diamond.morphism, diamond.second)
    assert poalgebra.lin_adjacent(first, second) == 1
    assert poalgebra.lin_adjacent(first, first) is None
    assert poalgebra.lin_connect(first, second) == [1]
    assert first.independent(1) and not first.independent(0)


def test_lin_connect(diamond):
    orders = poalgebra.linearizations(diamond.morphism)
    for x1, x2 in itertools.product(orders, repeat=2):
        current = x1
        for i in poalgebra.lin_connect(x1, x2):
            assert current.independent(i)
            current = current.swapped(i)
        assert current == x2


def test_factorize(diamond):
    assert poalgebra.factorize(diamond.morphism, diamond.first) == diamond.first_factorization
    assert poalgebra.factorize(diamond.morphism, diamond.second) == diamond.second_factorization


def test_switch(diamond):
    F1, F2 = diamond.first_factorization, diamond.second_factorization
    assert poalgebra.switch(F1, 1) == F2
    assert poalgebra.switch(F2, 1) == F1
    with pytest.raises(poalgebra.DependencyError):
        poalgebra.switch(F1, 0)
    with pytest.raises(ValueError):
        poalgebra.switch(F1, 3)


def test_fact_compose(diamond):
    f, x = poalgebra.fact_compose(diamond.first_factorization)
    assert poalgebra.iso_eq(f, diamond.morphism) is not None
    assert x.events == f.internal
    assert poalgebra.factorize(f, x) == diamond.first_factorization


def test_factorization_validation():
    with pytest.raises(ValueError):
        poalgebra.Factorization(1, 1, 0, [{1}], poalgebra.Relation(2, 0))
    with pytest.raises(poalgebra.ArityError):
        poalgebra.Factorization(1, 1, 0, [{0}], poalgebra.Relation(1, 0))


def test_transitive_closure():
    chain = poalgebra.open_chain()
    assert not poalgebra.is_transitive(chain)
    closed = poalgebra.transitive_closure_fact(chain)
    assert poalgebra.is_transitive(closed)
    assert closed.relation == poalgebra.Relation(2, 1, {(0, 0), (1, 0)})
    assert poalgebra.fact_compose(closed)[0] == poalgebra.fact_compose(chain)[0]


def test_transposition():
    tau = poalgebra.Transposition(4, 1)
    assert tau.apply_set({0, 1}) == frozenset({0, 2})
    r = poalgebra.Relation(4, 1, {(1, 0)})
    assert tau.precompose(r) == poalgebra.Relation(4, 1, {(2, 0)})
    with pytest.raises(ValueError):
        poalgebra.Transposition(2, 1)


@pytest.mark.parametrize('n', range(4))
def test_blocks(n):
    for size in range(n + 1):
        for subset in itertools.combinations(range(n), size):
            block = poalgebra.x_block(n, subset)
            assert poalgebra.iso_eq(poalgebra.interp(poalgebra.comb_x(n, subset)), block) is not None


def test_combinator_arities():
    assert poalgebra.comb_i(2).arity == (3, 3)
    assert poalgebra.comb_h(2).arity == (2, 3)
    assert poalgebra.comb_s(2).arity == (3, 3)
    assert poalgebra.comb_g(2, 0).arity == (4, 4)
    assert str(poalgebra.comb_g(1)) == 'id1 * gamma'
    assert poalgebra.comb_w(3, 1).arity == (4, 4)
    assert poalgebra.comb_w_set(2, set()) == poalgebra.Id(3)
    with pytest.raises(ValueError):
        poalgebra.comb_w(2, 2)


def test_fan_relation_term():
    relation, text = poalgebra.fan_relation()
    term = poalgebra.rel_to_term(relation)
    assert not poalgebra.generators_of(term).count('sigma')
    assert poalgebra.tp_equal(term, poalgebra.parse(text))


def test_fact_to_term(diamond):
    term = poalgebra.fact_to_term(diamond.first_factorization)
    assert term.arity == (1, 2)
    assert poalgebra.generators_of(term).count('sigma') == 4
    assert poalgebra.iso_eq(poalgebra.interp(term), diamond.morphism) is not None


@pytest.mark.parametrize('f', [
    poalgebra.two_to_three(), poalgebra.three_to_two(), poalgebra.glued(), poalgebra.block_three(),
    poalgebra.DiamondModel().morphism,
], ids=['two_to_three', 'three_to_two', 'glued', 'block_three', 'diamond'])
def test_canonical_term(f):
    term = poalgebra.canonical_term(f)
    assert poalgebra.iso_eq(poalgebra.interp(term), f) is not None
    assert poalgebra.canonical_term(f.relabel(list(range(f.k))[::-1])) == term


@hypothesis.settings(max_examples=40, deadline=None)
@hypothesis.given(morphisms(max_arity=2, max_internal=3))
def test_every_linearization_factorizes(f):
    base = f.m + f.n
    for x in poalgebra.linearizations(f):
        F = poalgebra.factorize(f, x)
        assert poalgebra.is_transitive(F)
        g, y = poalgebra.fact_compose(F)
        assert g == f.relabel([e - base for e in x])


@hypothesis.settings(max_examples=40, deadline=None)
@hypothesis.given(morphisms(max_arity=2, max_internal=3))
def test_canonical_linearization(f):
    x = poalgebra.canonical_linearization(f)
    assert sorted(x.events) == list(f.internal)
    assert poalgebra.iso_eq(poalgebra.interp(poalgebra.canonical_term(f)), f) is not None
