import hypothesis
import hypothesis.strategies as strat
import numpy as np
import pytest

import poalgebra
from poalgebra.tests.strategies import morphisms


def test_identity_is_neutral():
    f = poalgebra.two_to_three()
    assert poalgebra.compose(poalgebra.identity(2), f) == f
    assert poalgebra.compose(f, poalgebra.identity(3)) == f


def test_identity_splits_its_events():
    f = poalgebra.identity(1)
    assert f.size == 2 and f.k == 0
    assert f.hasse_pairs() == [(0, 1)]


def test_composition_is_associative():
    f, g = poalgebra.three_to_two(), poalgebra.two_to_three()
    left = poalgebra.compose(poalgebra.compose(f, g), f)
    right = poalgebra.compose(f, poalgebra.compose(g, f))
    assert poalgebra.iso_eq(left, right) is not None


def test_composition_arity_mismatch():
    with pytest.raises(poalgebra.ArityError):
        poalgebra.compose(poalgebra.two_to_three(), poalgebra.two_to_three())


def test_tensor_unit():
    f = poalgebra.three_to_two()
    assert poalgebra.tensor(poalgebra.identity(0), f) == f
    assert poalgebra.tensor(f, poalgebra.identity(0)) == f


def test_symmetry_is_an_involution():
    twice = poalgebra.compose(poalgebra.symmetry(1, 2), poalgebra.symmetry(2, 1))
    assert twice == poalgebra.identity(3)


def test_cycle_detected():
    with pytest.raises(poalgebra.CycleDetected):
        poalgebra.PosetMorphism.from_pairs(0, 0, 3, [(0, 1), (1, 2), (2, 0)])


def test_sources_must_be_minimal():
    order = np.zeros((2, 2), dtype=bool)
    order[1, 0] = True
    with pytest.raises(ValueError):
        poalgebra.PosetMorphism(1, 1, order)


def test_order_is_read_only():
    f = poalgebra.two_to_three()
    with pytest.raises(ValueError):
        f.order[0, 1] = True


def test_from_poset_splits_shared_event():
    poset = poalgebra.closure(set(), ['x'])
    assert poalgebra.PosetMorphism.from_poset(poset, ['x'], ['x']) == poalgebra.identity(1)


def test_from_poset_relabels_events():
    poset = poalgebra.closure({('a', 'p'), ('p', 'b')}, ['p', 'b', 'a'])
    f = poalgebra.PosetMorphism.from_poset(poset, ['a'], ['b'])
    assert f == poalgebra.interp(poalgebra.parse('sigma'))


def test_from_poset_rejects_non_minimal_source():
    poset = poalgebra.closure({('a', 'b')}, ['a', 'b'])
    with pytest.raises(ValueError):
        poalgebra.PosetMorphism.from_poset(poset, ['b'], [])


def test_iso_eq_witness():
    f = poalgebra.two_to_three()
    g = f.relabel([2, 0, 1])
    witness = poalgebra.iso_eq(f, g)
    assert witness is not None
    assert poalgebra.is_isomorphism(f, g, witness)
    assert list(witness.mapping[:f.m + f.n]) == list(range(f.m + f.n))


def test_iso_eq_respects_boundaries():
    below = poalgebra.PosetMorphism.from_pairs(2, 0, 1, [(0, 2)])
    other = poalgebra.PosetMorphism.from_pairs(2, 0, 1, [(1, 2)])
    assert poalgebra.iso_eq(below, other) is None


def test_hasse_pairs_drop_implied_pairs():
    f = poalgebra.PosetMorphism.from_pairs(0, 0, 3, [(0, 1), (1, 2), (0, 2)])
    assert f.hasse_pairs() == [(0, 1), (1, 2)]
    assert f.pairs() == [(0, 1), (0, 2), (1, 2)]


@hypothesis.settings(max_examples=50, deadline=None)
@hypothesis.given(morphisms())
def test_dual_is_an_involution(f):
    assert poalgebra.dual(poalgebra.dual(f)) == f
    assert poalgebra.dual(f).arity == (f.n, f.m)


@hypothesis.settings(max_examples=50, deadline=None)
@hypothesis.given(morphisms(), strat.data())
def test_relabelling_gives_an_isomorphic_morphism(f, data):
    permutation = data.draw(strat.permutations(range(f.k)))
    g = f.relabel(permutation)
    assert poalgebra.iso_eq(f, g) is not None
    assert poalgebra.canonical_form(f) == poalgebra.canonical_form(g)


@hypothesis.settings(max_examples=30, deadline=None)
@hypothesis.given(morphisms(max_internal=2))
def test_identities_are_neutral(f):
    assert poalgebra.compose(poalgebra.identity(f.m), f) == f
    assert poalgebra.compose(f, poalgebra.identity(f.n)) == f


def test_glue_orders_stacks():
    fs = [poalgebra.identity(1), poalgebra.PosetMorphism.from_pairs(1, 1, 1, [(0, 2), (2, 1)])]
    gs = [poalgebra.identity(1), poalgebra.PosetMorphism.from_pairs(1, 1, 0, [])]
    f_orders = np.stack([fs[0].order, poalgebra.PosetMorphism.from_pairs(1, 1, 0, []).order])
    g_orders = np.stack([g.order for g in gs])
    glued = poalgebra.glue_orders(f_orders[:, None], g_orders[None, :], 1, 1, 1)
    assert glued.shape == (2, 2, 2, 2)
    assert glued[0, 0].tolist() == poalgebra.identity(1).order.tolist()
    assert not glued[0, 1].any() and not glued[1, 0].any()
    single = poalgebra.compose(fs[1], gs[0])
    assert np.array_equal(poalgebra.glue_orders(fs[1].order, gs[0].order, 1, 1, 1), single.order)
