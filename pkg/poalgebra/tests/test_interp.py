import pytest

import poalgebra


@pytest.mark.parametrize('name', ['eta', 'mu', 'eps', 'delta', 'sigma', 'gamma'])
def test_generator_images(name):
    generator = poalgebra.Signature.poalgebra()[name]
    image = poalgebra.interp(poalgebra.Gen(name))
    assert image.arity == (generator.m, generator.n)
    assert image.k == (1 if name == 'sigma' else 0)


def test_identity_term():
    assert poalgebra.interp(poalgebra.Id(3)) == poalgebra.identity(3)


def test_interp_is_a_functor():
    f = poalgebra.parse('delta ; id1 * sigma')
    g = poalgebra.parse('mu')
    assert poalgebra.interp(poalgebra.Seq(f, g)) == poalgebra.compose(poalgebra.interp(f), poalgebra.interp(g))
    assert poalgebra.interp(poalgebra.Par(f, g)) == poalgebra.tensor(poalgebra.interp(f), poalgebra.interp(g))


def test_transitivity_absorbs_the_shortcut():
    assert poalgebra.tp_equal(poalgebra.parse('delta ; id1 * sigma ; mu'), poalgebra.parse('sigma'))
    assert not poalgebra.tp_equal(poalgebra.parse('sigma ; sigma'), poalgebra.parse('sigma'))


def test_tp_equal_requires_parallel_terms():
    with pytest.raises(poalgebra.ArityError):
        poalgebra.tp_equal(poalgebra.parse('mu'), poalgebra.parse('id1'))


def test_custom_table():
    images = dict(poalgebra.GENERATOR_TABLE.items())
    images['sigma'] = poalgebra.identity(1)
    table = poalgebra.GeneratorTable(images)
    f = poalgebra.interp(poalgebra.parse('sigma ; sigma'), table)
    assert f == poalgebra.identity(1)


def test_table_checks_images():
    images = dict(poalgebra.GENERATOR_TABLE.items())
    del images['eta']
    with pytest.raises(ValueError):
        poalgebra.GeneratorTable(images)
    images['eta'] = poalgebra.identity(1)
    with pytest.raises(poalgebra.ArityError):
        poalgebra.GeneratorTable(images)


def test_is_relation_term():
    assert poalgebra.is_relation_term(poalgebra.parse('mu ; delta'))
    assert not poalgebra.is_relation_term(poalgebra.parse('sigma'))
