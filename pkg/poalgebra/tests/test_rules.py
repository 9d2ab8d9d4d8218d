import pytest

import poalgebra


def test_rule_count():
    assert len(poalgebra.POALGEBRA_RULES) == 26
    assert len(set(poalgebra.POALGEBRA_RULES.names)) == 26


def test_bialgebra_completion_rules():
    first = poalgebra.POALGEBRA_RULES['counit_multiplication']
    second = poalgebra.POALGEBRA_RULES['comultiplication_unit']
    assert str(first) == 'counit_multiplication: mu ; eps => eps * eps'
    assert str(second) == 'comultiplication_unit: eta ; delta => eta * eta'
    assert 'counit_multiplication' in (poalgebra.rules.__doc__ or '')


def test_bialgebra_rules_drop_sigma():
    names = poalgebra.BIALGEBRA_RULES.names
    assert len(names) == 23
    assert 'transitivity' not in names
    assert all(not rule.uses_sigma for rule in poalgebra.BIALGEBRA_RULES)


@pytest.mark.parametrize('rule', list(poalgebra.POALGEBRA_RULES), ids=lambda rule: rule.name)
def test_rule_is_sound(rule):
    assert rule.lhs.arity == rule.rhs.arity
    assert poalgebra.tp_equal(rule.lhs, rule.rhs)


@pytest.mark.parametrize('rule', list(poalgebra.POALGEBRA_RULES), ids=lambda rule: rule.name)
def test_whiskered_rule_is_sound(rule):
    placed = rule.whiskered(1, 1)
    assert placed.arity == (rule.arity[0] + 2, rule.arity[1] + 2)
    assert poalgebra.tp_equal(placed.lhs, placed.rhs)


def test_rule_lookup():
    rule = poalgebra.POALGEBRA_RULES['involution']
    assert str(rule) == 'involution: gamma ; gamma => id2'
    with pytest.raises(KeyError):
        poalgebra.POALGEBRA_RULES['frobenius']


def test_rules_must_be_parallel():
    with pytest.raises(poalgebra.ArityError):
        poalgebra.Rule.parse('broken', 'mu', 'delta')


def test_rule_names_must_be_unique():
    rule = poalgebra.POALGEBRA_RULES['involution']
    with pytest.raises(ValueError):
        poalgebra.RuleSet([rule, rule])
