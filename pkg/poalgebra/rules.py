"""
.. module:: rules
   :platform: Unix, Windows
   :synopsis: Rewriting rules of the poalgebra theory

Rules are written in diagrammatic order, so that ``a ; b`` applies `a` first. The 26 rules are
grouped as follows:

* monoid and comonoid (unit, associativity and commutativity, 8 rules);
* bialgebra, qualitativeness and transitivity (6 rules);
* symmetry (involution and Yang-Baxter, 2 rules);
* naturality of the symmetry with respect to the other generators (10 rules).

Twenty-four of them are the axioms of the presentation. The other two, ``counit_multiplication``
(:math:`\\mu ; \\varepsilon \\Rightarrow \\varepsilon \\otimes \\varepsilon`) and ``comultiplication_unit``
(:math:`\\eta ; \\delta \\Rightarrow \\eta \\otimes \\eta`), are the compatibilities of the counit with the
multiplication and of the unit with the comultiplication that complete the ``bialgebra`` rule to
the usual bialgebra laws. Both are sound for the poset interpretation, which the soundness suite
checks along with the others, and rewriting uses them to remove units and counits next to
:math:`\\mu` and :math:`\\delta`.

"""

import dataclasses

from poalgebra.posets import ArityError
from poalgebra.terms import generators_of, parse, whisker


@dataclasses.dataclass(frozen=True)
class Rule(object):
    """
    A rewriting rule :math:`\\alpha \\Rightarrow \\beta` between parallel terms.

    Example
    -------
        >>> import poalgebra
        >>> rule = poalgebra.Rule.parse('inv', 'gamma ; gamma', 'id2')
        >>> rule.arity
        (2, 2)

    """
    name: str
    lhs: object
    rhs: object

    def __post_init__(self):
        if self.lhs.arity != self.rhs.arity:
            raise ArityError(f'rule {self.name} is not parallel: {self.lhs.arity} vs {self.rhs.arity}')

    @classmethod
    def parse(cls, name, lhs, rhs):
        return cls(name, parse(lhs), parse(rhs))

    @property
    def arity(self):
        return self.lhs.arity

    @property
    def uses_sigma(self):
        return 'sigma' in generators_of(self.lhs) + generators_of(self.rhs)

    def whiskered(self, a, b):
        """
        Returns the rule placed in the context :math:`\\mathrm{id}_a \\otimes - \\otimes \\mathrm{id}_b`.

        """
        return Rule(f'{self.name}[{a},{b}]', whisker(a, self.lhs, b), whisker(a, self.rhs, b))

    def __str__(self):
        return f'{self.name}: {self.lhs} => {self.rhs}'


class RuleSet(object):
    """
    An ordered collection of rules with unique names.

    """

    def __init__(self, rules):
        self._rules = tuple(rules)
        names = [rule.name for rule in self._rules]
        if len(set(names)) != len(names):
            raise ValueError('rule names must be unique')

    def __iter__(self):
        return iter(self._rules)

    def __len__(self):
        return len(self._rules)

    def __getitem__(self, key):
        if isinstance(key, str):
            for rule in self._rules:
                if rule.name == key:
                    return rule
            raise KeyError(key)
        return self._rules[key]

    @property
    def names(self):
        return tuple(rule.name for rule in self._rules)

    def sigma_free(self):
        """
        Returns the rules of the qualitative bicommutative bialgebra subtheory, which presents the
        category of relations.

        """
        return RuleSet(rule for rule in self._rules if not rule.uses_sigma)


_POALGEBRA_RULE_TEXT = [
    # monoid and comonoid
    ('unit_left', 'eta * id1 ; mu', 'id1'),
    ('unit_right', 'id1 * eta ; mu', 'id1'),
    ('associativity', 'mu * id1 ; mu', 'id1 * mu ; mu'),
    ('commutativity', 'gamma ; mu', 'mu'),
    ('counit_left', 'delta ; eps * id1', 'id1'),
    ('counit_right', 'delta ; id1 * eps', 'id1'),
    ('coassociativity', 'delta ; delta * id1', 'delta ; id1 * delta'),
    ('cocommutativity', 'delta ; gamma', 'delta'),
    # bialgebra, qualitativeness and transitivity
    ('bialgebra', 'mu ; delta', 'delta * delta ; id1 * gamma * id1 ; mu * mu'),
    ('counit_multiplication', 'mu ; eps', 'eps * eps'),
    ('comultiplication_unit', 'eta ; delta', 'eta * eta'),
    ('unit_counit', 'eta ; eps', 'id0'),
    ('qualitative', 'delta ; mu', 'id1'),
    ('transitivity', 'delta ; id1 * sigma ; mu', 'sigma'),
    # symmetry
    ('involution', 'gamma ; gamma', 'id2'),
    ('yang_baxter', 'gamma * id1 ; id1 * gamma ; gamma * id1', 'id1 * gamma ; gamma * id1 ; id1 * gamma'),
    # naturality
    ('natural_unit_left', 'eta * id1 ; gamma', 'id1 * eta'),
    ('natural_unit_right', 'eta * id1', 'id1 * eta ; gamma'),
    ('natural_counit_right', 'eps * id1', 'gamma ; id1 * eps'),
    ('natural_counit_left', 'gamma ; eps * id1', 'id1 * eps'),
    ('natural_multiplication_left', 'mu * id1 ; gamma', 'id1 * gamma ; gamma * id1 ; id1 * mu'),
    ('natural_multiplication_right', 'gamma * id1 ; id1 * gamma ; mu * id1', 'id1 * mu ; gamma'),
    ('natural_comultiplication_left', 'gamma ; delta * id1', 'id1 * delta ; gamma * id1 ; id1 * gamma'),
    ('natural_comultiplication_right', 'delta * id1 ; id1 * gamma ; gamma * id1', 'gamma ; id1 * delta'),
    ('natural_sigma_left', 'sigma * id1 ; gamma', 'gamma ; id1 * sigma'),
    ('natural_sigma_right', 'gamma ; sigma * id1', 'id1 * sigma ; gamma'),
]

POALGEBRA_RULES = RuleSet(Rule.parse(*entry) for entry in _POALGEBRA_RULE_TEXT)
"""The 26 rules of the poalgebra theory."""

BIALGEBRA_RULES = POALGEBRA_RULES.sigma_free()
"""The rules of the qualitative bicommutative bialgebra subtheory (no :math:`\\sigma`)."""
