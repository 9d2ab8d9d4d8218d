"""
.. module:: harness
   :platform: Unix, Windows
   :synopsis: Machine verification of the presentation at small sizes

Morphisms are enumerated up to isomorphism, terms up to the monoidal axioms, and each suite checks
one property of the presentation on all of them:

* ``soundness``: every rule, in context, relates terms with isomorphic interpretations;
* ``fullness``: every morphism is the interpretation of its canonical term;
* ``bijection``: factorizations along linearizations are inverse to composition;
* ``switch``: exchanging independent events is the switch move, and the combinator laws hold;
* ``faithful``: equal terms are joined by rewriting (sampled, with a search budget);
* ``relations``: relations embed functorially and faithfully;
* ``enumeration``: the enumeration agrees with a brute-force count;
* ``golden``: the worked examples of the theory.

"""

import collections
import dataclasses
import itertools
import logging
import random

import networkx as nx
import numpy as np

from poalgebra import testmodels
from poalgebra.factorization import (
    DependencyError, Factorization, Transposition, canonical_form, canonical_term, comb_g, comb_w,
    comb_x, fact_compose, factorize, is_transitive, linearizations, rel_to_term, switch,
    transitive_closure_fact, x_block,
)
from poalgebra.interp import interp, tp_equal
from poalgebra.io import deserialize, dumps_morphism, loads_morphism, serialize
from poalgebra.posets import compose, dual, glue_orders, identity, iso_eq, tensor
from poalgebra.relations import (
    Relation, all_relations, bool_product, poset_to_rel, rel_id, rel_to_poset,
)
from poalgebra.rewriting import Budget, connected
from poalgebra.rules import POALGEBRA_RULES
from poalgebra.terms import (
    POALGEBRA_GENERATORS, Slice, from_slices, layered, normal_form, parse, seq_all, whisker,
)

logger = logging.getLogger(__name__)

MAX_EVENTS = 8
"""The largest number of events handled by the enumeration and the canonical labeling."""


class SizeGuardExceeded(ValueError):
    """
    Raised when a bound exceeds what the exhaustive procedures can handle.

    """


@dataclasses.dataclass(frozen=True)
class EnumSpec(object):
    """
    Bounds of an enumeration of morphisms.

    Attributes
    ----------
        max_events : int
            The largest total number of events.
        max_m : int
            The largest source arity.
        max_n : int
            The largest target arity.
        max_internal : int or None
            The largest number of internal events, unbounded if `None`.

    """
    max_events: int = 5
    max_m: int = 2
    max_n: int = 2
    max_internal: int = None

    def __post_init__(self):
        bounds = [self.max_events, self.max_m, self.max_n]
        if self.max_internal is not None:
            bounds.append(self.max_internal)
        if any(bound < 0 for bound in bounds):
            raise ValueError('enumeration bounds must be natural numbers')
        if self.max_events > MAX_EVENTS:
            raise SizeGuardExceeded(f'cannot enumerate morphisms with more than {MAX_EVENTS} events')

    def arities(self):
        return [
            (m, n) for m in range(self.max_m + 1) for n in range(self.max_n + 1)
            if m + n <= self.max_events
        ]

    def internal_bound(self, m, n):
        bound = self.max_events - m - n
        return bound if self.max_internal is None else min(bound, self.max_internal)


@dataclasses.dataclass(frozen=True)
class CanonicalKey(object):
    """
    A byte string identifying a morphism up to isomorphism.

    """
    code: bytes

    def __str__(self):
        return self.code.hex()


def canonical_key(f):
    """
    Computes the key of the isomorphism class of a morphism.

    Raises
    ------
        SizeGuardExceeded
            If the morphism has more than :data:`MAX_EVENTS` internal events.

    Example
    -------
        >>> import poalgebra
        >>> chain = poalgebra.PosetMorphism.from_pairs(0, 0, 2, [(0, 1)])
        >>> antichain = poalgebra.PosetMorphism.from_pairs(0, 0, 2, [])
        >>> poalgebra.canonical_key(chain) == poalgebra.canonical_key(antichain)
        False
        >>> poalgebra.canonical_key(chain) == poalgebra.canonical_key(chain.relabel([1, 0]))
        True

    """
    if f.k > MAX_EVENTS:
        raise SizeGuardExceeded(f'canonical labeling is limited to {MAX_EVENTS} internal events')
    form = canonical_form(f)
    header = bytes([f.m, f.n, f.size])
    return CanonicalKey(header + np.packbits(form.order).tobytes())


def _down_closed_sets(f, candidates):
    order = f.order
    for size in range(len(candidates) + 1):
        for chosen in itertools.combinations(candidates, size):
            members = set(chosen)
            if all(set(np.flatnonzero(order[:, e]).tolist()) <= members for e in chosen):
                yield chosen


def _extensions(f):
    # adds one internal event, maximal among internal events
    m, n, k = f.m, f.n, f.k
    below = list(range(m)) + list(f.internal)
    targets = list(range(m, m + n))
    base_pairs = list(f.pairs())
    x = f.size
    for down in _down_closed_sets(f, below):
        for size in range(n + 1):
            for up in itertools.combinations(targets, size):
                pairs = base_pairs + [(d, x) for d in down] + [(x, t) for t in up]
                yield type(f).from_pairs(m, n, k + 1, pairs)


def enumerate_morphisms(spec):
    """
    Enumerates one representative of each isomorphism class of morphisms within bounds.

    Morphisms of each arity are generated by increasing number of internal events, starting from
    the relations and adding a maximal internal event in every possible way.

    Parameters
    ----------
        spec : :class:`EnumSpec`

    Returns
    -------
        morphisms : generator of :class:`~poalgebra.posets.PosetMorphism`

    Example
    -------
        >>> import poalgebra
        >>> spec = poalgebra.EnumSpec(max_events=3, max_m=0, max_n=0)
        >>> len(list(poalgebra.enumerate_morphisms(spec)))
        9

    """
    for m, n in spec.arities():
        layer = []
        seen = set()
        for r in all_relations(m, n):
            f = rel_to_poset(r)
            seen.add(canonical_key(f))
            layer.append(f)
            yield f
        for k in range(1, spec.internal_bound(m, n) + 1):
            successors = []
            for f in layer:
                for g in _extensions(f):
                    key = canonical_key(g)
                    if key not in seen:
                        seen.add(key)
                        successors.append(g)
                        yield g
            logger.debug('%d classes of morphisms %d->%d with %d internal events', len(successors), m, n, k)
            layer = successors


def enumerate_terms(max_generators, max_width=3, signature=POALGEBRA_GENERATORS):
    """
    Enumerates the terms with at most `max_generators` generators on at most `max_width` wires,
    one per class modulo the axioms of monoidal categories.

    Example
    -------
        >>> import poalgebra
        >>> terms = list(poalgebra.enumerate_terms(1))
        >>> sum(1 for term in terms if poalgebra.generator_count(term) == 1)
        27

    """
    generators = sorted(signature, key=lambda g: g.name)
    seen = set()
    layer = []
    for m in range(max_width + 1):
        form = layered(m, [])
        seen.add(form)
        layer.append((m, ()))
        yield form.term()
    for _ in range(max_generators):
        successors = []
        for m, sequence in layer:
            width = sequence[-1].width_out if sequence else m
            for generator in generators:
                if generator.m > width or width - generator.m + generator.n > max_width:
                    continue
                for a in range(width - generator.m + 1):
                    extended = sequence + (Slice(a, generator.name, width - generator.m - a),)
                    form = layered(m, extended)
                    if form not in seen:
                        seen.add(form)
                        successors.append((m, extended))
                        yield form.term()
        layer = successors


def random_term(rng, max_generators, max_width=2):
    """
    Draws a random term with between 1 and `max_generators` generators, on at most `max_width`
    wires at every stage.

    """
    m = rng.randint(0, max_width)
    width = m
    sequence = []
    for _ in range(rng.randint(1, max_generators)):
        choices = [
            Slice(a, g.name, width - g.m - a)
            for g in POALGEBRA_GENERATORS
            if g.m <= width and width - g.m + g.n <= max_width
            for a in range(width - g.m + 1)
        ]
        piece = rng.choice(choices)
        sequence.append(piece)
        width = piece.width_out
    return from_slices(m, sequence)


@dataclasses.dataclass
class Report(object):
    """
    The outcome of a suite.

    Attributes
    ----------
        name : str
        passed : int
        failed : int
        inconclusive : int
        failures : list of (str, str)
            The identifier and a description of each failed case.

    Example
    -------
        >>> import poalgebra
        >>> report = poalgebra.Report('demo')
        >>> report.check('first', True)
        >>> report.check('second', False, 'mismatch')
        >>> print('\\n'.join(report.lines()))
        SUITE demo pass=1 fail=1 inconclusive=0
        FAIL second mismatch

    """
    name: str
    passed: int = 0
    failed: int = 0
    inconclusive: int = 0
    failures: list = dataclasses.field(default_factory=list)

    def check(self, case, ok, detail=''):
        if ok:
            self.passed += 1
        else:
            self.fail(case, detail)

    def fail(self, case, detail=''):
        self.failed += 1
        self.failures.append((case, detail))

    def skip(self):
        self.inconclusive += 1

    @property
    def ok(self):
        return self.failed == 0

    def merge(self, other):
        """
        Returns the report accumulating both outcomes, named after this one.

        """
        return Report(
            self.name,
            self.passed + other.passed,
            self.failed + other.failed,
            self.inconclusive + other.inconclusive,
            self.failures + other.failures,
        )

    def lines(self):
        header = f'SUITE {self.name} pass={self.passed} fail={self.failed} inconclusive={self.inconclusive}'
        return [header] + [f'FAIL {case} {detail}'.rstrip() for case, detail in self.failures]


@dataclasses.dataclass(frozen=True)
class HarnessSettings(object):
    """
    Default bounds of the suites run by ``poalgebra verify``.

    Attributes
    ----------
        max_events : int, default=5
        max_arity : int, default=2
            The largest source and target arities of enumerated morphisms.
        relation_arity : int, default=3
            The largest arity of the exhaustive checks on relations.
        algebra_width : int, default=3
            The largest `n` of the combinator laws.
        seed : int, default=0
        sample : int, default=200
            The number of term pairs of the faithfulness suite.
        max_generators : int, default=6
        max_nodes : int, default=4000
        max_depth : int, default=6

    """
    max_events: int = 5
    max_arity: int = 2
    relation_arity: int = 3
    algebra_width: int = 3
    seed: int = 0
    sample: int = 200
    max_generators: int = 6
    max_nodes: int = 4000
    max_depth: int = 6

    def __post_init__(self):
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValueError(f'harness setting {field.name} must be an integer, not {value!r}')

    @property
    def spec(self):
        return EnumSpec(self.max_events, self.max_arity, self.max_arity)

    @property
    def budget(self):
        return Budget(self.max_nodes, self.max_depth)

    def replace(self, **changes):
        changes = {key: value for key, value in changes.items() if value is not None}
        return dataclasses.replace(self, **changes)

    def to_dict(self):
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, values):
        if not isinstance(values, dict):
            raise ValueError(f'harness settings must be a mapping, not {type(values).__name__}')
        known = {field.name for field in dataclasses.fields(cls)}
        unknown = set(values) - known
        if unknown:
            raise ValueError(f'unknown harness settings: {", ".join(sorted(map(str, unknown)))}')
        return cls(**values)

    def dump(self, file):
        serialize(self.to_dict(), file)

    @classmethod
    def load(cls, file):
        return cls.from_dict(deserialize(file) or {})


def _case_id(f):
    pairs = ','.join(f'{a}<{b}' for a, b in f.hasse_pairs())
    return f'{f.m}->{f.n}[{pairs}]'


def suite_soundness(rules=POALGEBRA_RULES, max_whisker=2):
    """
    Checks that both sides of every rule, placed in every context
    :math:`\\mathrm{id}_a \\otimes - \\otimes \\mathrm{id}_b` with :math:`a + b \\leq` `max_whisker`,
    have isomorphic interpretations.

    """
    report = Report('soundness')
    for rule in rules:
        for a in range(max_whisker + 1):
            for b in range(max_whisker + 1 - a):
                lhs, rhs = whisker(a, rule.lhs, b), whisker(a, rule.rhs, b)
                report.check(f'{rule.name}[{a},{b}]', tp_equal(lhs, rhs), f'{lhs} != {rhs}')
    return report


def suite_fullness(spec):
    """
    Checks that every enumerated morphism is the interpretation of its canonical term.

    """
    report = Report('fullness')
    for f in enumerate_morphisms(spec):
        term = canonical_term(f)
        report.check(_case_id(f), iso_eq(interp(term), f) is not None, f'canonical term {term}')
    return report


def all_factorizations(m, k, n):
    """
    Yields every factorization with `m` sources, `k` blocks and `n` targets.

    """
    choices = [
        [set(c) for size in range(m + j + 1) for c in itertools.combinations(range(m + j), size)]
        for j in range(k)
    ]
    for subsets in itertools.product(*choices):
        for relation in all_relations(m + k, n):
            yield Factorization(m, k, n, subsets, relation)


def suite_bijection(spec, max_size=None):
    """
    Checks that factorizing along a linearization and composing back recovers the morphism with
    its linearization, for every enumerated morphism and every linearization, and that composing
    a transitive factorization and factorizing back recovers it, for all factorizations with
    :math:`m + k + n \\leq` `max_size` (defaults to the event bound of `spec`).

    """
    report = Report('bijection')
    for f in enumerate_morphisms(spec):
        base = f.m + f.n
        for x in linearizations(f):
            F = factorize(f, x)
            g, y = fact_compose(F)
            expected = f.relabel([e - base for e in x])
            ok = is_transitive(F) and g == expected and y.events == tuple(g.internal)
            report.check(f'{_case_id(f)}/x={list(x)}', ok, str(F))
    max_size = spec.max_events if max_size is None else max_size
    for m in range(spec.max_m + 1):
        for n in range(spec.max_n + 1):
            for k in range(max_size - m - n + 1):
                for F in all_factorizations(m, k, n):
                    if not is_transitive(F):
                        continue
                    report.check(str(F), factorize(*fact_compose(F)) == F, 'composition is not inverted')
    return report


def suite_algebra(n_max=3):
    """
    Checks the laws of the combinator terms through their interpretations:
    :math:`W^n_i` and :math:`W^n_j` commute and are idempotent, two blocks exchange through
    :math:`G^n`, and blocks are natural with respect to :math:`G^n_i`.

    """
    report = Report('algebra')
    for n in range(1, n_max + 1):
        for i, j in itertools.product(range(n), repeat=2):
            ij = seq_all([comb_w(n, i), comb_w(n, j)])
            ji = seq_all([comb_w(n, j), comb_w(n, i)])
            report.check(f'W{n}:{i}{j}', tp_equal(ij, ji), 'W does not commute')
        for i in range(n):
            twice = seq_all([comb_w(n, i), comb_w(n, i)])
            report.check(f'W{n}:{i}{i}', tp_equal(twice, comb_w(n, i)), 'W is not idempotent')
    for n in range(n_max + 1):
        subsets = [set(c) for size in range(n + 1) for c in itertools.combinations(range(n), size)]
        for I, J in itertools.product(subsets, repeat=2):
            lhs = seq_all([comb_x(n, I), comb_x(n + 1, J)])
            rhs = seq_all([comb_x(n, J), comb_x(n + 1, I), comb_g(n)])
            report.check(f'X{n}:{sorted(I)}{sorted(J)}', tp_equal(lhs, rhs), 'blocks do not exchange')
    for n in range(n_max + 1):
        for i in range(n + 1):
            tau = Transposition(n + 2, i)
            for size in range(n + 3):
                for I in itertools.combinations(range(n + 2), size):
                    lhs = seq_all([comb_g(n, i), comb_x(n + 2, I)])
                    rhs = seq_all([comb_x(n + 2, tau.apply_set(I)), whisker(0, comb_g(n, i), 1)])
                    report.check(f'G{n},{i}:{list(I)}', tp_equal(lhs, rhs), 'block is not natural')
    return report


def suite_switch(spec, n_max=3):
    """
    Checks that exchanging two consecutive independent events of a linearization amounts to the
    switch move on factorizations, that the move is refused on dependent events and that it is an
    involution. The combinator laws of :func:`suite_algebra` are checked as well.

    """
    report = Report('switch')
    for f in enumerate_morphisms(spec):
        for x in linearizations(f):
            F = factorize(f, x)
            for i in range(len(x) - 1):
                case = f'{_case_id(f)}/x={list(x)}/i={i}'
                if not x.independent(i):
                    try:
                        switch(F, i)
                    except DependencyError:
                        report.check(case, True)
                    else:
                        report.fail(case, 'switch accepted dependent blocks')
                    continue
                moved = switch(F, i)
                ok = moved == factorize(f, x.swapped(i)) and switch(moved, i) == F
                report.check(case, ok, str(moved))
    return report.merge(suite_algebra(n_max))


def _faithful_pairs(rng, count, max_generators):
    # independent random terms, grouped by the isomorphism class of their interpretations
    classes = collections.defaultdict(dict)
    for _ in range(10 * count):
        term = random_term(rng, max_generators)
        classes[(term.arity, canonical_key(interp(term)))].setdefault(normal_form(term), term)
    candidates = [
        pair
        for members in classes.values()
        for pair in itertools.combinations(members.values(), 2)
    ]
    return rng.sample(candidates, min(count, len(candidates)))


def suite_faithful(sample=200, budget=None, seed=0, max_generators=6):
    """
    Samples pairs of terms with isomorphic interpretations and searches for rewrite paths joining
    them. A pair joined within the search budget passes, a pair left unjoined is inconclusive, and
    a pair whose interpretations differ fails.

    The pairs are drawn from independent random terms with at most `max_generators` generators on
    at most 2 wires. Terms are grouped by the class of their interpretation, and two terms of the
    same group with different monoidal normal forms make a pair.

    """
    rng = random.Random(seed)
    budget = budget or Budget()
    report = Report('faithful')
    for index, (t1, t2) in enumerate(_faithful_pairs(rng, sample, max_generators)):
        case = f'#{index}:{t1}|{t2}'
        if not tp_equal(t1, t2):
            report.fail(case, 'interpretations differ')
            continue
        path = connected(t1, t2, budget=dataclasses.replace(budget, max_generators=max_generators))
        if path is None:
            logger.debug('no rewrite path within budget for %s', case)
            report.skip()
        else:
            report.check(case, True)
    return report


def suite_relations(max_arity=3):
    """
    Checks that relations embed into poset morphisms as a faithful functor, and that the terms of
    relations interpret back to them (the latter for arities up to 2).

    Each relation is embedded once. Composites are checked for all composable pairs of each arity
    at once, by gluing the stacked order matrices of the embeddings and comparing the results with
    the embeddings of the relational composites.

    """
    report = Report('relations')
    relations, orders = {}, {}
    for m, n in itertools.product(range(max_arity + 1), repeat=2):
        relations[(m, n)] = list(all_relations(m, n))
        embedded = [rel_to_poset(r) for r in relations[(m, n)]]
        orders[(m, n)] = np.stack([f.order for f in embedded])
        distinct = len(set(embedded)) == len(embedded)
        report.check(f'faithful:{m}->{n}', distinct, 'two relations share an image')
        for r, f in zip(relations[(m, n)], embedded):
            if poset_to_rel(f) != r:
                report.fail(f'roundtrip:{r.m}->{r.n}{list(r.pairs)}', 'poset_to_rel does not invert')
    for n in range(max_arity + 1):
        report.check(f'identity:{n}', rel_to_poset(rel_id(n)) == identity(n), 'identity not preserved')
    matrices = {arity: np.stack([r.matrix() for r in rs]) for arity, rs in relations.items()}
    for m, n, p in itertools.product(range(max_arity + 1), repeat=3):
        glued = glue_orders(orders[(m, n)][:, None], orders[(n, p)][None, :], m, n, p)
        product = bool_product(matrices[(m, n)][:, None], matrices[(n, p)][None, :])
        # all_relations numbers the relations m -> p by the bits of their row-major matrices
        bits = product.reshape(product.shape[:2] + (m * p,))
        index = (bits * (1 << np.arange(m * p))).sum(axis=-1)
        wrong = (glued != orders[(m, p)][index]).any(axis=(-2, -1))
        report.passed += int(wrong.size - wrong.sum())
        for a, b in zip(*np.nonzero(wrong)):
            r, s = relations[(m, n)][a], relations[(n, p)][b]
            report.fail(f'compose:{list(r.pairs)};{list(s.pairs)}', 'composition not preserved')
    for m, n in itertools.product(range(min(max_arity, 2) + 1), repeat=2):
        for r in all_relations(m, n):
            ok = poset_to_rel(interp(rel_to_term(r))) == r
            report.check(f'term:{m}->{n}{list(r.pairs)}', ok, str(rel_to_term(r)))
    return report


def brute_force_counts(max_events):
    """
    Counts the posets with up to `max_events` elements up to isomorphism by listing every strict
    order on labelled elements and comparing digraphs.

    """
    counts = []
    for size in range(max_events + 1):
        cells = [(a, b) for a in range(size) for b in range(size) if a != b]
        found = []
        for mask in range(1 << len(cells)):
            lt = {cell for bit, cell in enumerate(cells) if mask >> bit & 1}
            if any((b, a) in lt for a, b in lt):
                continue
            if any((a, d) not in lt for a, b in lt for c, d in lt if b == c):
                continue
            graph = nx.DiGraph(list(lt))
            graph.add_nodes_from(range(size))
            if not any(nx.is_isomorphic(graph, other) for other in found):
                found.append(graph)
        counts.append(len(found))
    return counts


def suite_enumeration(spec, max_events=4):
    """
    Checks the counts of isomorphism classes of morphisms :math:`0 \\to 0` against
    :func:`brute_force_counts`, that enumerated classes have distinct keys, and that the duals of
    the classes of each arity are the classes of the swapped arity.

    """
    report = Report('enumeration')
    counted = collections.Counter(
        f.size for f in enumerate_morphisms(EnumSpec(max_events, 0, 0))
    )
    expected = brute_force_counts(max_events)
    for size, count in enumerate(expected):
        report.check(f'posets:{size}', counted[size] == count, f'{counted[size]} != {count}')
    keys = collections.defaultdict(set)
    classes = collections.defaultdict(list)
    for f in enumerate_morphisms(spec):
        key = canonical_key(f)
        if key in keys[f.arity]:
            report.fail(_case_id(f), 'duplicate class')
        keys[f.arity].add(key)
        classes[f.arity].append(f)
    for (m, n), morphisms in sorted(classes.items()):
        if (n, m) not in keys:
            continue
        duals = {canonical_key(dual(f)) for f in morphisms}
        report.check(f'dual:{m}->{n}', duals == keys[(n, m)], 'duals do not match the swapped arity')
    return report


def suite_golden():
    """
    Checks the worked examples of :mod:`~poalgebra.testmodels`.

    """
    report = Report('golden')
    first, second = testmodels.two_to_three(), testmodels.three_to_two()
    report.check('text-roundtrip', loads_morphism(dumps_morphism(first)) == first)
    report.check('composition', iso_eq(compose(second, first), testmodels.glued()) is not None)
    sigma = interp(parse('sigma'))
    report.check('tensor', iso_eq(tensor(testmodels.merge_with_event(), sigma), second) is not None)
    relation, text = testmodels.fan_relation()
    report.check('relation-term', tp_equal(parse(text), rel_to_term(relation)))
    report.check('relation-embedding', iso_eq(interp(parse(text)), rel_to_poset(relation)) is not None)
    block = testmodels.block_three()
    report.check('block', x_block(3, {0, 2}) == block and iso_eq(interp(comb_x(3, {0, 2})), block) is not None)
    diamond = testmodels.DiamondModel()
    F1 = factorize(diamond.morphism, diamond.first)
    F2 = factorize(diamond.morphism, diamond.second)
    report.check('factorization', F1 == diamond.first_factorization, str(F1))
    report.check('factorization-switched', F2 == diamond.second_factorization, str(F2))
    report.check('switch', switch(F1, 1) == F2)
    report.check('linearizations', len(linearizations(diamond.morphism)) == 3)
    report.check('fact-compose', iso_eq(fact_compose(F1)[0], diamond.morphism) is not None)
    chain = testmodels.open_chain()
    closed = transitive_closure_fact(chain)
    report.check('transitivity', not is_transitive(chain) and is_transitive(closed))
    report.check('transitive-closure', closed.relation == Relation(2, 1, {(0, 0), (1, 0)}))
    return report


SUITES = ('soundness', 'fullness', 'bijection', 'switch', 'faithful', 'relations', 'enumeration', 'golden')


def run_suites(names=SUITES, settings=None):
    """
    Runs suites by name.

    Parameters
    ----------
        names : iterable of str, default=SUITES
            Suite names, or ``'all'``.

    Keyword Args
    ------------
        settings : :class:`HarnessSettings`, default=None
            The bounds to use. ``HarnessSettings()`` is used if `None`.

    Returns
    -------
        reports : list(:class:`Report`)

    """
    settings = settings or HarnessSettings()
    runners = {
        'soundness': lambda: suite_soundness(),
        'fullness': lambda: suite_fullness(settings.spec),
        'bijection': lambda: suite_bijection(settings.spec),
        'switch': lambda: suite_switch(settings.spec, settings.algebra_width),
        'faithful': lambda: suite_faithful(
            settings.sample, settings.budget, settings.seed, settings.max_generators,
        ),
        'relations': lambda: suite_relations(settings.relation_arity),
        'enumeration': lambda: suite_enumeration(settings.spec, min(settings.max_events, 4)),
        'golden': suite_golden,
    }
    names = list(names)
    if 'all' in names:
        names = list(SUITES)
    reports = []
    for name in names:
        if name not in runners:
            raise ValueError(f'unknown suite {name}')
        report = runners[name]()
        logger.info('suite %s: %d passed, %d failed, %d inconclusive',
                    name, report.passed, report.failed, report.inconclusive)
        reports.append(report)
    return reports
