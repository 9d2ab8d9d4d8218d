"""
.. module:: factorization
   :platform: Unix, Windows
   :synopsis: Linearizations, canonical factorizations and their translation into terms

A morphism :math:`f : m \\to n` with `k` internal events, together with a linearization
:math:`x_0, \\dots, x_{k-1}` of its internal events, factors as

.. math::
    f = R \\circ X^{m+k-1}_{I_{k-1}} \\circ \\dots \\circ X^m_{I_0}

where the block :math:`X^{m+j}_{I_j}` adds the event :math:`x_j` above the wires listed in
:math:`I_j \\subseteq [m+j]` (wire `i` < `m` is the source `i`, wire `m+i` is the event
:math:`x_i`) and the relation :math:`R : m+k \\to n` tells which wires lie below each target. The
factorizations obtained in this way are exactly the transitive ones, and exchanging two consecutive
independent events of the linearization is the :func:`switch` move.

"""

import dataclasses
import itertools

import networkx as nx
import numpy as np

from poalgebra.posets import ArityError, PosetMorphism, fingerprints
from poalgebra.relations import Relation
from poalgebra.terms import Gen, Id, gamma, seq_all, tensor_all, whisker


class InvalidLinearization(ValueError):
    """
    Raised when a sequence of events is not a linearization of the internal events of a morphism.

    """


class DependencyError(ValueError):
    """
    Raised when a switch move is attempted on two dependent blocks.

    """


@dataclasses.dataclass(frozen=True)
class Transposition(object):
    """
    The transposition :math:`\\tau^n_i` of :math:`[n]` exchanging `i` and `i+1`.

    Example
    -------
        >>> import poalgebra
        >>> tau = poalgebra.Transposition(5, 2)
        >>> [tau.apply(j) for j in range(5)]
        [0, 1, 3, 2, 4]

    """
    n: int
    i: int

    def __post_init__(self):
        if not 0 <= self.i < self.i + 1 < self.n:
            raise ValueError(f'transposition index {self.i} is out of range for {self.n} elements')

    def apply(self, j):
        if j == self.i:
            return self.i + 1
        if j == self.i + 1:
            return self.i
        return j

    def apply_set(self, elements):
        return frozenset(self.apply(j) for j in elements)

    def precompose(self, relation):
        """
        Returns :math:`R \\circ \\tau`, that is, the relation with rows `i` and `i+1` exchanged.

        """
        if relation.m != self.n:
            raise ArityError(f'cannot precompose a relation {relation.m}->{relation.n} by a '
                             f'transposition of {self.n} elements')
        return Relation(relation.m, relation.n, [(self.apply(i), j) for i, j in relation.pairs])


@dataclasses.dataclass(frozen=True)
class Linearization(object):
    """
    A linear order on the internal events of a morphism, compatible with its partial order.

    Parameters
    ----------
        morphism : :class:`~poalgebra.posets.PosetMorphism`
        events : tuple(int)
            The internal events, `events[j]` being :math:`x_j`.

    Raises
    ------
        InvalidLinearization
            If `events` is not a permutation of the internal events, or lists an event before one
            of its predecessors.

    """
    morphism: PosetMorphism
    events: tuple

    def __post_init__(self):
        events = tuple(int(e) for e in self.events)
        object.__setattr__(self, 'events', events)
        if sorted(events) != list(self.morphism.internal):
            raise InvalidLinearization(
                f'{list(events)} is not a permutation of the internal events {list(self.morphism.internal)}'
            )
        order = self.morphism.order
        for i, j in itertools.combinations(range(len(events)), 2):
            if order[events[j], events[i]]:
                raise InvalidLinearization(f'event {events[j]} lies below {events[i]} but is listed after it')

    def __len__(self):
        return len(self.events)

    def __getitem__(self, j):
        return self.events[j]

    def __iter__(self):
        return iter(self.events)

    def position(self, event):
        return self.events.index(event)

    def independent(self, i):
        """
        Tells whether :math:`x_i` and :math:`x_{i+1}` are incomparable.

        """
        a, b = self.events[i], self.events[i + 1]
        order = self.morphism.order
        return not (order[a, b] or order[b, a])

    def swapped(self, i):
        """
        Returns the linearization :math:`x \\circ \\tau^k_i`.

        """
        events = list(self.events)
        events[i], events[i + 1] = events[i + 1], events[i]
        return Linearization(self.morphism, tuple(events))


def _internal_graph(f):
    graph = nx.DiGraph()
    graph.add_nodes_from(f.internal)
    graph.add_edges_from((a, b) for a, b in f.hasse_pairs() if f.is_internal(a) and f.is_internal(b))
    return graph


def linearizations(f):
    """
    Returns all the linearizations of the internal events of a morphism, in lexicographic order.

    Example
    -------
        >>> import poalgebra
        >>> antichain = poalgebra.PosetMorphism.from_pairs(0, 0, 3, [])
        >>> len(poalgebra.linearizations(antichain))
        6
        >>> poalgebra.linearizations(poalgebra.identity(2))[0].events
        ()

    """
    if not f.k:
        return [Linearization(f, ())]
    return [Linearization(f, tuple(order)) for order in sorted(nx.all_topological_sorts(_internal_graph(f)))]


def lin_adjacent(x1, x2):
    """
    Returns the index `i` such that `x2` is `x1` with the independent events :math:`x_i` and
    :math:`x_{i+1}` exchanged, or `None` if there is no such index.

    """
    if x1.morphism != x2.morphism or len(x1) != len(x2):
        return None
    differ = [j for j in range(len(x1)) if x1[j] != x2[j]]
    if len(differ) != 2 or differ[1] != differ[0] + 1:
        return None
    i = differ[0]
    if x1[i] != x2[i + 1] or x1[i + 1] != x2[i] or not x1.independent(i):
        return None
    return i


def lin_connect(x1, x2):
    """
    Finds a chain of exchanges of consecutive independent events turning `x1` into `x2`.

    Returns
    -------
        path : list(int)
            The exchanged positions, to be applied in order with :meth:`Linearization.swapped`.

    Raises
    ------
        InvalidLinearization
            If the two linearizations are not linearizations of the same morphism.

    Example
    -------
        >>> import poalgebra
        >>> f = poalgebra.PosetMorphism.from_pairs(0, 0, 3, [])
        >>> first, *_, last = poalgebra.linearizations(f)
        >>> poalgebra.lin_connect(first, last)
        [0, 1, 0]

    """
    if x1.morphism != x2.morphism:
        raise InvalidLinearization('linearizations of different morphisms cannot be connected')
    rank = {event: j for j, event in enumerate(x2.events)}
    current = x1
    path = []
    unsorted = True
    while unsorted:
        unsorted = False
        for i in range(len(current) - 1):
            if rank[current[i]] > rank[current[i + 1]]:
                if not current.independent(i):
                    raise RuntimeError(f'events {current[i]} and {current[i + 1]} are ordered oppositely')
                current = current.swapped(i)
                path.append(i)
                unsorted = True
    return path


def x_block(n, subset):
    """
    Returns the block :math:`X^n_I : n \\to n+1`, with one internal event above the sources in `I`
    and below the last target, each source `i` lying below the target `i`.

    Example
    -------
        >>> import poalgebra
        >>> block = poalgebra.x_block(3, {0, 2})
        >>> block.size, block.k, len(block.hasse_pairs())
        (8, 1, 6)

    """
    subset = sorted(subset)
    if any(not 0 <= i < n for i in subset):
        raise ValueError(f'{subset} is not a subset of [{n}]')
    x = n + n + 1
    pairs = [(i, n + i) for i in range(n)] + [(i, x) for i in subset] + [(x, n + n)]
    return PosetMorphism.from_pairs(n, n + 1, 1, pairs)


@dataclasses.dataclass(frozen=True)
class Factorization(object):
    """
    The data :math:`(I_0, \\dots, I_{k-1}, R)` of a factorization
    :math:`R \\circ X^{m+k-1}_{I_{k-1}} \\circ \\dots \\circ X^m_{I_0}`.

    Parameters
    ----------
        m : int
            The source arity.
        k : int
            The number of blocks.
        n : int
            The target arity.
        subsets : sequence of sets
            The subsets :math:`I_j \\subseteq [m+j]`.
        relation : :class:`~poalgebra.relations.Relation`
            The closing relation :math:`R : m+k \\to n`.

    """
    m: int
    k: int
    n: int
    subsets: tuple
    relation: Relation

    def __post_init__(self):
        subsets = tuple(frozenset(int(i) for i in s) for s in self.subsets)
        object.__setattr__(self, 'subsets', subsets)
        if len(subsets) != self.k:
            raise ValueError(f'expected {self.k} subsets, got {len(subsets)}')
        for j, subset in enumerate(subsets):
            if any(not 0 <= i < self.m + j for i in subset):
                raise ValueError(f'I_{j} = {sorted(subset)} is not a subset of [{self.m + j}]')
        if self.relation.arity != (self.m + self.k, self.n):
            raise ArityError(
                f'closing relation is {self.relation.m}->{self.relation.n}, '
                f'expected {self.m + self.k}->{self.n}'
            )

    @property
    def arity(self):
        return (self.m, self.n)

    def __str__(self):
        blocks = ', '.join('{' + ','.join(map(str, sorted(s))) + '}' for s in self.subsets)
        return f'F({self.m}->{self.n}; I=[{blocks}]; R={list(self.relation.pairs)})'


def _wire_event(F, wire):
    # event of the composite carried by a wire of the factorization
    if wire < F.m:
        return wire
    return F.m + F.n + wire - F.m


def fact_compose(F):
    """
    Builds the morphism of a factorization, with its induced linearization.

    Returns
    -------
        morphism : :class:`~poalgebra.posets.PosetMorphism`
            The composite, whose internal event `m+n+j` is the event of block `j`.
        linearization : :class:`Linearization`
            The induced linearization, listing the internal events in block order.

    Example
    -------
        >>> import poalgebra
        >>> F = poalgebra.Factorization(3, 1, 4, [{0, 2}], poalgebra.rel_id(4))
        >>> f, x = poalgebra.fact_compose(F)
        >>> poalgebra.iso_eq(f, poalgebra.x_block(3, {0, 2})) is not None
        True

    """
    pairs = []
    for j, subset in enumerate(F.subsets):
        pairs += [(_wire_event(F, i), F.m + F.n + j) for i in subset]
    pairs += [(_wire_event(F, i), F.m + j) for i, j in F.relation.pairs]
    f = PosetMorphism.from_pairs(F.m, F.n, F.k, pairs)
    return f, Linearization(f, tuple(f.internal))


def factorize(f, x):
    """
    Computes the factorization of a morphism along a linearization of its internal events.

    Parameters
    ----------
        f : :class:`~poalgebra.posets.PosetMorphism`
        x : :class:`Linearization` or sequence of int
            The internal events in the order of the blocks.

    Returns
    -------
        factorization : :class:`Factorization`
            A transitive factorization.

    Raises
    ------
        InvalidLinearization
            If `x` is not a linearization of the internal events of `f`.

    """
    if isinstance(x, Linearization):
        if x.morphism != f:
            raise InvalidLinearization('the linearization belongs to another morphism')
    else:
        x = Linearization(f, tuple(x))
    m, n, k = f.m, f.n, f.k
    order = f.order
    wires = list(range(m)) + list(x.events)
    subsets = [
        {i for i in range(m + j) if order[wires[i], x[j]]}
        for j in range(k)
    ]
    pairs = [(i, j) for i in range(m + k) for j in range(n) if order[wires[i], m + j]]
    return Factorization(m, k, n, subsets, Relation(m + k, n, pairs))


def is_transitive(F):
    """
    Tells whether a factorization is closed under both transitivity clauses: an input of a block
    feeding another block is an input of the latter, and an input of a block feeding a target lies
    below that target.

    Example
    -------
        >>> import poalgebra
        >>> F = poalgebra.Factorization(0, 2, 1, [set(), {0}], poalgebra.Relation(2, 1, {(1, 0)}))
        >>> poalgebra.is_transitive(F)
        False

    """
    m = F.m
    for subset in F.subsets:
        for wire in subset:
            if wire >= m and not F.subsets[wire - m] <= subset:
                return False
    for wire, target in F.relation.pairs:
        if wire >= m and any((i, target) not in F.relation for i in F.subsets[wire - m]):
            return False
    return True


def transitive_closure_fact(F):
    """
    Returns the least transitive factorization containing the data of `F`. Each added pair follows
    from transitivity, so the composite morphism is unchanged.

    """
    m = F.m
    subsets = []
    for subset in F.subsets:
        # blocks are closed in order, so the inputs of earlier blocks are already complete
        closed = set(subset)
        for wire in subset:
            if wire >= m:
                closed |= subsets[wire - m]
        subsets.append(closed)
    pairs = set(F.relation.pairs)
    for wire, target in F.relation.pairs:
        if wire >= m:
            pairs |= {(i, target) for i in subsets[wire - m]}
    return Factorization(F.m, F.k, F.n, subsets, Relation(F.m + F.k, F.n, pairs))


def switch(F, i):
    """
    Exchanges the consecutive independent blocks `i` and `i+1` of a factorization.

    The two blocks exchange their input sets, the later blocks see the wires `m+i` and `m+i+1`
    exchanged, and the closing relation is precomposed by the transposition
    :math:`\\tau^{m+k}_{m+i}`.

    Raises
    ------
        DependencyError
            If the event of block `i` is an input of block `i+1`.

    Example
    -------
        >>> import poalgebra
        >>> F = poalgebra.Factorization(0, 2, 0, [set(), set()], poalgebra.Relation(2, 0))
        >>> poalgebra.switch(F, 0) == F
        True

    """
    m, k = F.m, F.k
    if not 0 <= i < i + 1 < k:
        raise ValueError(f'no blocks {i} and {i + 1} in a factorization with {k} blocks')
    if m + i in F.subsets[i + 1]:
        raise DependencyError(f'block {i + 1} depends on block {i}')
    subsets = list(F.subsets)
    subsets[i], subsets[i + 1] = subsets[i + 1], subsets[i]
    for j in range(i + 2, k):
        subsets[j] = Transposition(m + j, m + i).apply_set(subsets[j])
    relation = Transposition(m + k, m + i).precompose(F.relation)
    return Factorization(m, k, F.n, subsets, relation)


# Combinators

def comb_i(n):
    """:math:`I^n = \\mathrm{id}_{n+1}`."""
    return Id(n + 1)


def comb_h(n):
    """:math:`H^n = \\mathrm{id}_n \\otimes \\eta : n \\to n+1`."""
    return whisker(n, Gen('eta'), 0)


def comb_s(n):
    """:math:`S^n = \\mathrm{id}_n \\otimes \\sigma : n+1 \\to n+1`."""
    return whisker(n, Gen('sigma'), 0)


def comb_g(n, i=None):
    """
    :math:`G^n_i = \\mathrm{id}_i \\otimes \\gamma \\otimes \\mathrm{id}_{n-i} : n+2 \\to n+2`, with
    :math:`G^n = G^n_n`.

    """
    i = n if i is None else i
    if not 0 <= i <= n:
        raise ValueError(f'G^{n}_{i} is undefined')
    return whisker(i, Gen('gamma'), n - i)


def comb_w(n, i):
    """
    Returns :math:`W^n_i : n+1 \\to n+1`, which copies the wire `i` and merges the copy into the
    last wire:

    .. math::
        W^n_i = (\\mathrm{id}_i \\otimes \\delta \\otimes \\mathrm{id}_{n-i}) ;
                (\\mathrm{id}_{i+1} \\otimes \\gamma_{1,n-i-1} \\otimes \\mathrm{id}_1) ;
                (\\mathrm{id}_n \\otimes \\mu)

    Example
    -------
        >>> import poalgebra
        >>> print(poalgebra.comb_w(1, 0))
        (delta * id1) ; (id1 * mu)

    """
    if not 0 <= i < n:
        raise ValueError(f'W^{n}_{i} is undefined')
    return seq_all([
        whisker(i, Gen('delta'), n - i),
        whisker(i + 1, gamma(1, n - i - 1), 1),
        whisker(n, Gen('mu'), 0),
    ])


def comb_w_set(n, subset):
    """
    Returns :math:`W^n_I`, the composite of the :math:`W^n_i` for `i` in `I` by increasing index,
    and :math:`I^n` when `I` is empty.

    """
    return seq_all([comb_i(n)] + [comb_w(n, i) for i in sorted(subset)])


def comb_x(n, subset):
    """
    Returns the term :math:`X^n_I = H^n ; W^n_I ; S^n : n \\to n+1`, whose interpretation is
    :func:`x_block`.

    Example
    -------
        >>> import poalgebra
        >>> term = poalgebra.comb_x(3, {0, 2})
        >>> poalgebra.iso_eq(poalgebra.interp(term), poalgebra.x_block(3, {0, 2})) is not None
        True

    """
    return seq_all([comb_h(n), comb_w_set(n, subset), comb_s(n)])


def _fan_out(count):
    if count == 0:
        return Gen('eps')
    if count == 1:
        return Id(1)
    return seq_all([Gen('delta'), tensor_all([Id(1), _fan_out(count - 1)])])


def _fan_in(count):
    if count == 0:
        return Gen('eta')
    if count == 1:
        return Id(1)
    return seq_all([tensor_all([Id(1), _fan_in(count - 1)]), Gen('mu')])


def rel_to_term(r):
    """
    Builds a term without :math:`\\sigma` interpreting to a relation.

    Each input is copied once per related output (or discarded), the copies are routed by
    symmetries from input-major to output-major order, and the copies reaching each output are
    merged (or an output with no related input is created by a unit).

    Example
    -------
        >>> import poalgebra
        >>> r = poalgebra.Relation(2, 1, {(0, 0), (1, 0)})
        >>> print(poalgebra.rel_to_term(r))
        mu

    """
    wires = [(i, j) for i, j in r.pairs]
    width = len(wires)
    steps = [tensor_all(_fan_out(len(r.image(i))) for i in range(r.m))]
    # adjacent exchanges sorting the copies by output
    unsorted = True
    while unsorted:
        unsorted = False
        for p in range(width - 1):
            if (wires[p][1], wires[p][0]) > (wires[p + 1][1], wires[p + 1][0]):
                wires[p], wires[p + 1] = wires[p + 1], wires[p]
                steps.append(whisker(p, Gen('gamma'), width - p - 2))
                unsorted = True
    steps.append(tensor_all(_fan_in(len(r.preimage(j))) for j in range(r.n)))
    return seq_all([Id(r.m)] + steps)


def fact_to_term(F):
    """
    Translates a factorization into the term :math:`X^m_{I_0} ; \\dots ; X^{m+k-1}_{I_{k-1}} ; R`.

    """
    blocks = [comb_x(F.m + j, subset) for j, subset in enumerate(F.subsets)]
    return seq_all([Id(F.m)] + blocks + [rel_to_term(F.relation)])


# Canonical numbering of internal events

def _refined_classes(f):
    labels = fingerprints(f)
    internal = list(f.internal)
    base = f.m + f.n
    order = f.order
    count = len(set(labels))
    while True:
        signatures = [
            (
                labels[e - base],
                tuple(sorted(labels[b - base] for b in internal if order[b, e])),
                tuple(sorted(labels[a - base] for a in internal if order[e, a])),
            )
            for e in internal
        ]
        ranks = {signature: r for r, signature in enumerate(sorted(set(signatures)))}
        labels = [ranks[signature] for signature in signatures]
        if len(ranks) == count:
            return labels
        count = len(ranks)


def canonical_permutation(f):
    """
    Returns the renumbering of the internal events of a morphism that minimizes its encoding.

    Internal events are first grouped in isomorphism-invariant classes (refined fingerprints); the
    classes are ordered by label and only the permutations within classes are tried, so the cost
    is the product of the factorials of the class sizes.

    Returns
    -------
        permutation : tuple(int)
            In the format of :meth:`~poalgebra.posets.PosetMorphism.relabel`.

    """
    if not f.k:
        return ()
    labels = _refined_classes(f)
    classes = [
        [i for i in range(f.k) if labels[i] == label]
        for label in sorted(set(labels))
    ]
    base = f.m + f.n
    external = list(range(base))
    best, best_code = None, None
    for choice in itertools.product(*(itertools.permutations(c) for c in classes)):
        permutation = tuple(i for block in choice for i in block)
        index = external + [base + i for i in permutation]
        code = np.packbits(f.order[np.ix_(index, index)]).tobytes()
        if best_code is None or code < best_code:
            best, best_code = permutation, code
    return best


def canonical_form(f):
    """
    Returns the representative of the isomorphism class of `f` with canonically numbered internal
    events: two morphisms are isomorphic exactly when their canonical forms are equal.

    Example
    -------
        >>> import poalgebra
        >>> f = poalgebra.PosetMorphism.from_pairs(0, 0, 3, [(2, 0)])
        >>> g = poalgebra.PosetMorphism.from_pairs(0, 0, 3, [(0, 1)])
        >>> poalgebra.canonical_form(f) == poalgebra.canonical_form(g)
        True

    """
    return f.relabel(canonical_permutation(f))


def canonical_linearization(f):
    """
    Returns the lexicographically least linearization of the canonical form of `f`, carried back
    to the events of `f`. Isomorphic morphisms get corresponding linearizations.

    """
    permutation = canonical_permutation(f)
    canonical = f.relabel(permutation)
    base = f.m + f.n
    events = nx.lexicographical_topological_sort(_internal_graph(canonical)) if f.k else []
    return Linearization(f, tuple(base + permutation[e - base] for e in events))


def canonical_term(f):
    """
    Returns the canonical term of a morphism: the term of its factorization along the canonical
    linearization. Isomorphic morphisms get equal terms.

    Example
    -------
        >>> import poalgebra
        >>> sigma = poalgebra.interp(poalgebra.parse('sigma'))
        >>> term = poalgebra.canonical_term(sigma)
        >>> poalgebra.tp_equal(term, poalgebra.parse('sigma'))
        True

    """
    return fact_to_term(factorize(f, canonical_linearization(f)))
