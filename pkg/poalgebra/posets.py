"""
.. module:: posets
   :platform: Unix, Windows
   :synopsis: Finite posets and the symmetric monoidal category of poset morphisms

A morphism :math:`m \\to n` is a finite poset :math:`E` together with injections
:math:`s: [m] \\to E` onto minimal events and :math:`t: [n] \\to E` onto maximal events, taken up to
isomorphism. Composition glues the targets of the first morphism to the sources of the second one,
closes the generated order transitively and forgets the glued events. The tensor product is the
disjoint union.

Every :class:`PosetMorphism` is stored in a canonical layout: events are the integers
:math:`0, \\dots, N-1`, with sources first, then targets, then internal events, and the strict order
is a read-only boolean matrix.

"""

import dataclasses
import itertools

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import DiGraphMatcher


class ArityError(ValueError):
    """
    Raised when morphisms or terms are combined with incompatible arities.

    """


class CycleDetected(ValueError):
    """
    Raised when an order would force both :math:`a < b` and :math:`b < a`.

    Parameters
    ----------
        a : hashable
            An event on the offending cycle.
        b : hashable
            Another event on the same cycle (possibly equal to `a` for a self-loop).

    """

    def __init__(self, a, b):
        self.a = a
        self.b = b
        super().__init__(f'cycle detected: closure forces {a} < {b} and {b} < {a}')


def _transitive_closure(matrix):
    # closes the last two axes, so a stack of orders is closed at once
    closed = np.array(matrix, dtype=bool)
    for k in range(closed.shape[-1]):
        closed |= closed[..., :, k, None] & closed[..., None, k, :]
    return closed


def _transitive_reduction(matrix):
    order = np.asarray(matrix, dtype=int)
    return np.asarray(matrix, dtype=bool) & ~((order @ order) > 0)


def _cycle_witness(closed, events):
    index = int(np.flatnonzero(np.diag(closed))[0])
    for other in np.flatnonzero(closed[index] & closed[:, index]):
        if other != index:
            return events[index], events[int(other)]
    return events[index], events[index]


class Poset(object):
    """
    A finite strict partial order.

    Parameters
    ----------
        events : iterable of hashable
            The events. Their iteration order is kept and used for printing.
        lt : iterable of pairs
            The strict order, which must be irreflexive and transitively closed. Use :func:`closure`
            to build a poset from an arbitrary generating set of pairs.

    Example
    -------
        >>> import poalgebra
        >>> chain = poalgebra.closure({('a', 'b'), ('b', 'c')}, ['a', 'b', 'c'])
        >>> chain.is_less('a', 'c')
        True
        >>> chain.hasse()
        [('a', 'b'), ('b', 'c')]

    """

    def __init__(self, events, lt):
        self._events = tuple(events)
        if len(set(self._events)) != len(self._events):
            raise ValueError('poset events must be distinct')
        self._lt = frozenset((a, b) for a, b in lt)
        members = set(self._events)
        for a, b in self._lt:
            if a not in members or b not in members:
                raise ValueError(f'order pair ({a}, {b}) references unknown events')
            if a == b:
                raise CycleDetected(a, b)
        for (a, b), (c, d) in itertools.product(self._lt, repeat=2):
            if b == c and (a, d) not in self._lt:
                raise ValueError(f'order is not transitive: missing ({a}, {d})')

    @property
    def events(self):
        return self._events

    @property
    def lt(self):
        return self._lt

    def is_less(self, a, b):
        return (a, b) in self._lt

    def hasse(self):
        """
        Returns the covering pairs (transitive reduction) sorted by event position.

        """
        position = {e: index for index, e in enumerate(self._events)}
        covers = [
            (a, b) for a, b in self._lt
            if not any((a, c) in self._lt and (c, b) in self._lt for c in self._events)
        ]
        return sorted(covers, key=lambda pair: (position[pair[0]], position[pair[1]]))

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return set(self._events) == set(other._events) and self._lt == other._lt

    def __hash__(self):
        return hash((frozenset(self._events), self._lt))

    def __repr__(self):
        return f'Poset(events={list(self._events)}, hasse={self.hasse()})'


def closure(pairs, events):
    """
    Builds the poset generated by a set of pairs.

    Parameters
    ----------
        pairs : iterable of pairs
            Generating pairs :math:`(a, b)` meaning :math:`a < b`.
        events : iterable of hashable
            The events of the poset.

    Returns
    -------
        poset : :class:`Poset`

    Raises
    ------
        CycleDetected
            If the generated relation is not antisymmetric.

    Example
    -------
        >>> import poalgebra
        >>> poalgebra.closure({(0, 1), (1, 0)}, [0, 1])
        Traceback (most recent call last):
        ...
        poalgebra.posets.CycleDetected: cycle detected: closure forces 0 < 1 and 1 < 0

    """
    events = list(events)
    index = {e: i for i, e in enumerate(events)}
    matrix = np.zeros((len(events), len(events)), dtype=bool)
    for a, b in pairs:
        if a not in index or b not in index:
            raise ValueError(f'order pair ({a}, {b}) references unknown events')
        matrix[index[a], index[b]] = True
    closed = _transitive_closure(matrix)
    if np.diag(closed).any():
        raise CycleDetected(*_cycle_witness(closed, events))
    rows, cols = np.nonzero(closed)
    return Poset(events, [(events[i], events[j]) for i, j in zip(rows, cols)])


@dataclasses.dataclass(frozen=True)
class IsoWitness(object):
    """
    An isomorphism between two poset morphisms of the same arity.

    Attributes
    ----------
        mapping : tuple(int)
            The image ``mapping[e]`` of each event ``e`` of the first morphism. External events
            are always mapped to themselves.

    """
    mapping: tuple

    def __call__(self, event):
        return self.mapping[event]

    def __len__(self):
        return len(self.mapping)


class PosetMorphism(object):
    """
    A morphism of the category of finite posets, in canonical layout.

    Events are numbered ``0..m-1`` (sources), ``m..m+n-1`` (targets) and ``m+n..m+n+k-1``
    (internal events). Use :meth:`from_poset` to build a morphism from arbitrary events and
    injections, or :meth:`from_pairs` from generating pairs in canonical layout.

    Parameters
    ----------
        m : int
            The source arity.
        n : int
            The target arity.
        order : numpy.ndarray
            A square boolean matrix whose entry ``[a, b]`` tells whether :math:`a < b`. It must be
            a strict order in which sources are minimal and targets are maximal.

    Example
    -------
        >>> import poalgebra
        >>> f = poalgebra.PosetMorphism.from_pairs(1, 1, 1, [(0, 2), (2, 1)])
        >>> f.arity, f.k
        ((1, 1), 1)
        >>> f.hasse_pairs()
        [(0, 2), (2, 1)]

    """

    def __init__(self, m, n, order):
        order = np.array(order, dtype=bool)
        if m < 0 or n < 0:
            raise ValueError('arities must be natural numbers')
        if order.ndim != 2 or order.shape[0] != order.shape[1] or order.shape[0] < m + n:
            raise ValueError(f'order matrix of shape {order.shape} does not fit arities ({m}, {n})')
        if np.diag(order).any():
            raise CycleDetected(*_cycle_witness(order, list(range(order.shape[0]))))
        if not np.array_equal(_transitive_closure(order), order):
            raise ValueError('order matrix is not transitively closed')
        if order[:, :m].any():
            raise ValueError('source events must be minimal')
        if order[m:m + n, :].any():
            raise ValueError('target events must be maximal')
        order.flags.writeable = False
        self._m = m
        self._n = n
        self._order = order

    @classmethod
    def from_pairs(cls, m, n, k, pairs):
        """
        Builds a morphism in canonical layout from generating pairs.

        Parameters
        ----------
            m : int
                The source arity.
            n : int
                The target arity.
            k : int
                The number of internal events.
            pairs : iterable of (int, int)
                Generating pairs over events ``0..m+n+k-1``. The transitive closure is taken.

        Raises
        ------
            CycleDetected
                If the generated order is cyclic.

        """
        size = m + n + k
        matrix = np.zeros((size, size), dtype=bool)
        for a, b in pairs:
            if not (0 <= a < size and 0 <= b < size):
                raise ValueError(f'order pair ({a}, {b}) is out of range for {size} events')
            matrix[a, b] = True
        closed = _transitive_closure(matrix)
        if np.diag(closed).any():
            raise CycleDetected(*_cycle_witness(closed, list(range(size))))
        return cls(m, n, closed)

    @classmethod
    def from_poset(cls, poset, src, tgt):
        """
        Builds a morphism from a poset and two injections.

        An event hit by both injections must be isolated. It is split into a source event below a
        fresh target event, which is the form identities take in canonical layout.

        Parameters
        ----------
            poset : :class:`Poset`
                The underlying poset.
            src : sequence
                The source injection, as the list of events ``src[0], ..., src[m-1]``.
            tgt : sequence
                The target injection, as the list of events ``tgt[0], ..., tgt[n-1]``.

        """
        src, tgt = list(src), list(tgt)
        members = set(poset.events)
        for name, images in [('source', src), ('target', tgt)]:
            if len(set(images)) != len(images):
                raise ValueError(f'{name} map is not injective')
            for event in images:
                if event not in members:
                    raise ValueError(f'{name} image {event} is not an event')
        for event in src:
            if any(poset.is_less(other, event) for other in poset.events):
                raise ValueError(f'source event {event} is not minimal')
        for event in tgt:
            if any(poset.is_less(event, other) for other in poset.events):
                raise ValueError(f'target event {event} is not maximal')
        m, n = len(src), len(tgt)
        internal = [e for e in poset.events if e not in set(src) | set(tgt)]
        slots = {}
        for i, event in enumerate(src):
            slots.setdefault(event, []).append(i)
        for j, event in enumerate(tgt):
            slots.setdefault(event, []).append(m + j)
        for i, event in enumerate(internal):
            slots[event] = [m + n + i]
        pairs = [(a_slot, b_slot) for a, b in poset.lt for a_slot in slots[a] for b_slot in slots[b]]
        pairs += [(i, m + tgt.index(event)) for i, event in enumerate(src) if event in set(tgt)]
        return cls.from_pairs(m, n, len(internal), pairs)

    @property
    def m(self):
        return self._m

    @property
    def n(self):
        return self._n

    @property
    def arity(self):
        return (self._m, self._n)

    @property
    def size(self):
        return self._order.shape[0]

    @property
    def k(self):
        return self.size - self._m - self._n

    @property
    def order(self):
        return self._order

    @property
    def src(self):
        return tuple(range(self._m))

    @property
    def tgt(self):
        return tuple(range(self._m, self._m + self._n))

    @property
    def internal(self):
        return tuple(range(self._m + self._n, self.size))

    @property
    def poset(self):
        rows, cols = np.nonzero(self._order)
        return Poset(range(self.size), [(int(a), int(b)) for a, b in zip(rows, cols)])

    def is_internal(self, event):
        return event >= self._m + self._n

    def is_less(self, a, b):
        return bool(self._order[a, b])

    def hasse_pairs(self):
        """
        Returns the covering pairs of the order, sorted.

        """
        rows, cols = np.nonzero(_transitive_reduction(self._order))
        return sorted((int(a), int(b)) for a, b in zip(rows, cols))

    def pairs(self):
        rows, cols = np.nonzero(self._order)
        return sorted((int(a), int(b)) for a, b in zip(rows, cols))

    def relabel(self, permutation):
        """
        Renumbers the internal events.

        Parameters
        ----------
            permutation : sequence of int
                The old internal positions (``0..k-1``) listed in their new order, so that new
                internal event ``i`` is old internal event ``permutation[i]``.

        """
        if sorted(permutation) != list(range(self.k)):
            raise ValueError(f'{list(permutation)} is not a permutation of the internal events')
        base = self._m + self._n
        index = list(range(base)) + [base + p for p in permutation]
        return PosetMorphism(self._m, self._n, self._order[np.ix_(index, index)])

    def __eq__(self, other):
        if not isinstance(other, PosetMorphism):
            return NotImplemented
        return self.arity == other.arity and np.array_equal(self._order, other._order)

    def __hash__(self):
        return hash((self._m, self._n, self.size, self._order.tobytes()))

    def __repr__(self):
        return f'PosetMorphism({self._m}->{self._n}, k={self.k}, hasse={self.hasse_pairs()})'


def identity(n):
    """
    Returns the identity morphism on `n`, where each source lies below the target of the same index.

    Example
    -------
        >>> import poalgebra
        >>> poalgebra.identity(2).hasse_pairs()
        [(0, 2), (1, 3)]

    """
    return PosetMorphism.from_pairs(n, n, 0, [(i, n + i) for i in range(n)])


def symmetry(m, n):
    """
    Returns the symmetry :math:`m + n \\to n + m` exchanging a block of `m` wires with a block of
    `n` wires.

    """
    pairs = [(i, m + n + n + i) for i in range(m)] + [(m + j, m + n + j) for j in range(n)]
    return PosetMorphism.from_pairs(m + n, n + m, 0, pairs)


def glue_orders(f_orders, g_orders, m, n, p):
    """
    Glues stacks of order matrices along an interface of `n` events, closes the generated order and
    deletes the interface. Leading axes of `f_orders` (morphisms :math:`m \\to n`) and `g_orders`
    (morphisms :math:`n \\to p`) broadcast against each other.

    Raises
    ------
        RuntimeError
            If a glued order is cyclic.

    """
    f_size, g_size = f_orders.shape[-1], g_orders.shape[-1]
    f_k, g_k = f_size - m - n, g_size - n - p
    size = f_size + g_size - n
    g_index = np.array(
        [m + j for j in range(n)] + [f_size + i for i in range(p)] + [f_size + p + i for i in range(g_k)],
        dtype=int,
    )
    batch = np.broadcast_shapes(f_orders.shape[:-2], g_orders.shape[:-2])
    matrix = np.zeros(batch + (size, size), dtype=bool)
    matrix[..., :f_size, :f_size] = f_orders
    matrix[..., g_index[:, None], g_index[None, :]] |= g_orders
    closed = _transitive_closure(matrix)
    if np.diagonal(closed, axis1=-2, axis2=-1).any():
        raise RuntimeError('gluing produced a cyclic order')
    keep = np.array(
        list(range(m))
        + [f_size + i for i in range(p)]
        + [m + n + i for i in range(f_k)]
        + [f_size + p + i for i in range(g_k)],
        dtype=int,
    )
    return closed[..., keep[:, None], keep[None, :]]


def compose(f, g):
    """
    Composes two morphisms in diagrammatic order (`f` first, then `g`).

    The posets are glued along the interface, the generated order is closed transitively and the
    interface events are deleted.

    Parameters
    ----------
        f : :class:`PosetMorphism`
            A morphism :math:`m \\to n`.
        g : :class:`PosetMorphism`
            A morphism :math:`n \\to p`.

    Returns
    -------
        composite : :class:`PosetMorphism`
            A morphism :math:`m \\to p`.

    Raises
    ------
        ArityError
            If the target arity of `f` differs from the source arity of `g`.

    """
    if f.n != g.m:
        raise ArityError(f'cannot compose {f.m}->{f.n} with {g.m}->{g.n}')
    return PosetMorphism(f.m, g.n, glue_orders(f.order, g.order, f.m, f.n, g.n))


def tensor(f, g):
    """
    Returns the tensor product (disjoint union) of two morphisms.

    """
    size = f.size + g.size
    f_index = (
        list(range(f.m))
        + [f.m + g.m + j for j in range(f.n)]
        + [f.m + g.m + f.n + g.n + i for i in range(f.k)]
    )
    g_index = (
        [f.m + i for i in range(g.m)]
        + [f.m + g.m + f.n + j for j in range(g.n)]
        + [f.m + g.m + f.n + g.n + f.k + i for i in range(g.k)]
    )
    matrix = np.zeros((size, size), dtype=bool)
    matrix[np.ix_(f_index, f_index)] = f.order
    matrix[np.ix_(g_index, g_index)] = g.order
    return PosetMorphism(f.m + g.m, f.n + g.n, matrix)


def dual(f):
    """
    Returns the dual morphism :math:`n \\to m`, obtained by reversing the order and exchanging
    sources and targets.

    """
    index = list(range(f.m, f.m + f.n)) + list(range(f.m)) + list(f.internal)
    return PosetMorphism(f.n, f.m, f.order.T[np.ix_(index, index)])


def fingerprints(f):
    """
    Returns an isomorphism-invariant fingerprint for each internal event of a morphism.

    The fingerprint of an event collects its numbers of predecessors and successors, together with
    the sources below it and the targets above it, which are pinned by any isomorphism.

    """
    order = f.order
    result = []
    for event in f.internal:
        below = np.flatnonzero(order[:, event])
        above = np.flatnonzero(order[event, :])
        result.append((
            len(below),
            len(above),
            tuple(int(i) for i in below if i < f.m),
            tuple(int(j) - f.m for j in above if f.m <= j < f.m + f.n),
        ))
    return result


def _labelled_graph(f):
    graph = nx.DiGraph()
    for event in f.src:
        graph.add_node(event, label=('s', event))
    for event in f.tgt:
        graph.add_node(event, label=('t', event - f.m))
    for event, fingerprint in zip(f.internal, fingerprints(f)):
        graph.add_node(event, label=('i',) + fingerprint)
    graph.add_edges_from(f.pairs())
    return graph


def iso_eq(f, g):
    """
    Decides whether two morphisms are equal in the category, that is, isomorphic by an order
    isomorphism commuting with sources and targets.

    Parameters
    ----------
        f, g : :class:`PosetMorphism`

    Returns
    -------
        witness : :class:`IsoWitness` or None
            An isomorphism from `f` to `g`, or `None` if there is none.

    Example
    -------
        >>> import poalgebra
        >>> chain = poalgebra.PosetMorphism.from_pairs(0, 0, 2, [(0, 1)])
        >>> antichain = poalgebra.PosetMorphism.from_pairs(0, 0, 2, [])
        >>> poalgebra.iso_eq(chain, antichain) is None
        True
        >>> poalgebra.iso_eq(chain, chain).mapping
        (0, 1)

    """
    if f.arity != g.arity or f.size != g.size or int(f.order.sum()) != int(g.order.sum()):
        return None
    if sorted(fingerprints(f)) != sorted(fingerprints(g)):
        return None
    matcher = DiGraphMatcher(
        _labelled_graph(f), _labelled_graph(g), node_match=lambda a, b: a['label'] == b['label'],
    )
    if not matcher.is_isomorphic():
        return None
    return IsoWitness(tuple(matcher.mapping[event] for event in range(f.size)))


def is_isomorphism(f, g, mapping):
    """
    Checks whether a given event map is an isomorphism from `f` to `g`.

    Parameters
    ----------
        f, g : :class:`PosetMorphism`
        mapping : sequence of int or :class:`IsoWitness`
            The image of each event of `f`.

    """
    mapping = list(mapping.mapping if isinstance(mapping, IsoWitness) else mapping)
    if f.arity != g.arity or f.size != g.size or sorted(mapping) != list(range(g.size)):
        return False
    if mapping[:f.m + f.n] != list(range(f.m + f.n)):
        return False
    return np.array_equal(g.order[np.ix_(mapping, mapping)], f.order)
