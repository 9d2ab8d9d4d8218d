"""
.. module:: relations
   :platform: Unix, Windows
   :synopsis: The category of finite relations and its embedding into poset morphisms

"""

import dataclasses
import itertools

import numpy as np

from poalgebra.posets import ArityError, PosetMorphism


@dataclasses.dataclass(frozen=True)
class Relation(object):
    """
    A relation :math:`R \\subseteq [m] \\times [n]`, seen as a morphism :math:`m \\to n`.

    Parameters
    ----------
        m : int
            The source arity.
        n : int
            The target arity.
        pairs : iterable of (int, int)
            The related index pairs. They are stored sorted.

    Example
    -------
        >>> import poalgebra
        >>> R = poalgebra.Relation(4, 3, {(0, 0), (0, 1), (0, 2), (2, 0)})
        >>> R.image(0), R.preimage(0)
        ((0, 1, 2), (0, 2))

    """
    m: int
    n: int
    pairs: tuple = ()

    def __post_init__(self):
        pairs = tuple(sorted({(int(i), int(j)) for i, j in self.pairs}))
        for i, j in pairs:
            if not (0 <= i < self.m and 0 <= j < self.n):
                raise ValueError(f'pair ({i}, {j}) is out of range for a relation {self.m}->{self.n}')
        object.__setattr__(self, 'pairs', pairs)

    @classmethod
    def from_matrix(cls, matrix):
        matrix = np.asarray(matrix, dtype=bool)
        rows, cols = np.nonzero(matrix)
        return cls(matrix.shape[0], matrix.shape[1], zip(rows.tolist(), cols.tolist()))

    @property
    def arity(self):
        return (self.m, self.n)

    def matrix(self):
        result = np.zeros((self.m, self.n), dtype=bool)
        for i, j in self.pairs:
            result[i, j] = True
        return result

    def image(self, i):
        return tuple(j for a, j in self.pairs if a == i)

    def preimage(self, j):
        return tuple(i for i, b in self.pairs if b == j)

    def __contains__(self, pair):
        return tuple(pair) in self.pairs

    def __len__(self):
        return len(self.pairs)


def rel_id(n):
    """
    Returns the identity relation on `n`.

    """
    return Relation(n, n, [(i, i) for i in range(n)])


def bool_product(r_matrices, s_matrices):
    """
    Returns the boolean product of two stacks of relation matrices. The product is taken over the
    last two axes and the leading axes broadcast.

    """
    return (np.asarray(r_matrices, dtype=int) @ np.asarray(s_matrices, dtype=int)) > 0


def rel_compose(r, s):
    """
    Composes two relations in diagrammatic order: :math:`(i, l)` is related when some :math:`j`
    has :math:`(i, j) \\in r` and :math:`(j, l) \\in s`.

    Raises
    ------
        ArityError
            If the target arity of `r` differs from the source arity of `s`.

    Example
    -------
        >>> import poalgebra
        >>> r = poalgebra.Relation(1, 2, {(0, 1)})
        >>> s = poalgebra.Relation(2, 1, {(1, 0)})
        >>> poalgebra.rel_compose(r, s).pairs
        ((0, 0),)

    """
    if r.n != s.m:
        raise ArityError(f'cannot compose relations {r.m}->{r.n} and {s.m}->{s.n}')
    return Relation.from_matrix(bool_product(r.matrix(), s.matrix()))


def rel_tensor(r, s):
    """
    Returns the block-diagonal tensor product of two relations.

    """
    shifted = [(r.m + i, r.n + j) for i, j in s.pairs]
    return Relation(r.m + s.m, r.n + s.n, list(r.pairs) + shifted)


def transpose(r):
    return Relation(r.n, r.m, [(j, i) for i, j in r.pairs])


def all_relations(m, n):
    """
    Yields the :math:`2^{mn}` relations :math:`m \\to n` in a fixed order.

    """
    cells = list(itertools.product(range(m), range(n)))
    for mask in range(1 << len(cells)):
        yield Relation(m, n, [cell for bit, cell in enumerate(cells) if mask >> bit & 1])


def rel_to_poset(r):
    """
    Embeds a relation as a poset morphism without internal events, with source :math:`i` below
    target :math:`j` exactly when :math:`(i, j) \\in r`.

    """
    return PosetMorphism.from_pairs(r.m, r.n, 0, [(i, r.m + j) for i, j in r.pairs])


def poset_to_rel(f):
    """
    Recovers the relation of a poset morphism lying in the image of :func:`rel_to_poset`.

    Returns
    -------
        relation : :class:`Relation` or None
            `None` if `f` has internal events.

    """
    if f.k:
        return None
    m, n = f.m, f.n
    block = f.order[:m, m:m + n]
    if f.order.sum() != block.sum():
        return None
    return Relation(m, n, [(int(i), int(j)) for i, j in zip(*np.nonzero(block))])
