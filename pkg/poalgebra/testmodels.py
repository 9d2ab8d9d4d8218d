"""
.. module:: testmodels
   :platform: Unix, Windows
   :synopsis: Worked examples of the theory, used as golden test data

Event layout follows :class:`~poalgebra.posets.PosetMorphism`: sources first, then targets, then
internal events.

"""

from poalgebra.factorization import Factorization
from poalgebra.posets import PosetMorphism
from poalgebra.relations import Relation


def two_to_three():
    """
    A morphism :math:`2 \\to 3` with three internal events `c`, `d` and `e`, where
    :math:`s_0 < c < t_0`, :math:`s_0 < d` and :math:`e < t_2`, while :math:`s_1` and :math:`t_1`
    are isolated.

    """
    return PosetMorphism.from_pairs(2, 3, 3, [(0, 5), (5, 2), (0, 6), (7, 4)])


def three_to_two():
    """
    A morphism :math:`3 \\to 2` with :math:`s_0 < p < t_0`, :math:`s_1 < t_0` and
    :math:`s_2 < q < t_1`.

    """
    return PosetMorphism.from_pairs(3, 2, 2, [(0, 5), (5, 3), (1, 3), (2, 6), (6, 4)])


def glued():
    """
    The composite of :func:`three_to_two` followed by :func:`two_to_three`. Its internal events
    are `p`, `q`, `c`, `d` and `e`, in this order.

    """
    s0, s1, s2, t0, t2 = 0, 1, 2, 3, 5
    p, q, c, d, e = 6, 7, 8, 9, 10
    pairs = [(s0, p), (p, c), (p, d), (s1, c), (s1, d), (c, t0), (s2, q), (e, t2)]
    return PosetMorphism.from_pairs(3, 3, 5, pairs)


def merge_with_event():
    """
    The morphism :math:`2 \\to 1` with :math:`s_0 < x < t_0` and :math:`s_1 < t_0`, whose tensor
    with the interpretation of :math:`\\sigma` is :func:`three_to_two`.

    """
    return PosetMorphism.from_pairs(2, 1, 1, [(0, 3), (3, 2), (1, 2)])


def fan_relation():
    """
    The relation :math:`4 \\to 3` relating the input 0 to every output and the input 2 to the
    output 0, together with a term representing it.

    """
    relation = Relation(4, 3, {(0, 0), (0, 1), (0, 2), (2, 0)})
    text = '(delta * eps * id1 * eps) ; (delta * gamma) ; (id1 * gamma * id1) ; (mu * id2)'
    return relation, text


def block_three():
    """
    The block :math:`X^3_{\\{0, 2\\}}`, given by its Hasse diagram.

    """
    return PosetMorphism.from_pairs(3, 4, 1, [(0, 3), (1, 4), (2, 5), (0, 7), (2, 7), (7, 6)])


class DiamondModel(object):
    """
    A morphism :math:`1 \\to 2` with internal events `a`, `b`, `c` and `d`, where
    :math:`s_0 < a < b < d < t_0`, :math:`b < t_1` and :math:`a < c < t_1`, together with its
    factorizations along the linearizations `abcd` and `acbd`.

    Attributes
    ----------
        morphism : :class:`~poalgebra.posets.PosetMorphism`
        first : tuple(int)
            The linearization `abcd`.
        second : tuple(int)
            The linearization `acbd`, obtained from `first` by exchanging `b` and `c`.
        first_factorization : :class:`~poalgebra.factorization.Factorization`
        second_factorization : :class:`~poalgebra.factorization.Factorization`

    """

    def __init__(self):
        s0, t0, t1 = 0, 1, 2
        a, b, c, d = 3, 4, 5, 6
        pairs = [(s0, a), (a, b), (b, d), (d, t0), (b, t1), (a, c), (c, t1)]
        self.morphism = PosetMorphism.from_pairs(1, 2, 4, pairs)
        self.first = (a, b, c, d)
        self.second = (a, c, b, d)
        self.first_factorization = Factorization(
            1, 4, 2,
            [{0}, {0, 1}, {0, 1}, {0, 1, 2}],
            Relation(5, 2, {(0, 0), (1, 0), (2, 0), (4, 0), (0, 1), (1, 1), (2, 1), (3, 1)}),
        )
        self.second_factorization = Factorization(
            1, 4, 2,
            [{0}, {0, 1}, {0, 1}, {0, 1, 3}],
            Relation(5, 2, {(0, 0), (1, 0), (3, 0), (4, 0), (0, 1), (1, 1), (3, 1), (2, 1)}),
        )


def open_chain():
    """
    A factorization :math:`0 \\to 1` with two chained blocks in which only the second block lies
    below the target. It is not transitive: its closure relates the first block to the target too.

    """
    return Factorization(0, 2, 1, [set(), {0}], Relation(2, 1, {(1, 0)}))
