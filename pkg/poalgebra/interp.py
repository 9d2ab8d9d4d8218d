"""
.. module:: interp
   :platform: Unix, Windows
   :synopsis: Interpretation of terms as poset morphisms

The interpretation is the monoidal functor fixed by the images of the generators: ``eta``, ``mu``,
``eps``, ``delta`` and ``gamma`` go to relations (morphisms without internal events) and ``sigma``
goes to the chain source < event < target. Since the functor is an isomorphism between the
presented category and the category of posets, two terms are equal in the theory exactly when
their interpretations are isomorphic, which :func:`tp_equal` decides.

"""

import functools

from poalgebra.posets import ArityError, PosetMorphism, compose, identity, iso_eq, tensor
from poalgebra.terms import Gen, Id, Seq, Signature, generators_of


class GeneratorTable(object):
    """
    The images of the generators of a signature.

    Parameters
    ----------
        images : dict(str, :class:`~poalgebra.posets.PosetMorphism`)
            The morphism assigned to each generator name.

    Keyword Args
    ------------
        signature : :class:`~poalgebra.terms.Signature`, default=None
            The signature whose arities the images must match. Defaults to the poalgebra signature.

    """

    def __init__(self, images, signature=None):
        signature = signature or Signature.poalgebra()
        self._images = dict(images)
        for generator in signature:
            if generator.name not in self._images:
                raise ValueError(f'generator {generator.name} has no image')
            image = self._images[generator.name]
            if image.arity != (generator.m, generator.n):
                raise ArityError(
                    f'image of {generator.name} is {image.m}->{image.n}, '
                    f'expected {generator.m}->{generator.n}'
                )

    @classmethod
    def poalgebra(cls):
        return cls({
            'eta': PosetMorphism.from_pairs(0, 1, 0, []),
            'mu': PosetMorphism.from_pairs(2, 1, 0, [(0, 2), (1, 2)]),
            'eps': PosetMorphism.from_pairs(1, 0, 0, []),
            'delta': PosetMorphism.from_pairs(1, 2, 0, [(0, 1), (0, 2)]),
            'sigma': PosetMorphism.from_pairs(1, 1, 1, [(0, 2), (2, 1)]),
            'gamma': PosetMorphism.from_pairs(2, 2, 0, [(0, 3), (1, 2)]),
        })

    def __getitem__(self, name):
        return self._images[name]

    def __contains__(self, name):
        return name in self._images

    def items(self):
        return self._images.items()


GENERATOR_TABLE = GeneratorTable.poalgebra()


@functools.lru_cache(maxsize=8192)
def _interp(term):
    if isinstance(term, Gen):
        return GENERATOR_TABLE[term.name]
    if isinstance(term, Id):
        return identity(term.width)
    if isinstance(term, Seq):
        return compose(_interp(term.left), _interp(term.right))
    return tensor(_interp(term.left), _interp(term.right))


def interp(term, table=None):
    """
    Interprets a term as a poset morphism.

    Parameters
    ----------
        term : :class:`~poalgebra.terms.Term`

    Keyword Args
    ------------
        table : :class:`GeneratorTable`, default=None
            The images of the generators. The poalgebra table is used if `None`.

    Example
    -------
        >>> import poalgebra
        >>> f = poalgebra.interp(poalgebra.parse('sigma'))
        >>> f.arity, f.k, f.hasse_pairs()
        ((1, 1), 1, [(0, 2), (2, 1)])

    """
    if table is None:
        return _interp(term)
    if isinstance(term, Gen):
        return table[term.name]
    if isinstance(term, Id):
        return identity(term.width)
    if isinstance(term, Seq):
        return compose(interp(term.left, table), interp(term.right, table))
    return tensor(interp(term.left, table), interp(term.right, table))


def tp_equal(t1, t2):
    """
    Decides equality of two parallel terms in the presented category.

    Raises
    ------
        ArityError
            If the terms are not parallel.

    Example
    -------
        >>> import poalgebra
        >>> poalgebra.tp_equal(poalgebra.parse('(eta * id1) ; mu'), poalgebra.parse('id1'))
        True
        >>> poalgebra.tp_equal(poalgebra.parse('sigma'), poalgebra.parse('id1'))
        False

    """
    if t1.arity != t2.arity:
        raise ArityError(f'terms are not parallel: {t1.arity} vs {t2.arity}')
    return iso_eq(interp(t1), interp(t2)) is not None


def is_relation_term(term):
    return 'sigma' not in generators_of(term)
