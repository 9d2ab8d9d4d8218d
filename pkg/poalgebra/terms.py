"""
.. module:: terms
   :platform: Unix, Windows
   :synopsis: Terms of the free monoidal category over the poalgebra signature

Terms are built from generators, identities, sequential composition :class:`Seq` (diagrammatic
order: left first) and parallel composition :class:`Par`. The textual form is

.. code-block:: text

    term := seq ;  seq := par (";" par)* ;  par := atom ("*" atom)*
    atom := "eta" | "mu" | "eps" | "delta" | "sigma" | "gamma" | "id" NAT | "(" seq ")"

Every term decomposes into a list of :class:`Slice` objects, each one a single generator whiskered
by identities. Slice lists related by the interchange law are brought to a common
:class:`NormalForm`, which is how terms are compared modulo the axioms of monoidal categories.

"""

import dataclasses
import functools
import itertools
import re

from poalgebra.posets import ArityError


class ParseError(ValueError):
    """
    Raised on malformed term text.

    Parameters
    ----------
        message : str
            The description of the problem.
        position : int
            The character offset where the problem was detected.

    """

    def __init__(self, message, position):
        self.position = position
        super().__init__(f'{message} at position {position}')


@dataclasses.dataclass(frozen=True)
class Generator(object):
    """
    A morphism generator with its source and target arities.

    """
    name: str
    m: int
    n: int


class Signature(object):
    """
    A monoidal signature with the single object generator `1`.

    Parameters
    ----------
        generators : iterable of :class:`Generator`
            The morphism generators. Names must be unique.

    Example
    -------
        >>> import poalgebra
        >>> signature = poalgebra.Signature.poalgebra()
        >>> signature['sigma']
        Generator(name='sigma', m=1, n=1)
        >>> 'sigma' in poalgebra.Signature.bialgebra()
        False

    """

    def __init__(self, generators):
        self._generators = {}
        for generator in generators:
            if generator.name in self._generators:
                raise ValueError(f'duplicate generator name {generator.name}')
            if generator.m < 0 or generator.n < 0:
                raise ValueError(f'generator {generator.name} has a negative arity')
            self._generators[generator.name] = generator

    @classmethod
    def poalgebra(cls):
        return cls(POALGEBRA_GENERATORS)

    @classmethod
    def bialgebra(cls):
        return cls(g for g in POALGEBRA_GENERATORS if g.name != 'sigma')

    def __getitem__(self, name):
        return self._generators[name]

    def __contains__(self, name):
        return name in self._generators

    def __iter__(self):
        return iter(self._generators.values())

    def __len__(self):
        return len(self._generators)

    @property
    def names(self):
        return tuple(self._generators)


POALGEBRA_GENERATORS = (
    Generator('eta', 0, 1),
    Generator('mu', 2, 1),
    Generator('eps', 1, 0),
    Generator('delta', 1, 2),
    Generator('sigma', 1, 1),
    Generator('gamma', 2, 2),
)

_ARITIES = {g.name: (g.m, g.n) for g in POALGEBRA_GENERATORS}


class Term(object):
    """
    Base class of the term constructors :class:`Gen`, :class:`Id`, :class:`Seq` and :class:`Par`.

    """

    @property
    def arity(self):
        return (self.m, self.n)

    def __str__(self):
        return format_term(self)


@dataclasses.dataclass(frozen=True)
class Gen(Term):
    name: str
    m: int = dataclasses.field(default=None, compare=False)
    n: int = dataclasses.field(default=None, compare=False)

    def __post_init__(self):
        if self.name not in _ARITIES:
            raise ValueError(f'unknown generator {self.name}')
        m, n = _ARITIES[self.name]
        object.__setattr__(self, 'm', m)
        object.__setattr__(self, 'n', n)


@dataclasses.dataclass(frozen=True)
class Id(Term):
    width: int

    def __post_init__(self):
        if self.width < 0:
            raise ValueError('identity width must be a natural number')

    @property
    def m(self):
        return self.width

    @property
    def n(self):
        return self.width


@dataclasses.dataclass(frozen=True)
class Seq(Term):
    left: Term
    right: Term

    def __post_init__(self):
        if self.left.n != self.right.m:
            raise ArityError(
                f'cannot compose {format_term(self.left)} : {self.left.m}->{self.left.n} '
                f'with {format_term(self.right)} : {self.right.m}->{self.right.n}'
            )

    @property
    def m(self):
        return self.left.m

    @property
    def n(self):
        return self.right.n


@dataclasses.dataclass(frozen=True)
class Par(Term):
    left: Term
    right: Term

    @property
    def m(self):
        return self.left.m + self.right.m

    @property
    def n(self):
        return self.left.n + self.right.n


def arity(term):
    return term.arity


def generator_count(term):
    if isinstance(term, Gen):
        return 1
    if isinstance(term, Id):
        return 0
    return generator_count(term.left) + generator_count(term.right)


def generators_of(term):
    """
    Returns the generator names occurring in a term, from left to right.

    """
    if isinstance(term, Gen):
        return [term.name]
    if isinstance(term, Id):
        return []
    return generators_of(term.left) + generators_of(term.right)


def seq_all(terms):
    """
    Composes a non-empty list of terms from left to right, dropping identities.

    """
    terms = list(terms)
    if not terms:
        raise ValueError('seq_all needs at least one term')
    kept = [t for t in terms if not isinstance(t, Id)]
    if not kept:
        return Id(terms[0].m)
    result = kept[0]
    for term in kept[1:]:
        result = Seq(result, term)
    if result.m != terms[0].m or result.n != terms[-1].n:
        raise ArityError('sequence endpoints do not match')
    return result


def tensor_all(terms):
    """
    Tensors a list of terms from left to right, merging adjacent identities.

    """
    merged = []
    for term in terms:
        if isinstance(term, Id) and term.width == 0:
            continue
        if isinstance(term, Id) and merged and isinstance(merged[-1], Id):
            merged[-1] = Id(merged[-1].width + term.width)
        else:
            merged.append(term)
    if not merged:
        return Id(0)
    result = merged[0]
    for term in merged[1:]:
        result = Par(result, term)
    return result


def whisker(a, term, b):
    """
    Returns the term :math:`\\mathrm{id}_a \\otimes t \\otimes \\mathrm{id}_b`.

    """
    return tensor_all([Id(a), term, Id(b)])


def gamma(m, n):
    """
    Returns the symmetry term :math:`\\gamma_{m,n} : m + n \\to n + m` expanded from the generator
    :math:`\\gamma = \\gamma_{1,1}` by the inductive clauses

    .. math::
        \\gamma_{0,n} = \\mathrm{id}_n, \\quad \\gamma_{1,0} = \\mathrm{id}_1, \\quad
        \\gamma_{1,n+1} = (\\mathrm{id}_1 \\otimes \\gamma_{1,n}) \\circ
                          (\\gamma \\otimes \\mathrm{id}_n), \\quad
        \\gamma_{m+1,n} = (\\gamma_{m,n} \\otimes \\mathrm{id}_1) \\circ
                          (\\mathrm{id}_m \\otimes \\gamma_{1,n}).

    .. note::
        The last clause is sometimes printed with :math:`\\otimes \\mathrm{id}_n` in place of
        :math:`\\otimes \\mathrm{id}_1`, which does not type-check; the arity-correct reading is
        used here.

    Example
    -------
        >>> import poalgebra
        >>> print(poalgebra.gamma(1, 2))
        (gamma * id1) ; (id1 * gamma)
        >>> poalgebra.gamma(2, 3).arity
        (5, 5)

    """
    if m < 0 or n < 0:
        raise ValueError('symmetry arities must be natural numbers')
    if m == 0 or n == 0:
        return Id(m + n)
    if m == 1:
        if n == 1:
            return Gen('gamma')
        return Seq(whisker(0, Gen('gamma'), n - 1), whisker(1, gamma(1, n - 1), 0))
    return seq_all([whisker(m - 1, gamma(1, n), 0), whisker(0, gamma(m - 1, n), 1)])


# Parsing and printing

_TOKEN = re.compile(r'(?:(id)(\d+)|([a-z]+)|([;*()]))')


def _tokenize(text):
    tokens = []
    position = 0
    while True:
        while position < len(text) and text[position].isspace():
            position += 1
        if position == len(text):
            break
        match = _TOKEN.match(text, position)
        if match is None or match.end() == position:
            raise ParseError(f'unexpected character {text[position]!r}', position)
        if match.group(1):
            tokens.append(('id', int(match.group(2)), position))
        elif match.group(3):
            tokens.append(('name', match.group(3), position))
        else:
            tokens.append((match.group(4), None, position))
        position = match.end()
    tokens.append(('end', None, len(text)))
    return tokens


class _Parser(object):

    def __init__(self, text, signature):
        self._tokens = _tokenize(text)
        self._index = 0
        self._signature = signature

    def _peek(self):
        return self._tokens[self._index]

    def _next(self):
        token = self._tokens[self._index]
        self._index += 1
        return token

    def parse(self):
        term = self._seq()
        kind, _, position = self._peek()
        if kind != 'end':
            raise ParseError(f'unexpected token {kind!r}', position)
        return term

    def _seq(self):
        term = self._par()
        while self._peek()[0] == ';':
            _, _, position = self._next()
            right = self._par()
            try:
                term = Seq(term, right)
            except ArityError as error:
                raise ArityError(f'{error} at position {position}') from None
        return term

    def _par(self):
        term = self._atom()
        while self._peek()[0] == '*':
            self._next()
            term = Par(term, self._atom())
        return term

    def _atom(self):
        kind, value, position = self._next()
        if kind == 'id':
            return Id(value)
        if kind == 'name':
            if value not in self._signature:
                raise ParseError(f'unknown generator {value!r}', position)
            return Gen(value)
        if kind == '(':
            term = self._seq()
            closing, _, where = self._next()
            if closing != ')':
                raise ParseError('expected ")"', where)
            return term
        raise ParseError(f'unexpected token {kind!r}', position)


def parse(text, signature=None):
    """
    Parses a term.

    Parameters
    ----------
        text : str
            The term text. Both ``;`` and ``*`` are left-associative and ``*`` binds tighter.

    Keyword Args
    ------------
        signature : :class:`Signature`, default=None
            The allowed generators. The full poalgebra signature is used if `None`.

    Raises
    ------
        ParseError
            On a syntax error.
        ArityError
            If the two sides of a ``;`` do not have matching arities.

    Example
    -------
        >>> import poalgebra
        >>> poalgebra.parse('(eta * id1) ; mu').arity
        (1, 1)
        >>> poalgebra.parse('mu ; mu')
        Traceback (most recent call last):
        ...
        poalgebra.posets.ArityError: cannot compose mu : 2->1 with mu : 2->1 at position 3

    """
    return _Parser(text, signature or Signature.poalgebra()).parse()


def format_term(term):
    """
    Prints a term with the fewest parentheses that parse back to the same structure.

    Example
    -------
        >>> import poalgebra
        >>> poalgebra.format_term(poalgebra.parse('(eta*id1);mu'))
        '(eta * id1) ; mu'

    """
    if isinstance(term, Gen):
        return term.name
    if isinstance(term, Id):
        return f'id{term.width}'
    left = format_term(term.left)
    right = format_term(term.right)
    if isinstance(term, Par):
        if isinstance(term.left, Seq):
            left = f'({left})'
        if isinstance(term.right, (Seq, Par)):
            right = f'({right})'
        return f'{left} * {right}'
    if isinstance(term.left, Par):
        left = f'({left})'
    if isinstance(term.right, (Seq, Par)):
        right = f'({right})'
    return f'{left} ; {right}'


# Slices and the monoidal normal form

@dataclasses.dataclass(frozen=True)
class Slice(object):
    """
    A single generator whiskered by identities: :math:`\\mathrm{id}_a \\otimes g \\otimes
    \\mathrm{id}_b`.

    """
    a: int
    generator: str
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError(f'negative padding in slice ({self.a}, {self.generator}, {self.b})')

    @property
    def dom(self):
        return _ARITIES[self.generator][0]

    @property
    def cod(self):
        return _ARITIES[self.generator][1]

    @property
    def width_in(self):
        return self.a + self.dom + self.b

    @property
    def width_out(self):
        return self.a + self.cod + self.b

    def shifted(self, a, b):
        return Slice(self.a + a, self.generator, self.b + b)

    def term(self):
        return whisker(self.a, Gen(self.generator), self.b)


def slices(term):
    """
    Decomposes a term into a sequence of slices.

    Example
    -------
        >>> import poalgebra
        >>> poalgebra.slices(poalgebra.parse('mu * eta'))
        [Slice(a=0, generator='mu', b=0), Slice(a=1, generator='eta', b=0)]

    """
    if isinstance(term, Gen):
        return [Slice(0, term.name, 0)]
    if isinstance(term, Id):
        return []
    if isinstance(term, Seq):
        return slices(term.left) + slices(term.right)
    left = [s.shifted(0, term.right.m) for s in slices(term.left)]
    right = [s.shifted(term.left.n, 0) for s in slices(term.right)]
    return left + right


def from_slices(m, sequence):
    """
    Recomposes a sequence of slices acting on `m` wires into a term.

    Raises
    ------
        ArityError
            If a slice does not fit the current number of wires.

    """
    width = m
    terms = [Id(m)]
    for piece in sequence:
        if piece.width_in != width:
            raise ArityError(f'slice {piece} does not act on {width} wires')
        terms.append(piece.term())
        width = piece.width_out
    return seq_all(terms)


def commute(first, second):
    """
    Applies the interchange law to two consecutive slices.

    Returns
    -------
        alternatives : list of (Slice, Slice)
            The interchange-equal ways of applying `second` before `first`, preferred one first.
            The list is empty if the two slices do not commute, and has two entries when a
            zero-input slice meets the end point of a zero-output slice, which may be placed on
            either side.

    """
    lo, hi = first.a, first.a + first.cod
    width = first.width_in
    result = []
    if second.a + second.dom <= lo:
        early = Slice(second.a, second.generator, width - second.a - second.dom)
        late = Slice(first.a - second.dom + second.cod, first.generator, first.b)
        result.append((early, late))
    if second.a >= hi:
        early = Slice(second.a - first.cod + first.dom, second.generator, second.b)
        late = Slice(first.a, first.generator, first.b - second.dom + second.cod)
        result.append((early, late))
    return result


@dataclasses.dataclass(frozen=True)
class NormalForm(object):
    """
    The layered normal form of a term modulo the axioms of strict monoidal categories.

    The slices are first put in the least order, comparing them by offset and then by generator
    name, among all orders equal modulo interchange. Each slice is then pushed into the earliest
    layer it can reach by the interchange law, so equal terms have equal normal forms. A layer is a
    left-to-right tuple of ``(u, generator)`` items, where `u` is the first input wire of the item
    (or the gap it sits in, for generators without inputs).

    """
    m: int
    n: int
    layers: tuple

    def slices(self):
        result = []
        width = self.m
        for layer in self.layers:
            shift = 0
            for u, name in layer:
                dom, cod = _ARITIES[name]
                a = u + shift
                result.append(Slice(a, name, width - a - dom))
                width += cod - dom
                shift += cod - dom
        return result

    def term(self):
        """
        Returns the canonical term: the left-nested sequence of the layers, each layer the tensor
        of its generators and the identities between them.

        """
        terms = [Id(self.m)]
        width = self.m
        for layer in self.layers:
            parts, cursor = [], 0
            for u, name in layer:
                parts += [Id(u - cursor), Gen(name)]
                cursor = u + _ARITIES[name][0]
            parts.append(Id(width - cursor))
            terms.append(tensor_all(parts))
            width += sum(_ARITIES[name][1] - _ARITIES[name][0] for _, name in layer)
        return seq_all(terms)

    @property
    def generator_count(self):
        return sum(len(layer) for layer in self.layers)


def _pass_through(layer, a, dom):
    shift = 0
    for index, (u, name) in enumerate(layer):
        item_dom, item_cod = _ARITIES[name]
        start = u + shift
        if a + dom <= start:
            return index, a - shift
        if a < start + item_cod:
            return None
        shift += item_cod - item_dom
    return len(layer), a - shift


def _tidy(layer):
    items = list(layer)
    changed = True
    while changed:
        changed = False
        for index in range(1, len(items)):
            u, name = items[index]
            before_u, before_name = items[index - 1]
            before_dom, before_cod = _ARITIES[before_name]
            if _ARITIES[name][0] == 0 and before_cod == 0 and u == before_u + before_dom:
                items[index - 1], items[index] = (before_u, name), (before_u, before_name)
                changed = True
    return tuple(items)


def _stack(m, sequence):
    layers = []
    width = m
    for piece in sequence:
        if piece.width_in != width:
            raise ArityError(f'slice {piece} does not act on {width} wires')
        width = piece.width_out
        crossed = []
        a = piece.a
        for depth in range(len(layers) - 1, -1, -1):
            placement = _pass_through(layers[depth], a, piece.dom)
            if placement is None:
                break
            index, a = placement
            crossed.append((depth, index, a))
        if not crossed:
            layers.append([(piece.a, piece.generator)])
            continue
        depth, index, u = crossed.pop()
        layers[depth].insert(index, (u, piece.generator))
        # items right of the piece in the crossed layers now see cod instead of dom wires
        growth = piece.cod - piece.dom
        for depth, index, _ in crossed:
            layers[depth][index:] = [(u + growth, name) for u, name in layers[depth][index:]]
    return NormalForm(m, width, tuple(_tidy(layer) for layer in layers))


@dataclasses.dataclass(frozen=True)
class _Occurrence(object):
    generator: str
    inputs: tuple
    outputs: tuple
    host: object
    inner: tuple


def _join(spans):
    spans = [span for span in spans if span is not None]
    if not spans:
        return None
    return min(lo for lo, _ in spans), max(hi for _, hi in spans)


def _replay(m, sequence):
    """
    Replays a slice sequence on numbered wires.

    Faces are the connected regions between wires. The two sides of a wire that starts or ends
    inside the diagram lie in the same face, and the gaps opened between the outputs of a generator
    are new faces. A generator without inputs records the face of the gap it starts in as its
    `host`, and every generator records the faces born between its outputs as `inner`.

    Returns
    -------
        occurrences : tuple(_Occurrence)
        gaps : tuple(int)
            The faces of the `m + 1` gaps between the input wires.
        outputs : tuple(int)
            The wires left at the end, in order.

    Raises
    ------
        ArityError
            If a slice does not fit the current number of wires.

    """
    parent = list(range(m + 1))

    def find(face):
        while parent[face] != face:
            parent[face] = parent[parent[face]]
            face = parent[face]
        return face

    def fresh():
        parent.append(len(parent))
        return len(parent) - 1

    frame, gaps = list(range(m)), list(range(m + 1))
    wires = m
    replayed = []
    for piece in sequence:
        if piece.width_in != len(frame):
            raise ArityError(f'slice {piece} does not act on {len(frame)} wires')
        a, dom, cod = piece.a, piece.dom, piece.cod
        outputs = tuple(range(wires, wires + cod))
        wires += cod
        inner = [fresh() for _ in range(cod - 1)]
        inputs = tuple(frame[a:a + dom])
        host = gaps[a] if dom == 0 else None
        if dom == 0:
            if cod:
                gaps[a:a + 1] = [host] + inner + [host]
        elif cod:
            gaps[a + 1:a + dom] = inner
        else:
            parent[find(gaps[a + dom])] = find(gaps[a])
            del gaps[a + 1:a + dom + 1]
        frame[a:a + dom] = outputs
        replayed.append((piece.generator, inputs, outputs, host, inner))
    occurrences = tuple(
        _Occurrence(name, inputs, outputs, None if host is None else find(host), tuple(map(find, inner)))
        for name, inputs, outputs, host, inner in replayed
    )
    return occurrences, tuple(find(face) for face in range(m + 1)), tuple(frame)


def _spans(m, occurrences, outputs):
    # the first and last input (below) and output (above) each wire is connected to
    below = {w: (w, w) for w in range(m)}
    for occurrence in occurrences:
        span = _join(below[w] for w in occurrence.inputs)
        below.update((w, span) for w in occurrence.outputs)
    above = {w: (j, j) for j, w in enumerate(outputs)}
    for occurrence in reversed(occurrences):
        span = _join(above[w] for w in occurrence.outputs)
        above.update((w, span) for w in occurrence.inputs)
    return below, above


def _crossed(left, right, spans):
    # wires cannot cross, so `right` must not reach only boundary wires left of those `left` reaches
    for span in spans:
        first, second = span[left], span[right]
        if first is not None and second is not None and second[1] < first[0]:
            return True
    return False


@functools.lru_cache(maxsize=1 << 14)
def _least_order(m, sequence):
    """
    Returns the least slice sequence, comparing slices by offset, then generator name, then right
    padding, among all sequences equal to `sequence` modulo interchange.

    The search runs over cuts of the diagram: a generator with inputs can come next when its input
    wires are adjacent in the cut, and a generator without inputs can start in any gap of the face
    it lives in.

    """
    occurrences, start, target = _replay(m, sequence)
    spans = _spans(m, occurrences, target)
    everything = (1 << len(occurrences)) - 1
    memo = {}

    def options(done, frame, gaps):
        for k, occurrence in enumerate(occurrences):
            if done >> k & 1:
                continue
            dom = len(occurrence.inputs)
            if dom:
                if occurrence.inputs[0] not in frame:
                    continue
                a = frame.index(occurrence.inputs[0])
                if frame[a:a + dom] != occurrence.inputs:
                    continue
                starts = (a,)
            else:
                starts = tuple(g for g, face in enumerate(gaps) if face == occurrence.host)
            for a in starts:
                yield (a, occurrence.generator, len(frame) - a - dom), k

    def advance(done, frame, gaps, k, a):
        occurrence = occurrences[k]
        dom, cod = len(occurrence.inputs), len(occurrence.outputs)
        if dom == 0:
            if cod:
                gaps = gaps[:a + 1] + occurrence.inner + gaps[a:]
        elif cod:
            gaps = gaps[:a + 1] + occurrence.inner + gaps[a + dom:]
        else:
            gaps = gaps[:a + 1] + gaps[a + dom + 1:]
        frame = frame[:a] + occurrence.outputs + frame[a + dom:]
        fresh = range(a, a + cod)
        for i, j in itertools.combinations(range(len(frame)), 2):
            if (i in fresh or j in fresh) and _crossed(frame[i], frame[j], spans):
                return None
        return done | 1 << k, frame, gaps

    def least(done, frame, gaps):
        if done == everything:
            return () if frame == target else None
        key = (done, frame, gaps)
        if key not in memo:
            memo[key] = None
            for value, group in itertools.groupby(sorted(options(done, frame, gaps)), key=lambda o: o[0]):
                tails = []
                for _, k in group:
                    state = advance(done, frame, gaps, k, value[0])
                    tail = None if state is None else least(*state)
                    if tail is not None:
                        tails.append(tail)
                if tails:
                    memo[key] = (value,) + min(tails)
                    break
        return memo[key]

    found = least(0, tuple(range(m)), start)
    if found is None:
        raise RuntimeError(f'no arrangement of {len(sequence)} slices on {m} wires')
    return tuple(Slice(*value) for value in found)


def layered(m, sequence):
    """
    Builds the :class:`NormalForm` of a slice sequence acting on `m` wires.

    Raises
    ------
        ArityError
            If a slice does not fit the current number of wires.

    """
    return _stack(m, _least_order(m, tuple(sequence)))


def normal_form(term):
    """
    Returns the :class:`NormalForm` of a term.

    Example
    -------
        >>> import poalgebra
        >>> a = poalgebra.parse('(mu * id1) ; (id2 * eta)')
        >>> b = poalgebra.parse('(id3 * eta) ; (mu * id2)')
        >>> poalgebra.normal_form(a) == poalgebra.normal_form(b)
        True

    """
    return layered(term.m, slices(term))


def normalize(term):
    """
    Returns the canonical representative of a term modulo the monoidal axioms.

    Example
    -------
        >>> import poalgebra
        >>> print(poalgebra.normalize(poalgebra.parse('(id2 * eta) ; (mu * id1)')))
        mu * eta

    """
    return normal_form(term).term()


def monoidal_equal(t1, t2):
    """
    Tells whether two terms are equal modulo the axioms of strict monoidal categories.

    """
    return t1.arity == t2.arity and normal_form(t1) == normal_form(t2)


def structurally_equal(t1, t2):
    """
    Tells whether two terms are the same tree. Unlike :func:`monoidal_equal`, no axiom is applied.

    Example
    -------
        >>> import poalgebra
        >>> a, b = poalgebra.parse('mu * eta'), poalgebra.parse('(id2 * eta) ; (mu * id1)')
        >>> poalgebra.structurally_equal(a, b), poalgebra.monoidal_equal(a, b)
        (False, True)

    """
    return t1 == t2
