"""
.. module:: io
   :platform: Unix, Windows
   :synopsis: Text formats, DOT export and YAML serialization

Three line-oriented formats are supported, where ``#`` starts a comment:

.. code-block:: text

    P <m> <n> <k>           # poset morphism, events named s0.., t0.., i0..
    < <a> <b>               # generating order pairs (the closure is taken)

    R <m> <n>               # relation
    <i> <j>                 # related pairs

    F <m> <k> <n>           # factorization
    I <j> <elements...>     # the subset I_j
    R <i> <j>               # pairs of the closing relation

"""

import re

import graphviz
import yaml

from poalgebra.factorization import Factorization
from poalgebra.posets import PosetMorphism
from poalgebra.relations import Relation


class FormatError(ValueError):
    """
    Raised by the loaders on malformed input.

    Parameters
    ----------
        message : str
        line : int, default=None
            The offending line number, counted from 1.

    """

    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message if line is None else f'line {line}: {message}')


class Tee(object):
    """
    Copies report text to several outputs.

    Outputs given by file name are opened on construction and closed by :meth:`close` or on leaving
    a ``with`` block. Streams passed in are flushed but left open.

    Parameters
    ----------
        *outputs : str or text stream
            File names or open text streams.

    Example
    -------
        >>> import io
        >>> import poalgebra
        >>> buffer = io.StringIO()
        >>> with poalgebra.Tee(buffer) as tee:
        ...     print('SUITE golden pass=13 fail=0 inconclusive=0', file=tee)
        >>> buffer.getvalue()
        'SUITE golden pass=13 fail=0 inconclusive=0\\n'

    """

    def __init__(self, *outputs):
        self._streams, self._owned = [], []
        try:
            for output in outputs:
                if isinstance(output, str):
                    output = open(output, 'w')
                    self._owned.append(output)
                self._streams.append(output)
        except OSError:
            self.close()
            raise

    def __enter__(self):
        return self

    def __exit__(self, *exc_info):
        self.close()

    def write(self, text):
        for stream in self._streams:
            stream.write(text)
        return len(text)

    def flush(self):
        for stream in self._streams:
            stream.flush()

    def close(self):
        self.flush()
        for stream in self._owned:
            stream.close()
        self._streams = [stream for stream in self._streams if stream not in self._owned]
        self._owned = []


def serialize(object, file):
    """
    Writes a plain object (dicts, lists, numbers and strings) as YAML.

    """
    dump = yaml.safe_dump(object, sort_keys=True)
    if isinstance(file, str):
        with open(file, 'w') as f:
            f.write(dump)
    else:
        file.write(dump)


def deserialize(file):
    """
    Reads a YAML document written by :func:`serialize`.

    """
    if isinstance(file, str):
        with open(file, 'r') as f:
            object = yaml.safe_load(f.read())
    else:
        object = yaml.safe_load(file.read())
    return object


def _read(file):
    if isinstance(file, str):
        with open(file, 'r') as f:
            return f.read()
    return file.read()


def _write(text, file):
    if isinstance(file, str):
        with open(file, 'w') as f:
            f.write(text)
    else:
        file.write(text)


def _directives(text):
    for number, line in enumerate(text.splitlines(), start=1):
        fields = line.split('#', 1)[0].split()
        if fields:
            yield number, fields


def _naturals(fields, number, count=None):
    if count is not None and len(fields) != count:
        raise FormatError(f'expected {count} numbers, got {len(fields)}', number)
    try:
        values = [int(field) for field in fields]
    except ValueError:
        raise FormatError(f'expected natural numbers, got {" ".join(fields)}', number)
    if any(value < 0 for value in values):
        raise FormatError('negative numbers are not allowed', number)
    return values


def _header(lines, letter, what):
    try:
        number, fields = next(lines)
    except StopIteration:
        raise FormatError(f'empty {what} description')
    if fields[0] != letter:
        raise FormatError(f'a {what} description starts with {letter}, not {fields[0]}', number)
    return _naturals(fields[1:], number, 3 if letter != 'R' else 2)


_EVENT = re.compile(r'^([sti])(\d+)$')


def _event_index(name, m, n, k, number):
    match = _EVENT.match(name)
    if match is None:
        raise FormatError(f'bad event name {name}', number)
    kind, index = match.group(1), int(match.group(2))
    bound = {'s': m, 't': n, 'i': k}[kind]
    if index >= bound:
        raise FormatError(f'event {name} does not exist ({bound} {kind}-events)', number)
    return {'s': 0, 't': m, 'i': m + n}[kind] + index


def _event_name(f, event):
    if event < f.m:
        return f's{event}'
    if event < f.m + f.n:
        return f't{event - f.m}'
    return f'i{event - f.m - f.n}'


def _natural_key(name):
    return (name[0], int(name[1:]))


def loads_morphism(text):
    """
    Reads a poset morphism from text.

    Raises
    ------
        FormatError
            On malformed text.
        CycleDetected
            If the order pairs are cyclic.

    Example
    -------
        >>> import poalgebra
        >>> f = poalgebra.loads_morphism('P 1 1 1\\n< s0 i0\\n< i0 t0\\n')
        >>> f == poalgebra.interp(poalgebra.parse('sigma'))
        True

    """
    lines = _directives(text)
    m, n, k = _header(lines, 'P', 'poset morphism')
    pairs = []
    for number, fields in lines:
        if fields[0] != '<' or len(fields) != 3:
            raise FormatError(f'expected "< a b", got {" ".join(fields)}', number)
        pairs.append(tuple(_event_index(name, m, n, k, number) for name in fields[1:]))
    return PosetMorphism.from_pairs(m, n, k, pairs)


def dumps_morphism(f):
    """
    Writes a poset morphism as text, listing its covering pairs in natural order of the event names.

    """
    named = sorted(
        ((_event_name(f, a), _event_name(f, b)) for a, b in f.hasse_pairs()),
        key=lambda pair: (_natural_key(pair[0]), _natural_key(pair[1])),
    )
    return ''.join([f'P {f.m} {f.n} {f.k}\n'] + [f'< {a} {b}\n' for a, b in named])


def load_morphism(file):
    return loads_morphism(_read(file))


def dump_morphism(f, file):
    _write(dumps_morphism(f), file)


def loads_relation(text):
    """
    Reads a relation from text.

    Example
    -------
        >>> import poalgebra
        >>> poalgebra.loads_relation('R 1 2\\n0 1\\n').pairs
        ((0, 1),)

    """
    lines = _directives(text)
    m, n = _header(lines, 'R', 'relation')
    pairs = [tuple(_naturals(fields, number, 2)) for number, fields in lines]
    try:
        return Relation(m, n, pairs)
    except ValueError as error:
        raise FormatError(str(error))


def dumps_relation(r):
    return ''.join([f'R {r.m} {r.n}\n'] + [f'{i} {j}\n' for i, j in r.pairs])


def load_relation(file):
    return loads_relation(_read(file))


def dump_relation(r, file):
    _write(dumps_relation(r), file)


def loads_factorization(text):
    """
    Reads a factorization from text. Subsets that are not listed are empty.

    """
    lines = _directives(text)
    m, k, n = _header(lines, 'F', 'factorization')
    subsets = [set() for _ in range(k)]
    pairs = []
    for number, fields in lines:
        if fields[0] == 'I':
            values = _naturals(fields[1:], number)
            if not values or values[0] >= k:
                raise FormatError(f'bad block index in {" ".join(fields)}', number)
            subsets[values[0]] |= set(values[1:])
        elif fields[0] == 'R':
            pairs.append(tuple(_naturals(fields[1:], number, 2)))
        else:
            raise FormatError(f'unknown directive {fields[0]}', number)
    try:
        return Factorization(m, k, n, subsets, Relation(m + k, n, pairs))
    except ValueError as error:
        raise FormatError(str(error))


def dumps_factorization(F):
    lines = [f'F {F.m} {F.k} {F.n}\n']
    for j, subset in enumerate(F.subsets):
        lines.append(' '.join(['I', str(j)] + [str(i) for i in sorted(subset)]) + '\n')
    lines += [f'R {i} {j}\n' for i, j in F.relation.pairs]
    return ''.join(lines)


def load_factorization(file):
    return loads_factorization(_read(file))


def dump_factorization(F, file):
    _write(dumps_factorization(F), file)


def export_dot(f, name='morphism'):
    """
    Draws the Hasse diagram of a poset morphism in the DOT language.

    Sources sit on the bottom rank and targets on the top rank, both declared by increasing index. Internal
    events are filled, external events are open circles.

    Returns
    -------
        source : str

    Example
    -------
        >>> import poalgebra
        >>> dot = poalgebra.export_dot(poalgebra.interp(poalgebra.parse('sigma')))
        >>> dot.count('->'), dot.count('style=filled')
        (2, 1)

    """
    dot = graphviz.Digraph(
        name=name,
        graph_attr={'rankdir': 'BT'},
        node_attr={'shape': 'circle', 'label': '', 'width': '0.2', 'fixedsize': 'true'},
        edge_attr={'arrowhead': 'none'},
    )
    for rank, events in [('min', f.src), ('max', f.tgt)]:
        if events:
            with dot.subgraph() as side:
                side.attr(rank=rank)
                for event in events:
                    side.node(_event_name(f, event), xlabel=_event_name(f, event))
    for event in f.internal:
        dot.node(_event_name(f, event), style='filled', fillcolor='black')
    for a, b in f.hasse_pairs():
        dot.edge(_event_name(f, a), _event_name(f, b))
    return dot.source
