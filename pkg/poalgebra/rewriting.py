"""
.. module:: rewriting
   :platform: Unix, Windows
   :synopsis: Rewriting of terms modulo the axioms of monoidal categories

A redex is found on the slice form of a term: the slices of a rule side must be brought next to each
other by the interchange law, forming a block :math:`\\mathrm{id}_a \\otimes \\alpha \\otimes
\\mathrm{id}_b` inside a rearranged slice sequence. The rearranged sequence, the start of the block
and the offset `a` make up a :class:`Position`.

Since the rule system is not confluent, deciding equality by rewriting requires a search in the
undirected rewrite graph, which :func:`connected` performs breadth-first from both ends.

"""

import collections
import dataclasses
import enum
import functools
import logging
import random

from poalgebra.posets import ArityError
from poalgebra.rules import POALGEBRA_RULES
from poalgebra.terms import commute, layered, normal_form

logger = logging.getLogger(__name__)


class InvalidPosition(ValueError):
    """
    Raised when a redex position does not apply to the given term.

    """


class Direction(enum.Enum):
    FORWARD = 'forward'
    BACKWARD = 'backward'

    def flipped(self):
        return Direction.BACKWARD if self is Direction.FORWARD else Direction.FORWARD


BOTH_DIRECTIONS = (Direction.FORWARD, Direction.BACKWARD)


@dataclasses.dataclass(frozen=True)
class Position(object):
    """
    Where a rule side occurs in a term.

    Attributes
    ----------
        arrangement : tuple(:class:`~poalgebra.terms.Slice`)
            A slice sequence equal to the term modulo the interchange law.
        start : int
            The index of the first slice of the matched block.
        offset : int
            The number of wires to the left of the matched block.

    """
    arrangement: tuple
    start: int
    offset: int


@dataclasses.dataclass(frozen=True)
class Redex(object):
    rule: object
    position: Position
    direction: Direction = Direction.FORWARD


@dataclasses.dataclass(frozen=True)
class Step(object):
    """
    One rewrite step of a path returned by :func:`connected`.

    """
    rule: str
    direction: Direction
    before: object
    after: object

    def __str__(self):
        arrow = '=>' if self.direction is Direction.FORWARD else '<='
        return f'{self.before}  {arrow}[{self.rule}]  {self.after}'


@dataclasses.dataclass(frozen=True)
class Budget(object):
    """
    Limits of the search performed by :func:`connected`.

    Attributes
    ----------
        max_nodes : int
            The maximum number of distinct terms visited on both sides together.
        max_depth : int
            The maximum length of a path.
        max_generators : int or None
            The largest generator count a visited term may have. If `None`, the larger of the two
            endpoint sizes plus `slack` is used.
        slack : int
            See `max_generators`.

    """
    max_nodes: int = 4000
    max_depth: int = 6
    max_generators: int = None
    slack: int = 2

    def __post_init__(self):
        if self.max_nodes < 1 or self.max_depth < 0 or self.slack < 0:
            raise ValueError('search budget limits must be positive')


def _frame_widths(m, sequence):
    widths = [m]
    for piece in sequence:
        widths.append(piece.width_out)
    return widths


@functools.lru_cache(maxsize=None)
def _arrangements(term):
    # all slice orders of a rule side reachable by the interchange law
    start = tuple(normal_form(term).slices())
    seen = {start}
    queue = collections.deque([start])
    while queue:
        current = queue.popleft()
        for index in range(len(current) - 1):
            for early, late in commute(current[index], current[index + 1]):
                swapped = current[:index] + (early, late) + current[index + 2:]
                if swapped not in seen:
                    seen.add(swapped)
                    queue.append(swapped)
    return tuple(sorted(seen, key=lambda sequence: [(s.a, s.generator, s.b) for s in sequence]))


def _block_offset(block, pattern):
    # offset a such that block == id_a * pattern * id_b, or None
    first, head = block[0], pattern[0]
    if first.generator != head.generator:
        return None
    offset, extra = first.a - head.a, first.b - head.b
    if offset < 0 or extra < 0:
        return None
    for piece, expected in zip(block, pattern):
        if piece != expected.shifted(offset, extra):
            return None
    return offset


def _move_back(piece, sequence):
    # commutes a slice from the end of `sequence` to its front
    moved = []
    for other in reversed(sequence):
        options = commute(other, piece)
        if not options:
            return None
        piece, late = options[0]
        moved.insert(0, late)
    return piece, moved


def _match(sequence, pattern):
    results = []
    size = len(pattern)

    def search(k, prefix, block, postponed):
        if len(block) == size:
            arrangement = tuple(prefix + block + postponed) + tuple(sequence[k:])
            offset = _block_offset(block, pattern)
            if offset is not None:
                results.append(Position(arrangement, len(prefix), offset))
            return
        if k == len(sequence):
            return
        piece = sequence[k]
        attempt = _move_back(piece, postponed)
        if attempt is not None:
            moved, rest = attempt
            candidate = block + [moved]
            if moved.generator == pattern[len(block)].generator and \
                    _block_offset(candidate, pattern[:len(candidate)]) is not None:
                search(k + 1, prefix, candidate, rest)
            if not block:
                search(k + 1, prefix + [moved], block, rest)
                return
            behind = _move_back(moved, block)
            if behind is not None:
                earlier, shifted = behind
                if _block_offset(shifted, pattern[:len(shifted)]) is not None:
                    search(k + 1, prefix + [earlier], shifted, rest)
                    return
        search(k + 1, prefix, block, postponed + [piece])

    search(0, [], [], [])
    return results


def _insertions(m, sequence, width):
    widths = _frame_widths(m, sequence)
    return [
        Position(tuple(sequence), start, offset)
        for start, available in enumerate(widths)
        for offset in range(available - width + 1)
    ]


def _sides(rule, direction):
    if direction is Direction.FORWARD:
        return rule.lhs, rule.rhs
    return rule.rhs, rule.lhs


def _redexes(form, rules, directions):
    sequence = form.slices()
    names = collections.Counter(piece.generator for piece in sequence)
    found = []
    for rule in rules:
        for direction in directions:
            pattern_term, _ = _sides(rule, direction)
            positions = set()
            arrangements = _arrangements(pattern_term)
            if not arrangements[0]:
                positions.update(_insertions(form.m, sequence, pattern_term.m))
            else:
                needed = collections.Counter(piece.generator for piece in arrangements[0])
                if any(names[name] < count for name, count in needed.items()):
                    continue
                for pattern in arrangements:
                    positions.update(_match(sequence, list(pattern)))
            ordered = sorted(positions, key=lambda p: (p.start, p.offset, [(s.a, s.generator) for s in p.arrangement]))
            found.extend(Redex(rule, position, direction) for position in ordered)
    return found


def find_redexes(term, rules=POALGEBRA_RULES, directions=(Direction.FORWARD,)):
    """
    Finds all occurrences of rule sides in a term, modulo the axioms of monoidal categories.

    Parameters
    ----------
        term : :class:`~poalgebra.terms.Term`

    Keyword Args
    ------------
        rules : :class:`~poalgebra.rules.RuleSet`, default=POALGEBRA_RULES
            The rules to look for.
        directions : tuple(:class:`Direction`), default=(Direction.FORWARD,)
            Whether to match left-hand sides (forward), right-hand sides (backward) or both.

    Returns
    -------
        redexes : list(:class:`Redex`)

    Example
    -------
        >>> import poalgebra
        >>> redexes = poalgebra.find_redexes(poalgebra.parse('gamma ; gamma'))
        >>> [redex.rule.name for redex in redexes]
        ['involution']

    """
    return _redexes(normal_form(term), rules, tuple(directions))


def _same_class(form, arrangement):
    # whether `arrangement` is a slice order of `form` modulo the interchange law
    try:
        return layered(form.m, arrangement) == form
    except ArityError:
        return False


def _replace(m, rule, position, direction):
    pattern_term, replacement_term = _sides(rule, direction)
    arrangement = list(position.arrangement)
    widths = _frame_widths(m, arrangement)
    if not 0 <= position.start <= len(arrangement):
        raise InvalidPosition(f'redex start {position.start} is out of range')
    width = widths[position.start]
    extra = width - position.offset - pattern_term.m
    if position.offset < 0 or extra < 0:
        raise InvalidPosition(f'rule {rule.name} does not fit at offset {position.offset}')
    size = len(_arrangements(pattern_term)[0])
    block = arrangement[position.start:position.start + size]
    if not any(
        len(block) == len(pattern) and list(block) == [s.shifted(position.offset, extra) for s in pattern]
        for pattern in _arrangements(pattern_term)
    ):
        raise InvalidPosition(f'no occurrence of {pattern_term} at the given position')
    replacement = [s.shifted(position.offset, extra) for s in normal_form(replacement_term).slices()]
    rewritten = arrangement[:position.start] + replacement + arrangement[position.start + size:]
    return layered(m, rewritten)


def _rewrite(form, rule, position, direction):
    if not _same_class(form, position.arrangement):
        raise InvalidPosition(f'position does not belong to the term (stale redex for {rule.name})')
    return _replace(form.m, rule, position, direction)


def apply(term, rule, position, direction=Direction.FORWARD):
    """
    Rewrites a term at a redex position.

    Parameters
    ----------
        term : :class:`~poalgebra.terms.Term`
        rule : :class:`~poalgebra.rules.Rule`
        position : :class:`Position`
            A position returned by :func:`find_redexes` for this term.

    Keyword Args
    ------------
        direction : :class:`Direction`, default=Direction.FORWARD
            Forward replaces the left-hand side by the right-hand side, backward does the converse.

    Returns
    -------
        term : :class:`~poalgebra.terms.Term`
            The rewritten term, in normal form.

    Raises
    ------
        InvalidPosition
            If the position does not hold an occurrence of the rule side in this term.

    Example
    -------
        >>> import poalgebra
        >>> term = poalgebra.parse('gamma ; gamma')
        >>> redex = poalgebra.find_redexes(term)[0]
        >>> print(poalgebra.apply(term, redex.rule, redex.position))
        id2

    """
    return _rewrite(normal_form(term), rule, position, direction).term()


def _neighbours(form, rules, limit):
    for redex in _redexes(form, rules, BOTH_DIRECTIONS):
        child = _replace(form.m, redex.rule, redex.position, redex.direction)
        if child.generator_count <= limit:
            yield redex, child


def _trace(parents, node):
    chain = []
    while parents[node] is not None:
        previous, rule, direction = parents[node]
        chain.append((previous, rule, direction, node))
        node = previous
    return chain


def connected(t1, t2, rules=POALGEBRA_RULES, budget=None):
    """
    Searches for a chain of rewrite steps, in either direction, joining two parallel terms.

    Parameters
    ----------
        t1, t2 : :class:`~poalgebra.terms.Term`

    Keyword Args
    ------------
        rules : :class:`~poalgebra.rules.RuleSet`, default=POALGEBRA_RULES
        budget : :class:`Budget`, default=None
            The search limits. ``Budget()`` is used if `None`.

    Returns
    -------
        path : list(:class:`Step`) or None
            The steps from `t1` to `t2`, empty if the terms are equal modulo the monoidal axioms,
            or `None` if the budget was exhausted. `None` does not mean the terms are different.

    Raises
    ------
        ArityError
            If the terms are not parallel.

    Example
    -------
        >>> import poalgebra
        >>> path = poalgebra.connected(poalgebra.parse('(eta * id1) ; mu'), poalgebra.parse('(id1 * eta) ; mu'))
        >>> len(path)
        2

    """
    if t1.arity != t2.arity:
        raise ArityError(f'terms are not parallel: {t1.arity} vs {t2.arity}')
    budget = budget or Budget()
    ends = (normal_form(t1), normal_form(t2))
    if ends[0] == ends[1]:
        return []
    limit = budget.max_generators
    if limit is None:
        limit = max(form.generator_count for form in ends) + budget.slack
    parents = ({ends[0]: None}, {ends[1]: None})
    frontiers = ([ends[0]], [ends[1]])
    for depth in range(budget.max_depth):
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        successors = []
        for node in frontiers[side]:
            for redex, child in _neighbours(node, rules, limit):
                if child in parents[side]:
                    continue
                parents[side][child] = (node, redex.rule.name, redex.direction)
                if child in parents[1 - side]:
                    logger.debug('rewrite path found after %d expansions', depth + 1)
                    return _join(parents, child)
                successors.append(child)
                if len(parents[0]) + len(parents[1]) > budget.max_nodes:
                    logger.debug('node budget of %d exhausted', budget.max_nodes)
                    return None
        frontiers[side][:] = successors
        if not successors:
            logger.debug('rewrite graph component exhausted at depth %d', depth + 1)
            return None
    logger.debug('depth budget of %d exhausted', budget.max_depth)
    return None


def _join(parents, meeting):
    forward = _trace(parents[0], meeting)[::-1]
    backward = _trace(parents[1], meeting)
    steps = [
        Step(rule, direction, before.term(), after.term())
        for before, rule, direction, after in forward
    ]
    steps += [
        Step(rule, direction.flipped(), after.term(), before.term())
        for before, rule, direction, after in backward
    ]
    return steps


def rewrite_walk(term, steps, rng, rules=POALGEBRA_RULES, max_generators=6):
    """
    Performs a random derivation of at most `steps` rewrite steps in either direction.

    Parameters
    ----------
        term : :class:`~poalgebra.terms.Term`
        steps : int
        rng : random.Random
            The source of randomness, for reproducible walks.

    Keyword Args
    ------------
        rules : :class:`~poalgebra.rules.RuleSet`, default=POALGEBRA_RULES
        max_generators : int, default=6
            No visited term exceeds this number of generators.

    Returns
    -------
        term : :class:`~poalgebra.terms.Term`
            The end of the walk, in normal form.

    """
    form = normal_form(term)
    rng = rng if rng is not None else random.Random(0)
    for _ in range(steps):
        choices = [child for _, child in _neighbours(form, rules, max_generators) if child != form]
        if not choices:
            break
        form = rng.choice(choices)
    return form.term()
