"""
.. module:: cli
   :platform: Unix, Windows
   :synopsis: The ``poalgebra`` command

Terms are given as quoted arguments. Morphisms, relations and factorizations are read from files in
the formats of :mod:`poalgebra.io`, ``-`` standing for the standard input. Results go to the
standard output.

Exit codes are 0 on success, 1 when the input is rejected (or a verification suite fails) and 2 on
a usage error.

"""

import argparse
import logging
import sys

import yaml

from poalgebra import harness, io
from poalgebra.factorization import (
    canonical_linearization, canonical_term, fact_compose, factorize, rel_to_term,
)
from poalgebra.interp import interp, tp_equal
from poalgebra.posets import compose, tensor
from poalgebra.terms import parse

logger = logging.getLogger(__name__)


def _open(path):
    return sys.stdin if path == '-' else path


def _linearization(text):
    events = []
    for field in text.split(','):
        field = field.strip()
        try:
            events.append(int(field[1:] if field.startswith('i') else field))
        except ValueError:
            raise argparse.ArgumentTypeError(f'bad internal event {field!r}')
    return events


def _parse(args):
    term = parse(args.term)
    print(f'{term} : {term.m} -> {term.n}')


def _interp(args):
    f = interp(parse(args.term))
    print(io.export_dot(f) if args.dot else io.dumps_morphism(f), end='')


def _eq(args):
    print('EQUAL' if tp_equal(parse(args.first), parse(args.second)) else 'DIFFERENT')


def _compose(args):
    f, g = io.load_morphism(_open(args.first)), io.load_morphism(_open(args.second))
    print(io.dumps_morphism(compose(f, g)), end='')


def _tensor(args):
    f, g = io.load_morphism(_open(args.first)), io.load_morphism(_open(args.second))
    print(io.dumps_morphism(tensor(f, g)), end='')


def _factorize(args):
    f = io.load_morphism(_open(args.file))
    if args.lin is None:
        x = canonical_linearization(f)
    else:
        x = [f.m + f.n + i for i in args.lin]
    print(io.dumps_factorization(factorize(f, x)), end='')


def _fact_compose(args):
    f, _ = fact_compose(io.load_factorization(_open(args.file)))
    print(io.dumps_morphism(f), end='')


def _rel2term(args):
    print(rel_to_term(io.load_relation(_open(args.file))))


def _canon(args):
    print(canonical_term(io.load_morphism(_open(args.file))))


def _enumerate(args):
    spec = harness.EnumSpec(args.max_events, args.m, args.n)
    count = 0
    for f in harness.enumerate_morphisms(spec):
        if f.arity != (args.m, args.n):
            continue
        count += 1
        if not args.count:
            print(io.dumps_morphism(f))
    logger.info('%d classes of morphisms %d->%d', count, args.m, args.n)
    if args.count:
        print(count)


def _settings(path):
    try:
        return harness.HarnessSettings.load(path)
    except (yaml.YAMLError, TypeError, AttributeError) as error:
        raise ValueError(f'invalid settings file {path}: {error}') from error


def _verify(args):
    settings = _settings(args.config) if args.config else harness.HarnessSettings()
    settings = settings.replace(max_events=args.max_events, seed=args.seed, max_nodes=args.budget)
    reports = harness.run_suites(args.suite or ['all'], settings)
    outputs = [args.output] if args.output else []
    with io.Tee(sys.stdout, *outputs) as output:
        for report in reports:
            print('\n'.join(report.lines()), file=output)
    return 0 if all(report.ok for report in reports) else 1


def _dot(args):
    print(io.export_dot(io.load_morphism(_open(args.file)), name=args.name), end='')


def _parser():
    parser = argparse.ArgumentParser(
        prog='poalgebra',
        description='Terms, poset morphisms and the verification of their presentation.',
    )
    parser.add_argument('--verbose', action='store_true', help='report progress')
    parser.add_argument('--debug', action='store_true', help='report search details')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    command = commands.add_parser('parse', help='parse a term and print it with its arity')
    command.add_argument('term')
    command.set_defaults(handler=_parse)

    command = commands.add_parser('interp', help='interpret a term as a poset morphism')
    command.add_argument('term')
    command.add_argument('--dot', action='store_true', help='print the Hasse diagram in DOT')
    command.set_defaults(handler=_interp)

    command = commands.add_parser('eq', help='compare the interpretations of two terms')
    command.add_argument('first')
    command.add_argument('second')
    command.set_defaults(handler=_eq)

    for name, handler, text in [('compose', _compose, 'compose two morphisms, first one first'),
                                ('tensor', _tensor, 'tensor two morphisms')]:
        command = commands.add_parser(name, help=text)
        command.add_argument('first')
        command.add_argument('second')
        command.set_defaults(handler=handler)

    command = commands.add_parser('factorize', help='factorize a morphism along a linearization')
    command.add_argument('file')
    command.add_argument(
        '--lin', type=_linearization, default=None,
        help='internal events in block order, as in i0,i2,i1 (canonical linearization by default)',
    )
    command.set_defaults(handler=_factorize)

    for name, handler, text in [('fact-compose', _fact_compose, 'compose a factorization'),
                                ('rel2term', _rel2term, 'print a term of a relation'),
                                ('canon', _canon, 'print the canonical term of a morphism')]:
        command = commands.add_parser(name, help=text)
        command.add_argument('file')
        command.set_defaults(handler=handler)

    command = commands.add_parser('enumerate', help='list morphisms up to isomorphism')
    command.add_argument('--m', type=int, default=0, help='source arity')
    command.add_argument('--n', type=int, default=0, help='target arity')
    command.add_argument('--max-events', type=int, default=4, help='largest number of events')
    command.add_argument('--count', action='store_true', help='only print the number of classes')
    command.set_defaults(handler=_enumerate)

    command = commands.add_parser('verify', help='run verification suites')
    command.add_argument(
        '--suite', action='append', choices=list(harness.SUITES) + ['all'],
        help='suite to run, may be repeated (all suites by default)',
    )
    command.add_argument('--max-events', type=int, default=None)
    command.add_argument('--seed', type=int, default=None)
    command.add_argument('--budget', type=int, default=None, help='node budget of rewrite searches')
    command.add_argument('--config', default=None, help='YAML file of harness settings')
    command.add_argument('--output', default=None, help='also write the report to this file')
    command.set_defaults(handler=_verify)

    command = commands.add_parser('dot', help='draw a morphism in DOT')
    command.add_argument('file')
    command.add_argument('--name', default='morphism', help='graph name')
    command.set_defaults(handler=_dot)
    return parser


def run(argv=None):
    """
    Runs the command line `argv` and returns its exit code.

    Example
    -------
        >>> from poalgebra.cli import run
        >>> run(['eq', '(eta * id1) ; mu', 'id1'])
        EQUAL
        0

    """
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exit:
        return exit.code
    if args.debug:
        logging.basicConfig(level=logging.DEBUG)
    elif args.verbose:
        logging.basicConfig(level=logging.INFO)
    else:
        logging.basicConfig(level=logging.WARNING)
    try:
        return args.handler(args) or 0
    except (ValueError, OSError) as error:
        print(f'error: {error}', file=sys.stderr)
        return 1


def main():
    sys.exit(run())
