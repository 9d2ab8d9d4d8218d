import hypothesis
import hypothesis.strategies as strat
import pytest

import poalgebra
from poalgebra.tests.strategies import shuffled, terms


def test_parse_and_format():
    term = poalgebra.parse('(eta*id1);mu')
    assert str(term) == '(eta * id1) ; mu'
    assert term.arity == (1, 1)
    assert poalgebra.parse(str(term)) == term


def test_parse_precedence():
    term = poalgebra.parse('mu * id1 ; mu')
    assert isinstance(term, poalgebra.Seq)
    assert term.left == poalgebra.Par(poalgebra.Gen('mu'), poalgebra.Id(1))


def test_format_keeps_right_nesting():
    term = poalgebra.Seq(poalgebra.Gen('sigma'), poalgebra.Seq(poalgebra.Gen('sigma'), poalgebra.Gen('sigma')))
    assert str(term) == 'sigma ; (sigma ; sigma)'
    assert poalgebra.parse(str(term)) == term


@pytest.mark.parametrize('text', ['mu ;', 'foo', '(mu', 'id', 'mu mu', 'mu # eta'])
def test_parse_errors(text):
    with pytest.raises(poalgebra.ParseError):
        poalgebra.parse(text)


def test_parse_arity_error():
    with pytest.raises(poalgebra.ArityError):
        poalgebra.parse('delta ; delta')


def test_bialgebra_signature_rejects_sigma():
    with pytest.raises(poalgebra.ParseError):
        poalgebra.parse('sigma', poalgebra.Signature.bialgebra())


def test_generator_count():
    term = poalgebra.parse('delta * delta ; id1 * gamma * id1 ; mu * mu')
    assert poalgebra.generator_count(term) == 5
    assert poalgebra.generators_of(term) == ['delta', 'delta', 'gamma', 'mu', 'mu']


@pytest.mark.parametrize('m', range(4))
@pytest.mark.parametrize('n', range(4))
def test_symmetry_terms(m, n):
    term = poalgebra.gamma(m, n)
    assert term.arity == (m + n, m + n)
    assert poalgebra.interp(term) == poalgebra.symmetry(m, n)


def test_interchange_law():
    a = poalgebra.parse('(mu * id1) ; (id1 * delta)')
    b = poalgebra.parse('(id2 * delta) ; (mu * id2)')
    assert poalgebra.monoidal_equal(a, b)
    assert not poalgebra.structurally_equal(a, b)
    assert poalgebra.normalize(a) == poalgebra.normalize(b)


def test_monoidal_equal_distinguishes_order():
    a = poalgebra.parse('mu ; delta')
    b = poalgebra.parse('delta * delta ; id1 * gamma * id1 ; mu * mu')
    assert not poalgebra.monoidal_equal(a, b)


def test_units_float_between_layers():
    a = poalgebra.parse('eta * eta')
    b = poalgebra.parse('eta ; id1 * eta')
    c = poalgebra.parse('eta ; eta * id1')
    assert poalgebra.monoidal_equal(a, b)
    assert poalgebra.normal_form(a).generator_count == 2
    assert not poalgebra.monoidal_equal(b, poalgebra.parse('eta ; delta'))
    assert poalgebra.tp_equal(b, c)


def test_slices():
    term = poalgebra.parse('mu * sigma ; delta * id1')
    pieces = poalgebra.slices(term)
    assert pieces == [
        poalgebra.Slice(0, 'mu', 1),
        poalgebra.Slice(1, 'sigma', 0),
        poalgebra.Slice(0, 'delta', 1),
    ]
    assert poalgebra.monoidal_equal(poalgebra.from_slices(3, pieces), term)


def test_from_slices_checks_widths():
    with pytest.raises(poalgebra.ArityError):
        poalgebra.from_slices(1, [poalgebra.Slice(0, 'mu', 0)])


def test_commute():
    first, second = poalgebra.Slice(0, 'mu', 1), poalgebra.Slice(1, 'sigma', 0)
    assert poalgebra.commute(first, second) == [
        (poalgebra.Slice(2, 'sigma', 0), poalgebra.Slice(0, 'mu', 1)),
    ]
    assert poalgebra.commute(poalgebra.Slice(0, 'mu', 0), poalgebra.Slice(0, 'sigma', 0)) == []


def test_seq_all_and_tensor_all():
    assert poalgebra.seq_all([poalgebra.Id(2), poalgebra.Gen('mu'), poalgebra.Id(1)]) == poalgebra.Gen('mu')
    assert poalgebra.tensor_all([poalgebra.Id(1), poalgebra.Id(2)]) == poalgebra.Id(3)
    assert str(poalgebra.whisker(1, poalgebra.Gen('gamma'), 0)) == 'id1 * gamma'


@hypothesis.settings(max_examples=50, deadline=None)
@hypothesis.given(terms())
def test_normalize_preserves_meaning(term):
    normal = poalgebra.normalize(term)
    assert normal.arity == term.arity
    assert poalgebra.tp_equal(normal, term)
    assert poalgebra.generator_count(normal) == poalgebra.generator_count(term)


@hypothesis.settings(max_examples=50, deadline=None)
@hypothesis.given(terms())
def test_format_parses_back(term):
    assert poalgebra.parse(str(term)) == term


@pytest.mark.parametrize('first, second', [
    (
        '(id1 * eta) ; (id1 * delta) ; (sigma * id2) ; (sigma * id2) ; (id2 * eps) ; (id2 * eta)',
        '(id1 * eta) ; (sigma * id1) ; (sigma * id1) ; (id2 * eta) ; (id1 * delta * id1) ; (id2 * eps * id1)',
    ),
    ('(eta * sigma) ; (id1 * eps)', '(sigma * eta) ; (eps * id1)'),
    ('eps ; eta ; eps ; eta ; sigma', '(id1 * eta) ; (eps * id1) ; (id1 * eta) ; (id1 * sigma) ; (eps * id1)'),
    ('eta ; eps ; eta', 'eta ; (eta * id1) ; (id1 * eps)'),
])
def test_units_and_counits_slide_around_wire_ends(first, second):
    a, b = poalgebra.parse(first), poalgebra.parse(second)
    assert poalgebra.monoidal_equal(a, b)
    assert poalgebra.normalize(a) == poalgebra.normalize(b)


def test_monoidal_equal_respects_planarity():
    a = poalgebra.parse('eta * (eta ; sigma)')
    b = poalgebra.parse('(eta ; sigma) * eta')
    assert not poalgebra.monoidal_equal(a, b)
    assert not poalgebra.monoidal_equal(poalgebra.parse('(eta * id1) ; mu'), poalgebra.parse('(id1 * eta) ; mu'))
    nested = poalgebra.parse('eta ; delta ; (id1 * eta * id1) ; (id1 * eps * id1) ; mu ; eps')
    outside = poalgebra.parse('eta ; eps ; eta ; delta ; mu ; eps')
    assert not poalgebra.monoidal_equal(nested, outside)
    assert not poalgebra.monoidal_equal(poalgebra.parse('eta ; delta ; (id1 * eta * id1)'),
                                        poalgebra.parse('eta ; delta ; (eta * id2)'))


@hypothesis.settings(max_examples=80, deadline=None)
@hypothesis.given(terms(max_generators=6), strat.randoms(use_true_random=False))
def test_normal_form_is_invariant_under_interchange(term, rng):
    other = shuffled(term, rng)
    assert poalgebra.monoidal_equal(term, other)
    assert poalgebra.normalize(other) == poalgebra.normalize(term)


@hypothesis.settings(max_examples=50, deadline=None)
@hypothesis.given(terms(max_generators=6))
def test_normalize_is_idempotent(term):
    normal = poalgebra.normalize(term)
    assert poalgebra.normalize(normal) == normal
