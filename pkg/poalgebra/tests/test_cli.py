import pytest

import poalgebra
from poalgebra.cli import run


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_eq(capsys):
    assert run(['eq', '(eta*id1);mu', 'id1']) == 0
    assert capsys.readouterr().out == 'EQUAL\n'
    assert run(['eq', 'sigma ; sigma', 'sigma']) == 0
    assert capsys.readouterr().out == 'DIFFERENT\n'


def test_parse(capsys):
    assert run(['parse', 'delta;gamma']) == 0
    assert capsys.readouterr().out == 'delta ; gamma : 1 -> 2\n'


def test_domain_errors(capsys):
    assert run(['parse', 'mu ;']) == 1
    assert capsys.readouterr().err.startswith('error: ')
    assert run(['eq', 'mu', 'delta']) == 1
    assert 'not parallel' in capsys.readouterr().err
    assert run(['dot', 'missing-file.poset']) == 1


def test_usage_errors(capsys):
    assert run([]) == 2
    assert run(['verify', '--suite', 'completeness']) == 2
    assert run(['factorize', 'file', '--lin', 'a,b']) == 2
    capsys.readouterr()


def test_interp(capsys):
    assert run(['interp', 'sigma']) == 0
    out = capsys.readouterr().out
    assert out == poalgebra.dumps_morphism(poalgebra.interp(poalgebra.parse('sigma')))
    assert run(['interp', 'sigma', '--dot']) == 0
    out = capsys.readouterr().out
    assert out.count('->') == 2
    assert out.count('style=filled') == 1


def test_compose_and_tensor(tmp_path, capsys):
    first = write(tmp_path, 'first.poset', poalgebra.dumps_morphism(poalgebra.three_to_two()))
    second = write(tmp_path, 'second.poset', poalgebra.dumps_morphism(poalgebra.two_to_three()))
    assert run(['compose', first, second]) == 0
    composite = poalgebra.loads_morphism(capsys.readouterr().out)
    assert poalgebra.iso_eq(composite, poalgebra.glued()) is not None
    assert run(['tensor', first, second]) == 0
    product = poalgebra.loads_morphism(capsys.readouterr().out)
    assert product.arity == (5, 5)
    assert run(['compose', first, first]) == 1
    assert capsys.readouterr().err.startswith('error: ')


def test_factorize(tmp_path, capsys):
    diamond = poalgebra.DiamondModel()
    path = write(tmp_path, 'diamond.poset', poalgebra.dumps_morphism(diamond.morphism))
    assert run(['factorize', path, '--lin', 'i0,i2,i1,i3']) == 0
    out = capsys.readouterr().out
    assert out == poalgebra.dumps_factorization(diamond.second_factorization)
    assert run(['factorize', path, '--lin', 'i1,i0,i2,i3']) == 1
    assert capsys.readouterr().err.startswith('error: ')
    assert run(['factorize', path]) == 0
    F = poalgebra.loads_factorization(capsys.readouterr().out)
    assert poalgebra.is_transitive(F)


def test_fact_compose(tmp_path, capsys):
    F = poalgebra.DiamondModel().first_factorization
    path = write(tmp_path, 'diamond.fact', poalgebra.dumps_factorization(F))
    assert run(['fact-compose', path]) == 0
    f = poalgebra.loads_morphism(capsys.readouterr().out)
    assert f == poalgebra.fact_compose(F)[0]


def test_rel2term(tmp_path, capsys):
    path = write(tmp_path, 'merge.rel', 'R 2 1\n0 0\n1 0\n')
    assert run(['rel2term', path]) == 0
    assert capsys.readouterr().out == 'mu\n'


def test_canon(tmp_path, capsys):
    f = poalgebra.two_to_three()
    path = write(tmp_path, 'f.poset', poalgebra.dumps_morphism(f.relabel([2, 1, 0])))
    assert run(['canon', path]) == 0
    assert capsys.readouterr().out == f'{poalgebra.canonical_term(f)}\n'


def test_enumerate(capsys):
    assert run(['enumerate', '--max-events', '3', '--count']) == 0
    assert capsys.readouterr().out == '9\n'
    assert run(['enumerate', '--m', '1', '--n', '1', '--max-events', '2']) == 0
    out = capsys.readouterr().out
    assert out.count('P 1 1 0') == 2


def test_verify(tmp_path, capsys):
    output = str(tmp_path / 'report.txt')
    assert run(['verify', '--suite', 'golden', '--output', output]) == 0
    out = capsys.readouterr().out
    assert out.startswith('SUITE golden pass=13 fail=0')
    with open(output) as f:
        assert f.read() == out


def test_verify_with_config(tmp_path, capsys):
    config = str(tmp_path / 'settings.yaml')
    poalgebra.HarnessSettings(relation_arity=1).dump(config)
    assert run(['--verbose', 'verify', '--suite', 'relations', '--config', config]) == 0
    assert capsys.readouterr().out.startswith('SUITE relations ')


@pytest.mark.parametrize('text', ['seed: [1, 2\n', 'seed: {}\n', '- 3\n- 4\n', '7\n', 'sample: 10\nwidth: 3\n'])
def test_verify_rejects_bad_config(tmp_path, capsys, text):
    config = write(tmp_path, 'settings.yaml', text)
    assert run(['verify', '--suite', 'golden', '--config', config]) == 1
    assert capsys.readouterr().err.startswith('error: ')


@pytest.mark.parametrize('name', ['id', 'x'])
def test_dot(tmp_path, capsys, name):
    path = write(tmp_path, 'id.poset', poalgebra.dumps_morphism(poalgebra.identity(1)))
    assert run(['dot', path, '--name', name]) == 0
    out = capsys.readouterr().out
    assert out == poalgebra.export_dot(poalgebra.identity(1), name=name)
