import io

import pytest

import poalgebra


def test_morphism_text():
    sigma = poalgebra.interp(poalgebra.parse('sigma'))
    assert poalgebra.dumps_morphism(sigma) == 'P 1 1 1\n< i0 t0\n< s0 i0\n'
    assert poalgebra.loads_morphism('# a chain\nP 1 1 1\n< s0 i0   # below\n< i0 t0\n') == sigma


@pytest.mark.parametrize('f', [
    poalgebra.two_to_three(), poalgebra.glued(), poalgebra.identity(2), poalgebra.DiamondModel().morphism,
])
def test_morphism_roundtrip(f):
    assert poalgebra.loads_morphism(poalgebra.dumps_morphism(f)) == f


def test_morphism_files(tmp_path):
    path = str(tmp_path / 'glued.poset')
    poalgebra.dump_morphism(poalgebra.glued(), path)
    assert poalgebra.load_morphism(path) == poalgebra.glued()


@pytest.mark.parametrize('text, line', [
    ('', None),
    ('R 1 1\n', 1),
    ('P 1 1\n', 1),
    ('P 1 1 0\n< s0 t1\n', 2),
    ('P 1 1 0\n< s0 x0\n', 2),
    ('P 1 1 0\n< s0\n', 2),
    ('P -1 1 0\n', 1),
])
def test_morphism_format_errors(text, line):
    with pytest.raises(poalgebra.FormatError) as error:
        poalgebra.loads_morphism(text)
    assert error.value.line == line


def test_cyclic_morphism():
    with pytest.raises(poalgebra.CycleDetected):
        poalgebra.loads_morphism('P 0 0 2\n< i0 i1\n< i1 i0\n')


def test_relation_text():
    relation, _ = poalgebra.fan_relation()
    text = poalgebra.dumps_relation(relation)
    assert text.splitlines()[:2] == ['R 4 3', '0 0']
    assert poalgebra.loads_relation(text) == relation
    with pytest.raises(poalgebra.FormatError):
        poalgebra.loads_relation('R 1 1\n0 1\n')


def test_factorization_text():
    F = poalgebra.DiamondModel().first_factorization
    text = poalgebra.dumps_factorization(F)
    assert text.splitlines()[:3] == ['F 1 4 2', 'I 0 0', 'I 1 0 1']
    assert poalgebra.loads_factorization(text) == F
    with pytest.raises(poalgebra.FormatError):
        poalgebra.loads_factorization('F 1 1 0\nI 3 0\n')
    with pytest.raises(poalgebra.FormatError):
        poalgebra.loads_factorization('F 1 1 0\nX 0\n')


def test_serialization():
    settings = poalgebra.HarnessSettings(seed=7, sample=10)
    pipe = io.StringIO()
    poalgebra.serialize(settings.to_dict(), pipe)
    pipe.seek(0)
    assert poalgebra.HarnessSettings.from_dict(poalgebra.deserialize(pipe)) == settings


def test_export_dot():
    dot = poalgebra.export_dot(poalgebra.identity(1))
    assert dot.count('->') == 1
    assert 'style=filled' not in dot
    dot = poalgebra.export_dot(poalgebra.x_block(3, {0, 2}), name='block')
    assert dot.startswith('digraph block')
    assert dot.count('->') == 6
    assert dot.count('style=filled') == 1
    assert dot == poalgebra.export_dot(poalgebra.x_block(3, {0, 2}), name='block')


def test_tee(tmp_path):
    path = str(tmp_path / 'report.txt')
    pipe = io.StringIO()
    with poalgebra.Tee(pipe, path) as tee:
        print('SUITE golden pass=1 fail=0 inconclusive=0', file=tee)
    assert not pipe.closed
    assert pipe.getvalue() == 'SUITE golden pass=1 fail=0 inconclusive=0\n'
    with open(path) as f:
        assert f.read() == 'SUITE golden pass=1 fail=0 inconclusive=0\n'


def test_tee_reports_unwritable_file(tmp_path):
    with pytest.raises(OSError):
        poalgebra.Tee(io.StringIO(), str(tmp_path / 'missing' / 'report.txt'))
