import pytest

from exceptions import ParseError, ValidationError
from formats import (
    format_matrix, format_problem, parse_matrix, parse_problem, read_code, read_matrix,
    render_report, write_matrix,
)
from tests.conftest import sample


def test_format_matrix(z7_hull):
    text = format_matrix(z7_hull)
    assert text.splitlines()[0] == 'q=2 n=7 k=3'
    assert len(text.splitlines()) == 4
    F, C = read_code(text)
    assert F.order == 2 and C == z7_hull


def test_matrix_file_round_trip(tmp_path, z7_hull):
    path = tmp_path / 'hull.txt'
    write_matrix(z7_hull, path)
    _, C = read_matrix(path)
    assert C == z7_hull


def test_sample_hull_file_matches_construction(z7_hull):
    _, C = read_matrix(sample('z7_gf2_hull.txt'))
    assert C.dim == 3 and C.n == 7


def test_parse_matrix_over_gf4():
    F, M = parse_matrix('q=4 n=3 k=1\n1 2 3\n')
    assert F.order == 4 and M.shape == (1, 3)
    assert [int(x) for x in M[0]] == [1, 2, 3]


@pytest.mark.parametrize('text, line', [
    ('', 1),
    ('q=2 n=3\n1 0 1\n', 1),
    ('q=2 n=3 k=1\n1 0\n', 2),
    ('q=2 n=3 k=1\n1 0 2\n', 2),
    ('q=2 n=3 k=2\n1 0 1\n', 2),
])
def test_parse_matrix_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_matrix(text)
    assert info.value.line == line


def test_parse_matrix_reports_the_column():
    with pytest.raises(ParseError) as info:
        parse_matrix('q=2 n=3 k=1\n1 0 x\n')
    assert info.value.column == 5


def test_render_report():
    text = render_report({
        'operation': 'theorem3',
        'ok': True,
        'missing': None,
        'empty': [],
        'nested': {'dim': 3, 'rows': ['1 0', '0 1']},
        'trail': [{'case': 'induced'}],
    })
    assert text == (
        'operation: theorem3\n'
        'ok: true\n'
        'missing: none\n'
        'empty: []\n'
        'nested:\n'
        '  dim: 3\n'
        '  rows:\n'
        '    - 1 0\n'
        '    - 0 1\n'
        'trail:\n'
        '  -\n'
        '    case: induced\n'
    )


def test_parse_problem_sample():
    with open(sample('z7_gf2.txt')) as handle:
        spec = parse_problem(handle.read())
    assert (spec.q, spec.n, len(spec.generators)) == (2, 7, 1)
    assert spec.extend is False
    F, G, X = spec.build()
    assert G.order == 7 and X.is_transitive
    assert spec.build()[1] is G


def test_problem_round_trip():
    with open(sample('f21_gf2.txt')) as handle:
        spec = parse_problem(handle.read())
    again = parse_problem(format_problem(spec))
    assert format_problem(again) == format_problem(spec)
    assert again.generators == spec.generators


def test_parse_problem_field_forms():
    assert parse_problem('q = 4\nn = 3\ngen = 1 2 0\n').m == 2
    spec = parse_problem('q = 2^2\nn = 3\ngen = 1 2 0\nextend = true\n')
    assert (spec.p, spec.m, spec.extend) == (2, 2, True)


def test_parse_problem_rejects_non_bijection():
    with pytest.raises(ParseError) as info:
        parse_problem('q = 2\nn = 7\ngen = 0 0 1 2 3 4 5\n')
    assert info.value.line == 3


def test_parse_problem_rejects_non_coprime():
    with pytest.raises(ValidationError) as info:
        parse_problem('q = 3\nn = 3\ngen = 1 2 0\n')
    assert info.value.rule == 'coprime'


@pytest.mark.parametrize('text', [
    'n = 3\n',
    'q = 2\ncolour = red\nn = 3\n',
    'q = 2\ngen = 1 0\nn = 2\n',
    'q = two\nn = 3\n',
    'q = 2\nn = 3\nextend = maybe\n',
    'q = 2\nn =\n',
    'q = 2\nn = 3\njunk\n',
])
def test_parse_problem_errors(text):
    with pytest.raises(ParseError):
        parse_problem(text)
