import json

import pytest

from piecewise_rsk.__main__ import main


@pytest.fixture
def write_input(tmp_path):
    def write(data):
        path = tmp_path / 'input.json'
        path.write_text(json.dumps(data), encoding='utf-8')
        return str(path)
    return write


def run_json(capsys, argv):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


def test_rsk(capsys, write_input):
    path = write_input([[1, 0, 2], [0, 2, 0], [1, 1, 0]])
    code, result = run_json(capsys, ['rsk', '--in', path])
    assert code == 0
    assert result['P'] == [[1, 1, 2, 2], [2, 3], [3]]
    assert result['GT_Q'] == [[4, 2, 1], [3, 2], [3]]
    assert result['A_hat'] == [[1, 2, 3], [1, 2, 3], [2, 4, 4]]


def test_toggle_and_invert(capsys, write_input):
    code, result = run_json(capsys, ['toggle', '--in', write_input({'shape': [2, 1], 'rows': [[1, 1], [1]]})])
    assert code == 0
    assert result == {'shape': [2, 1], 'rows': [[1, 2], [2]]}

    code, result = run_json(capsys, ['invert', '--in', write_input(result)])
    assert code == 0
    assert result['rows'] == [[1, 1], [1]]


def test_toggle_with_order(capsys, write_input):
    path = write_input([[1, 0], [0, 2]])
    code, result = run_json(capsys, ['toggle', '--in', path, '--order', '[[1,1],[2,1],[1,2],[2,2]]'])
    assert code == 0
    assert result['rows'] == [[0, 1], [1, 3]]


def test_arrays(capsys, write_input):
    code, result = run_json(capsys, ['arrays', '--in', write_input([[1, 0, 2], [0, 2, 0], [1, 1, 0]])])
    assert code == 0
    assert result['octahedron_ok'] is True
    assert {'i': 3, 'j': 3, 'k': 3, 'v': 7} in result['Ubar']


def test_gk_check(capsys, write_input):
    code, result = run_json(capsys, ['gk-check', '--in', write_input([[1, 2], [3]])])
    assert code == 0
    assert result['violations'] == []


def test_gf_and_hlf(capsys):
    code, result = run_json(capsys, ['gf', '[2,1]', '--max-degree', '6', '--brute'])
    assert code == 0
    assert result['product'] == result['brute'] == [1, 2, 3, 5, 7, 9, 12]

    code, result = run_json(capsys, ['hlf', '[2,1]', '--weights', '{"-1": "1", "0": "2", "1": "3"}'])
    assert code == 0
    assert result['sum'] == result['product'] == '1/18'
    assert result['equal'] is True


def test_caps_can_be_raised(capsys):
    assert main(['gf', '[1]', '--max-degree', '41']) == 2
    assert 'exceeds the cap of 40' in capsys.readouterr().err

    code, result = run_json(capsys, ['gf', '[1]', '--max-degree', '41', '--cap-degree', '41'])
    assert code == 0
    assert result['product'] == [1] * 42

    code, result = run_json(capsys, ['gf', '[1]', '--max-degree', '41', '--relaxed'])
    assert code == 0
    assert result['degree'] == 41

    assert main(['gf', '[1]', '--cap-degree', '-1']) == 2


def test_verify(capsys):
    code, result = run_json(capsys, ['verify', 'bijection', '--seed', '1', '--trials', '2', '--max-boxes', '3'])
    assert code == 0
    assert result['ok'] is True
    assert result['suites'][0]['suite'] == 'bijection'


def test_output_file(tmp_path, write_input):
    out = tmp_path / 'out.json'
    assert main(['toggle', '--in', write_input([[2]]), '--out', str(out)]) == 0
    assert json.loads(out.read_text(encoding='utf-8'))['rows'] == [[2]]


def test_error_exit_codes(capsys, tmp_path, write_input):
    bad = tmp_path / 'bad.json'
    bad.write_text('{not json', encoding='utf-8')
    assert main(['toggle', '--in', str(bad)]) == 2
    assert main(['rsk', '--in', write_input([[1, 2], [3]])]) == 2
    assert main(['invert', '--in', write_input([[2, 1]])]) == 3
    assert main(['verify', 'gk', '--max-boxes', '21']) == 2
    assert 'error:' in capsys.readouterr().err


def test_no_subcommand_prints_help(capsys):
    assert main([]) == 0
    assert 'usage' in capsys.readouterr().out
