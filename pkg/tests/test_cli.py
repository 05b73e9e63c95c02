"""Test the command-line interface end to end."""

import json
from pathlib import Path

import pytest

from src.cli import main

DIST_FAMILIES = (Path(__file__).parent / 'golden' / 'dist_families.txt').read_text().splitlines()


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_derive(capsys):
    code, out, _ = run(capsys, 'derive', '--grammar', 'dumont', '--word', 'a', '--n', '3')
    assert code == 0
    assert out == 'az^3 + 3axyz + axy^2 + ax^2y\n'


def test_derive_from_rules_file(capsys, tmp_path):
    rules = tmp_path / 'eulerian.rules'
    rules.write_text('x -> x*y\ny -> x*y\n')
    code, out, _ = run(capsys, 'derive', '--grammar-file', str(rules), '--word', 'x', '--n', '3')
    assert code == 0
    assert out == 'xy^3 + 4x^2y^2 + x^3y\n'


def test_derive_json(capsys):
    code, out, _ = run(capsys, 'derive', '--word', 'a*x^-1', '--n', '1', '--json')
    payload = json.loads(out)
    assert code == 0
    assert payload['result'] == 'ax^-1z - ax^-1y'
    assert {tuple(sorted(term['exponents'].items())) for term in payload['terms']} == {
        (('a', 1), ('x', -1), ('y', 1)),
        (('a', 1), ('x', -1), ('z', 1)),
    }


@pytest.mark.parametrize('line', DIST_FAMILIES)
def test_dist_families(capsys, line):
    head, expected = line.split('  ', 1)
    n, spec = head.split(' ')
    code, out, _ = run(capsys, 'dist', '--n', n, '--spec', spec)
    assert code == 0
    assert out == expected + '\n'


def test_gf(capsys, golden):
    code, out, _ = run(capsys, 'gf', '--id', 'exc-drop-fix', '--order', '4')
    assert code == 0
    assert out == golden('gf_exc_drop_fix_order4.txt')


def test_gf_enumeration_json(capsys):
    code, out, _ = run(capsys, 'gf', '--id', 'asc-suc', '--order', '3', '--source', 'enumeration', '--json')
    payload = json.loads(out)
    assert code == 0
    assert payload['mismatches'] == []
    assert payload['coefficients'][2] == 'x + 2x^2 + 2x^2z + x^3z^2'


def test_map_closing_example(capsys, golden):
    code, out, _ = run(capsys, 'map', '--perm', '1 6 3 2 4 5')
    assert code == 0
    assert out == golden('map_closing_example.txt')


def test_map_inverse_and_trace(capsys):
    code, out, _ = run(capsys, 'map', '--perm', '1 6 4 2 5 3', '--inverse', '--trace', '--json')
    payload = json.loads(out)
    assert code == 0
    assert payload['output'] == '1 6 3 2 4 5'
    assert payload['F'] == [1, 5]
    assert len(payload['trace']) == 6
    assert payload['trace'][-1]['tree'] == '(1 z (2 (3 (6 x y) (4 x y)) (5 z a)))'


def test_map_table(capsys, golden):
    code, out, _ = run(capsys, 'map', '--table', '3')
    assert code == 0
    assert out == golden('table_n3.txt')


def test_label(capsys):
    code, out, _ = run(capsys, 'label', '--perm', '1 6 3 2 4 5', '--history')
    assert code == 0
    assert out.splitlines() == [
        '0 z 1 x 6 a 3 y 2 x 4 z 5 y',
        'weight: ax^2y^2z^2',
        'insert 2 at slot 2 (a)',
        'insert 3 at slot 2 (z)',
        'insert 4 at slot 4 (y)',
        'insert 5 at slot 5 (a)',
        'insert 6 at slot 2 (x)',
    ]


def test_tree_encode_and_decode(capsys, golden):
    code, out, _ = run(capsys, 'tree', '--cycles', '(1 8 4 9 6)(2)(3 5)(7)')
    assert code == 0
    assert out == golden('tree_example.txt')

    tree_text = out.splitlines()[0]
    code, decoded, _ = run(capsys, 'tree', '--decode', tree_text)
    assert code == 0
    assert decoded == out


def test_verify_passes(capsys):
    code, out, _ = run(capsys, 'verify', '--suite', 'identities', '--max-n', '4')
    assert code == 0
    assert out.splitlines()[0] == 'Verification report: suite=identities, max_n=4'
    assert 'Summary: 7 checks, 7 passed, 0 failed' in out


def test_verify_save(capsys, tmp_path):
    config_path = tmp_path / 'config.yml'
    config_path.write_text(f"output:\n    report_dir: {tmp_path / 'reports'}\n")
    code, _, err = run(capsys, '--config', str(config_path), 'verify', '--suite', 'bijection',
                       '--max-n', '3', '--save')
    assert code == 0
    assert 'HTML report' in err
    assert len(list((tmp_path / 'reports').glob('verification_*.html'))) == 1


def test_json_output_from_config(capsys, sample_config_file):
    code, out, _ = run(capsys, '--config', str(sample_config_file), 'dist', '--n', '2', '--spec', 'exc:x')
    assert code == 0
    assert json.loads(out)['result'] == '1 + x'


@pytest.mark.parametrize('argv', [
    ['verify', '--max-n', '9'],
    ['verify', '--max-n', '3', '--workers', '0'],
    ['dist', '--n', '10', '--spec', 'exc:x'],
    ['dist', '--n', '3', '--spec', 'peak:x'],
    ['derive', '--word', '(a', '--n', '1'],
    ['derive', '--n', '13'],
    ['gf', '--id', 'fxz'],
    ['gf', '--id', 'constant-ax', '--source', 'enumeration'],
    ['map', '--perm', '1 1 2'],
    ['tree', '--cycles', '(1 2)(2)'],
    ['tree', '--decode', '(1 x a)'],
    ['--config', '/nonexistent/config.yml', 'dist', '--n', '1', '--spec', 'exc:x'],
])
def test_input_errors_exit_with_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith('error: ')


def test_usage_errors_exit_with_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(['verify', '--suite', 'everything'])
    assert exc.value.code == 2


def test_trivial_invocations(capsys):
    code, out, _ = run(capsys, 'derive', '--grammar', 'dumont-b', '--word', 'a*b', '--n', '1')
    assert (code, out) == (0, 'axy + abz\n')
    code, out, _ = run(capsys, 'map', '--perm', '1')
    assert out.splitlines()[0] == '1  =  (1)'
    code, out, _ = run(capsys, 'gf', '--id', 'jump-lsuc', '--order', '0')
    assert out.splitlines()[-1] == '0: 1 [ok]'
    code, out, _ = run(capsys, 'dist', '--n', '0', '--spec', 'exc:x')
    assert out == '1\n'
