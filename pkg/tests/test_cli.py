import json
import math
from fractions import Fraction

import pytest
from scipy import special
from scipy.optimize import brentq

from peocalc.cli import main, trig_table
from peocalc.errors import ConfigError
from peocalc.filemanip import load_data, load_obj, save_obj
from peocalc.series_core import FracSeries, series_from_dict
from peocalc.special_functions import laguerre_cos
from peocalc.volterra import laguerre_vn_solve


def _write_config(tmp_path, config, name='config.json'):
    path = tmp_path/name
    save_obj(config, path)
    return path


def _csv_columns(text):
    lines = text.strip().split('\n')
    assert lines[0] == 'x,lc,ls'
    rows = [[float(v) for v in line.split(',')] for line in lines[1:]]
    return {key: [row[i] for row in rows] for i, key in enumerate(('x', 'lc', 'ls'))}


# %% eval
def test_eval_laguerre_exp(capsys):
    assert main(['eval', 'le', '1.0']) == 0
    out = capsys.readouterr().out.split()
    assert float(out[0]) == pytest.approx(special.i0(2.0), rel=1e-13)
    assert out[1].startswith('terms=')


def test_eval_hermite3(capsys):
    assert main(['eval', 'h3', '3', '1.0', '2.0']) == 0
    assert capsys.readouterr().out.strip() == '13'


@pytest.mark.parametrize('argv', [['eval', 'sinc', '1.0'],
                                  ['eval', 'le'],
                                  ['eval', 'le', '1.0', '2.0'],
                                  ['eval', 'le', 'one'],
                                  ['eval', 'ml', '0', '1', '0.5'],
                                  []])
def test_eval_usage_errors(argv, capsys):
    assert main(argv) == 2
    capsys.readouterr()


def test_help(capsys):
    assert main(['--help']) == 0
    assert 'peocalc' in capsys.readouterr().out


def test_eval_pole(capsys):
    assert main(['eval', 'gamma', '0']) == 3
    assert capsys.readouterr().err.startswith('peocalc: ')


# %% plot-trig
def test_plot_trig_stdout(capsys):
    assert main(['plot-trig', '-10', '10', '0.05']) == 0
    captured = capsys.readouterr()
    table = _csv_columns(captured.out)
    i = table['x'].index(0.0)
    assert table['lc'][i] == 1
    assert table['ls'][i] == 0
    assert 'first negative zero of ls: x = ' in captured.err
    assert 'first positive zero of ls: x = ' in captured.err


def test_plot_trig_zeros(capsys):
    main(['plot-trig', '-10', '10', '0.05'])
    zeros = {}
    for line in capsys.readouterr().err.strip().split('\n'):
        label = line.split()[1]
        zeros[label] = float(line.split('=')[-1])
    reference = brentq(lambda x: special.bei(2*math.sqrt(x)), 1, 8, xtol=1e-15)
    assert zeros['positive'] == pytest.approx(reference, abs=1e-8)
    assert zeros['negative'] == pytest.approx(-zeros['positive'], rel=1e-12)


def test_plot_trig_sign_change_brackets_zero(capsys):
    main(['plot-trig', '0', '10', '0.05'])
    captured = capsys.readouterr()
    table = _csv_columns(captured.out)
    zero = float(captured.err.split('first positive zero of ls: x = ')[1].split()[0])
    i = max(k for k, x in enumerate(table['x']) if x <= zero)
    assert table['ls'][i]*table['ls'][i + 1] < 0


def test_plot_trig_out(tmp_path, capsys):
    path = tmp_path/'trig.csv'
    assert main(['plot-trig', '-2', '2', '0.5', '--out', str(path)]) == 0
    assert capsys.readouterr().out == ''
    data = load_data(path)
    assert list(data) == ['x', 'lc', 'ls']
    assert len(data['x']) == 9
    assert data['lc'][2] == pytest.approx(laguerre_cos(-1.0), rel=1e-15)


def test_trig_table_arguments():
    with pytest.raises(ConfigError):
        trig_table(1, -1, 0.1)
    with pytest.raises(ConfigError):
        trig_table(-1, 1, 0)


# %% verify
def test_verify_suite(capsys):
    assert main(['verify', 'series']) == 0
    assert 'checks passed' in capsys.readouterr().out


def test_verify_unknown_suite(capsys):
    assert main(['verify', 'nonsense']) == 2
    assert 'Unknown suite' in capsys.readouterr().err


# %% solve
def test_solve_vn_closed_form(tmp_path, capsys):
    path = _write_config(tmp_path, {'problem': 'vn', 'params': {'f': [[1, -1]], 'order': 12},
                                    'grid': {'t': [0.5, 1.0]}})
    assert main(['solve', str(path)]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result['problem'] == 'vn'
    assert result['closed_form'] == {'expression': 'le(-1/4*t^2)', 'equal': True}
    assert result['residual'] == 0
    t, re, im = result['values'][1]
    assert t == 1.0
    assert re == pytest.approx(special.j0(1.0), abs=1e-9)
    assert im == 0


def test_solve_matrix_rotation(tmp_path, capsys):
    path = _write_config(tmp_path, {'problem': 'matrix', 'params': {'M': [[0, -2], [0.5, 0]]},
                                    'grid': {'t': [0.8]}})
    assert main(['solve', str(path)]) == 0
    result = json.loads(capsys.readouterr().out)
    entries = result['values'][0]['entries']
    assert entries[0][0][0] == pytest.approx(laguerre_cos(0.8), abs=1e-12)
    assert entries[1][1][0] == pytest.approx(laguerre_cos(0.8), abs=1e-12)


def test_solve_degenerate_matrix(tmp_path, capsys):
    path = _write_config(tmp_path, {'problem': 'matrix', 'params': {'M': [[1, 0], [0, 1]]},
                                    'grid': {'t': [0.5]}})
    assert main(['solve', str(path)]) == 3
    assert capsys.readouterr().err.startswith('peocalc: ')


def test_solve_transport(tmp_path, capsys):
    path = _write_config(tmp_path, {'problem': 'transport', 'params': {'f': [0, 0, 1], 'alpha': 1, 'N': 2},
                                    'grid': {'x': [1.0], 't': [1.0]}})
    assert main(['solve', str(path)]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result['residual'] == 0
    assert result['values'] == [[1.0, 1.0, pytest.approx(3.5), 0.0]]


@pytest.mark.parametrize('config', [{'problem': 'heat'},
                                    {'problem': 'vn', 'params': {}},
                                    {'problem': 'vn', 'params': {'f': 'minus t'}},
                                    ['vn']])
def test_solve_bad_config(tmp_path, capsys, config):
    path = _write_config(tmp_path, config)
    assert main(['solve', str(path)]) == 2
    capsys.readouterr()


def test_solve_missing_file(tmp_path, capsys):
    assert main(['solve', str(tmp_path/'missing.json')]) == 2
    assert 'Cannot read configuration' in capsys.readouterr().err


def test_solve_out_is_deterministic(tmp_path, capsys):
    path = _write_config(tmp_path, {'problem': 'fractional-vn', 'params': {'f': [[0, -1]], 'alpha': 0.5,
                                                                          'order': 4},
                                    'grid': {'t': [0.25, 0.5]}})
    out1, out2 = tmp_path/'a.json', tmp_path/'b.json'
    assert main(['solve', str(path), '--out', str(out1)]) == 0
    assert main(['solve', str(path), '--out', str(out2)]) == 0
    assert capsys.readouterr().out == ''
    assert out1.read_text() == out2.read_text()
    assert load_obj(out1)['problem'] == 'fractional-vn'


def test_solve_out_reloads_exactly(tmp_path, capsys):
    path = _write_config(tmp_path, {'problem': 'vn', 'params': {'f': [[1, -1]], 'order': 12}})
    out = tmp_path/'solution.json'
    assert main(['solve', str(path), '--out', str(out)]) == 0
    reloaded = series_from_dict(load_obj(out)['solution'])
    assert reloaded == laguerre_vn_solve(FracSeries({1: -1}), order=12).partial_sum
    assert reloaded.coefficient(12) == Fraction(1, 4**6*720**2)
