import io
import json
from fractions import Fraction

import numpy as np
import pytest

from peocalc.filemanip import load_data, load_obj, load_text, save_data, save_obj, save_text
from peocalc.series_core import FracSeries, series_from_dict


def test_text(tmp_path):
    filepath = tmp_path/'note.txt'
    save_text('first line\nsecond line', filepath)
    assert load_text(filepath) == 'first line\nsecond line'


def test_text_into_folder(tmp_path):
    with pytest.warns(UserWarning):
        save_text('abc', tmp_path)
    assert load_text(tmp_path/'Untitled.txt') == 'abc'


def test_no_overwrite(tmp_path):
    filepath = tmp_path/'note.txt'
    save_text('old', filepath)
    with pytest.warns(UserWarning):
        save_text('new', filepath, overwrite=False)
    assert load_text(filepath) == 'old'


def test_series_through_json(tmp_path):
    filepath = tmp_path/'series.json'
    s = FracSeries({0: 1.0, 0.5: -2.5}, order=2, truncated=True)
    save_obj(s.to_dict(), filepath)
    assert series_from_dict(load_obj(filepath)) == s
    assert load_text(filepath).startswith('{\n    ')


def test_exact_series_through_json(tmp_path):
    filepath = tmp_path/'exact.json'
    s = FracSeries({0: Fraction(1, 3), Fraction(3, 2): Fraction(-22, 7)}, order=Fraction(7, 2))
    save_obj(s.to_dict(), filepath)
    back = series_from_dict(load_obj(filepath))
    assert back == s
    assert back.coefficient(Fraction(3, 2)) == Fraction(-22, 7)
    assert back.order == Fraction(7, 2)


def test_obj_keys_to_int(tmp_path):
    filepath = tmp_path/'obj.json'
    save_obj({'2': {'10': 'a', 'x': 'b'}}, filepath, pretty_print=False)
    assert json.loads(load_text(filepath)) == {'2': {'10': 'a', 'x': 'b'}}
    assert load_obj(filepath, dict_keys_to_int=True) == {2: {10: 'a', 'x': 'b'}}


def test_data(tmp_path):
    filepath = tmp_path/'table.csv'
    x = np.linspace(0, 1, 5)
    save_data({'x': x, 'y': x**2, '*hidden': x}, filepath)
    assert load_text(filepath).splitlines()[0] == 'x,y'
    data = load_data(filepath)
    assert list(data) == ['x', 'y']
    np.testing.assert_array_equal(data['y'], x**2)


def test_data_to_stream():
    stream = io.StringIO()
    save_data({'x': [0.1], 'y': [1/3]}, stream)
    assert stream.getvalue() == 'x,y\n0.10000000000000001,0.33333333333333331\n'
