import numpy as np

from peocalc.arraymanip import choose, extract, index, sign_changes


def test_index():
    assert index([0, 0.5, 1.0, 1.5], 1.1) == 2
    assert index(np.array([-3, -1, 2]), -10) == 0
    x = np.round(np.arange(-10, 10 + 0.025, 0.05), 12)
    assert x[index(x, 0)] == 0


def test_choose_merges_windows():
    x = np.arange(10)
    assert choose(x, (2, 4)).sum() == 3
    assert choose(x, ((1, 5), (3, 6))).sum() == 6
    assert not choose(x, (9.5, 12)).any()


def test_extract_zero_window():
    x = np.linspace(-2, 2, 9)
    x_cut, y_cut = extract(x, np.abs(x), (-0.5, 1))
    np.testing.assert_array_equal(x_cut, [-0.5, 0, 0.5, 1])
    np.testing.assert_array_equal(y_cut, [0.5, 0, 0.5, 1])


def test_sign_changes():
    assert sign_changes([0, 1, 2, 3], [1, -1, -2, 2]) == [(0, 1), (2, 3)]
    assert sign_changes([-1.0, 0.0, 1.0], [-2.0, 0.0, 3.0]) == [(0.0, 0.0)]
    assert sign_changes([0, 1], [1, 1]) == []
