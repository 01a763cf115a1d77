#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Grid helpers for tabulated functions (``plot-trig`` tables and figures)."""

import numpy as np


def index(x, value):
    """Position of the grid point nearest to ``value``.

    Used to locate the origin or a reported zero on a tabulated grid.

    Args:
        x (list or array): 1D grid.
        value (float): abscissa to look up.

    Returns:
        int

    Examples:

        >>> index([-0.1, 0.0, 0.1], 0.04)
        1
    """
    return int(np.argmin(np.abs(np.array(x) - value)))


def choose(x, ranges):
    """Boolean mask of grid points that fall in one or more closed windows.

    Args:
        x (list or array): 1D grid.
        ranges (list): one ``(start, stop)`` window or a list of windows.
            Endpoints are included and overlapping windows are merged.

    Returns:
        1D boolean array, same length as x.
    """
    x = np.asarray(x)
    ranges = np.atleast_2d(ranges)
    mask = np.zeros(x.shape, dtype=bool)
    for x_init, x_final in ranges:
        mask |= (x >= x_init) & (x <= x_final)
    return mask


def extract(x, y, ranges):
    """Restrict a tabulated curve to windows of its abscissa.

    The figure template uses it to cut the part of ls between its first
    negative and first positive zeros.

    Args:
        x (list or array): 1D grid.
        y (list or array): 1D values on the grid.
        ranges (list): windows, as in :func:`choose`.

    Returns:
        tuple ``(x, y)`` of the points kept.

    Examples:

        >>> x = np.linspace(-2, 2, 9)
        >>> x_cut, y_cut = extract(x, np.abs(x), (-0.5, 1))
        >>> print(x_cut)
        [-0.5  0.   0.5  1. ]
        >>> print(y_cut)
        [0.5 0.  0.5 1. ]
    """
    x = np.asarray(x)
    y = np.asarray(y)
    mask = choose(x, ranges)
    return x[mask], y[mask]


def sign_changes(x, y):
    """Returns the x intervals where y changes sign.

    Args:
        x (list or array): 1D increasing array.
        y (list or array): 1D array, same length as x.

    Returns:
        list of pairs ``(x[i], x[i+1])``. An exact zero at ``x[i]`` is
        reported as ``(x[i], x[i])``.

    Examples:

        >>> sign_changes([0, 1, 2, 3], [1, -1, -2, 2])
        [(0, 1), (2, 3)]
    """
    x = np.asarray(x)
    y = np.asarray(y)
    out = []
    for i in range(len(y)):
        if y[i] == 0:
            out.append((x[i].item(), x[i].item()))
        elif i + 1 < len(y) and y[i]*y[i + 1] < 0:
            out.append((x[i].item(), x[i + 1].item()))
    return out
