#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Functions for reading and writing solution files, configurations and tables."""

import json
import warnings
from pathlib import Path

import numpy as np


def _target(filepath, overwrite, default_name):
    """Resolve filepath. Returns None if the file exists and must be kept."""
    filepath = Path(filepath)
    if filepath.is_dir():
        warnings.warn(f'filepath is pointing to a folder. Saving file as {default_name}')
        filepath = filepath/default_name
    if not overwrite and filepath.exists():
        warnings.warn(f'File {filepath} not saved because it already exists.')
        return None
    return filepath


def save_text(string, filepath='./Untitled.txt', overwrite=True):
    """Save text to txt file.

    Args:
        string (str): string to be saved.
        filepath (str or pathlib.Path, optional): path to save file. If no path
            is given, current working directory is used.
        overwrite (bool, optional): if False, an existing file is kept and a
            warning is raised.

    See Also:
        :py:func:`load_text`
    """
    filepath = _target(filepath, overwrite, 'Untitled.txt')
    if filepath is None:
        return
    with open(str(filepath), 'w', newline='\n') as file:
        file.write(string)


def load_text(filepath):
    """Load text from txt file.

    Args:
        filepath (str or pathlib.Path): filepath to load.

    Returns:
        string.

    See Also:
        :py:func:`save_text`
    """
    with Path(filepath).open() as file:
        return file.read()


def save_obj(obj, filepath='./Untitled.json', overwrite=True, pretty_print=True):
    """Save object (dictionary, list, serialized series, etc...) to a json file.

    Args:
        obj (object): json serializable object, e.g., the output of
            :py:meth:`peocalc.series_core.FracSeries.to_dict`.
        filepath (str or pathlib.Path, optional): path to save file.
        overwrite (bool, optional): if False, an existing file is kept and a
            warning is raised.
        pretty_print (bool, optional): indent with 4 spaces.

    See Also:
        :py:func:`load_obj`
    """
    filepath = _target(filepath, overwrite, 'Untitled.json')
    if filepath is None:
        return
    with open(str(filepath), 'w', newline='\n') as file:
        if pretty_print:
            file.write(json.dumps(obj, indent=4, sort_keys=False))
        else:
            file.write(json.dumps(obj))


def _to_int(obj):
    """Change keys of a dictionary from string to int when possible."""
    for key in list(obj.keys()):
        try:
            new_key = int(key)
        except (TypeError, ValueError):
            continue
        if str(new_key) == key:
            obj[new_key] = obj.pop(key)
    return obj


def load_obj(filepath, dict_keys_to_int=False):
    """Load object (dictionary, list, problem configuration, etc...) from a json file.

    Args:
        filepath (str or pathlib.Path): file path to load.
        dict_keys_to_int (bool, optional): If True, it will change ALL
            integer dict keys (even for keys in nested dictionaries) to int,
            e.g., ``obj["2"]`` will turn into ``obj[2]``.

    Returns:
        object.

    See Also:
        :py:func:`save_obj`
    """
    with open(str(Path(filepath)), 'r') as file:
        if dict_keys_to_int:
            return json.load(file, object_hook=_to_int)
        return json.load(file)


def save_data(obj, filepath='./untitled.csv', data_format='%.17g', delimiter=',', overwrite=True):
    r"""Save a dictionary of columns to a csv file.

    The first row holds the column labels (no comment flag), values are
    written with ``data_format`` (17 significant digits by default) and rows
    end with ``\n``.

    Args:
        obj (dict): ``{column label: 1d array}``. Use ``*`` in front of a key
            to do not save it to the file.
        filepath (str, pathlib.Path or file, optional): path to save file, or an
            open text stream such as ``sys.stdout``.
        data_format (str, optional): see `np.savetxt <https://numpy.org/doc/stable/reference/generated/numpy.savetxt.html>`_.
        delimiter (str, optional): The string used to separate values.
        overwrite (bool, optional): if False, an existing file is kept and a
            warning is raised.

    See Also:
        :py:func:`load_data`
    """
    if not hasattr(filepath, 'write'):
        filepath = _target(filepath, overwrite, 'untitled.csv')
        if filepath is None:
            return
    columns = {key: value for key, value in obj.items() if not str(key).startswith('*')}
    header = delimiter.join(str(key) for key in columns)
    table = np.array([np.asarray(v, dtype=float) for v in columns.values()]).transpose()
    np.savetxt(filepath, table, fmt=data_format, delimiter=delimiter, newline='\n', header=header, comments='')


def load_data(filepath, delimiter=','):
    """Load a csv file written by :py:func:`save_data`.

    Args:
        filepath (str or pathlib.Path): path to file.
        delimiter (str, optional): The string used to separate data values.

    Returns:
        Dictionary ``{column label: 1d array}``.

    See Also:
        :py:func:`save_data`.
    """
    data = np.genfromtxt(str(Path(filepath)), delimiter=delimiter, names=True)
    return {name: np.atleast_1d(data[name]) for name in data.dtype.names}
