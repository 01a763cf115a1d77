#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Command line interface.

Subcommands::

    peocalc eval le 1.0
    peocalc solve config.json --out solution.json
    peocalc plot-trig -20 20 0.05 --out trig.csv
    peocalc verify weyl

Exit status is 0 on success, 2 for usage or configuration errors and 3 for
numeric or domain failures.
"""

import argparse
import json
import math
import sys
from fractions import Fraction

import numpy as np
from scipy.optimize import bisect

from . import peo_solvers as ps
from . import series_core as sc
from . import special_functions as sf
from . import volterra as vn
from .arraymanip import sign_changes
from .errors import EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, ConfigError, PeoError, exit_code
from .filemanip import load_obj, save_data, save_obj
from .verify import SUITE_NAMES, format_report, run
from .weyl import Polynomial

DEFAULT_ORDER = 10


# %% eval
def _full(func):
    """Wrap a function that accepts full_output."""
    def wrapped(cfg, *args):
        return func(*args, cfg=cfg, full_output=True)
    return wrapped


def _plain(func):
    def wrapped(cfg, *args):
        return func(*args), None
    return wrapped


#: name: (argument converters, evaluator returning (value, n_terms or None))
EVAL_FUNCTIONS = {
    'le': ((float, ), _full(sf.laguerre_exp)),
    'lenm': ((int, int, float), _full(sf.laguerre_e_nm)),
    'lc': ((float, ), lambda cfg, x: (sf.laguerre_cos(x, cfg), None)),
    'ls': ((float, ), lambda cfg, x: (sf.laguerre_sin(x, cfg), None)),
    'ml': ((float, float, float), _full(sf.mittag_leffler)),
    'h3': ((int, float, float), _plain(sf.hermite3)),
    'j0': ((float, ), _plain(sf.bessel_j0)),
    'ber': ((float, ), _plain(sf.kelvin_ber)),
    'bei': ((float, ), _plain(sf.kelvin_bei)),
    'gamma': ((float, ), _plain(sc.gamma)),
    'rgamma': ((float, ), _plain(sc.recip_gamma)),
}


def _format(value):
    if isinstance(value, complex):
        return f'{value.real:.17g}{value.imag:+.17g}j'
    return f'{value:.17g}'


def cmd_eval(args, cfg):
    """Print a special function value and, when summed, its term count."""
    if args.function not in EVAL_FUNCTIONS:
        raise ConfigError(f'Unknown function {args.function!r}. Choose from {", ".join(EVAL_FUNCTIONS)}.')
    converters, func = EVAL_FUNCTIONS[args.function]
    if len(args.args) != len(converters):
        raise ConfigError(f'{args.function} takes {len(converters)} argument(s), got {len(args.args)}.')
    try:
        values = [conv(a) for conv, a in zip(converters, args.args)]
    except ValueError as e:
        raise ConfigError(f'Bad argument for {args.function}: {e}') from None
    try:
        value, n_terms = func(cfg, *values)
    except ValueError as e:
        if isinstance(e, PeoError):
            raise
        raise ConfigError(f'Bad argument for {args.function}: {e}') from None
    line = _format(value)
    if n_terms is not None:
        line += f' terms={n_terms}'
    print(line)
    return EXIT_OK


# %% config parsing
def _require(params, key):
    if key not in params:
        raise ConfigError(f'Missing parameter {key!r}.')
    return params[key]


def _exact(value):
    """Integers become Fractions so that exact paths stay exact."""
    return Fraction(value) if isinstance(value, int) and not isinstance(value, bool) else value


def _number(value, name='value'):
    """Number or ``[re, im]`` pair."""
    if isinstance(value, bool):
        raise ConfigError(f'{name} must be a number, got {value!r}.')
    if isinstance(value, (int, float)):
        return _exact(value)
    if isinstance(value, list) and len(value) == 2 and all(isinstance(v, (int, float)) for v in value):
        return complex(value[0], value[1]) if value[1] != 0 else _exact(value[0])
    raise ConfigError(f'{name} must be a number or a [re, im] pair, got {value!r}.')


def _polynomial(coeffs, name):
    if not isinstance(coeffs, list) or not coeffs:
        raise ConfigError(f'{name} must be a non-empty list of coefficients.')
    return Polynomial([_number(c, name) for c in coeffs])


def _matrix(value, name):
    try:
        entries = np.array([[complex(_number(v, name)) for v in row] for row in value])
    except TypeError:
        raise ConfigError(f'{name} must be a nested list of numbers.') from None
    if entries.ndim != 2:
        raise ConfigError(f'{name} must be a matrix.')
    return np.real_if_close(entries)


def _series(pairs, name):
    """List of ``[exponent, coefficient]`` pairs."""
    if not isinstance(pairs, list):
        raise ConfigError(f'{name} must be a list of [exponent, coefficient] pairs.')
    try:
        return sc.FracSeries([(_exact(e), _number(c, name)) for e, c in pairs])
    except (TypeError, ValueError):
        raise ConfigError(f'{name} must be a list of [exponent, coefficient] pairs.') from None


def _matrix_series(pairs, name):
    if not isinstance(pairs, list) or not pairs:
        raise ConfigError(f'{name} must be a list of [exponent, matrix] pairs.')
    try:
        return sc.MatrixSeries([(_exact(e), _matrix(m, name)) for e, m in pairs])
    except (TypeError, ValueError):
        raise ConfigError(f'{name} must be a list of [exponent, matrix] pairs.') from None


def _kernel(params):
    kind = params.get('kernel', 'laguerre')
    try:
        if kind == 'mittag-leffler':
            return ps.EigenKernel.mittag_leffler(_require(params, 'mu'))
        return ps.EigenKernel(kind)
    except ValueError as e:
        raise ConfigError(str(e)) from None


def _grid(config, key):
    values = config.get('grid', {}).get(key, [])
    if not isinstance(values, list):
        raise ConfigError(f'grid.{key} must be a list.')
    return [float(v) for v in values]


def _pair(z):
    z = complex(z)
    return [z.real, z.imag]


def _matrix_json(m):
    return [[_pair(v) for v in row] for row in np.atleast_2d(m)]


def _values(config, func):
    """Rows ``[x, t, re, im]`` over the configured grid."""
    return [[x, t] + _pair(func(x, t)) for x in _grid(config, 'x') for t in _grid(config, 't')]


# %% problems
def _solve_transport(config, params, args, cfg):
    f = _polynomial(_require(params, 'f'), 'f')
    alpha = _number(_require(params, 'alpha'), 'alpha')
    kernel = _kernel(params)
    N = int(params.get('N', max(f.degree, 0)))
    F = ps.solve_transport(f, alpha, N, kernel)
    residual = ps.transport_residual(F, alpha, kernel, f)
    return {'solution': F.to_dict(), 'residual': residual.max_abs(), 'values': _values(config, F.eval)}


def _solve_drift(config, params, args, cfg):
    alpha = float(_require(params, 'alpha'))
    beta = float(_require(params, 'beta'))
    form = params.get('form', 'single')
    return {'values': _values(config, lambda x, t: ps.solve_laguerre_drift(alpha, beta, x, t, cfg, form))}


def _solve_schrodinger(config, params, args, cfg):
    phi = _polynomial(params.get('phi', [1]), 'phi')
    alpha = _number(_require(params, 'alpha'), 'alpha')
    beta = _number(_require(params, 'beta'), 'beta')
    N = int(params.get('N', args.order))
    F = ps.solve_laguerre_schrodinger_general(phi, alpha, beta, N, params.get('method', 'operational'))
    residual = ps.laguerre_schrodinger_residual(F, alpha, beta)
    return {'solution': F.to_dict(), 'residual': residual.max_abs(), 'values': _values(config, F.eval)}


def _solve_fractional_schrodinger(config, params, args, cfg):
    f = _polynomial(params.get('f', [1]), 'f')
    alpha = _number(_require(params, 'alpha'), 'alpha')
    beta = _number(_require(params, 'beta'), 'beta')
    mu = float(_require(params, 'mu'))
    N = int(params.get('N', args.order))
    F = ps.solve_fractional_schrodinger_general(f, alpha, beta, mu, N, params.get('variant', 'derived'),
                                                params.get('method', 'operational'))
    residual = ps.fractional_schrodinger_residual(F, alpha, beta, mu, f)
    return {'solution': F.to_dict(), 'residual': residual.max_abs(), 'values': _values(config, F.eval)}


def _solve_matrix(config, params, args, cfg):
    M = ps.Matrix2(_matrix(_require(params, 'M'), 'M'))
    kernel = _kernel(params)
    return {'eigenvalues': [_pair(lam) for lam in M.eigenvalues],
            'values': [{'t': t, 'entries': _matrix_json(ps.matrix_kernel_function(kernel, M, t, cfg).entries)}
                       for t in _grid(config, 't')]}


def _solve_fractional_matrix(config, params, args, cfg):
    M = _matrix(_require(params, 'M'), 'M')
    mu = float(_require(params, 'mu'))
    Y0 = np.asarray([complex(_number(v, 'Y0')) for v in _require(params, 'Y0')])
    method = params.get('method', 'cayley-hamilton')
    values = []
    for t in _grid(config, 't'):
        Y = ps.fractional_matrix_evolution(M, mu, t, np.real_if_close(Y0), cfg, method, args.tol or 1e-10)
        values.append({'t': t, 'Y': [_pair(v) for v in np.ravel(Y)]})
    return {'values': values}


def _solve_vn(config, params, args, cfg):
    f = _series(_require(params, 'f'), 'f')
    Y0 = _number(params.get('Y0', 1), 'Y0')
    order = float(params.get('order', args.order))
    state = vn.laguerre_vn_solve(f, Y0, params.get('n_iter'), order)
    residual = vn.laguerre_vn_residual(state, f, Y0)
    result = {'solution': state.partial_sum.to_dict(),
              'valuations': [float(v) for v in state.valuations],
              'residual': max((abs(complex(c)) for _, c in residual.terms), default=0.0)}
    if len(f) == 1 and Y0 == 1:
        (m, c), = f.terms
        a = c/(m + 1)**2
        reference = sc.laguerre_exp_series(a, order, power=m + 1)
        result['closed_form'] = {'expression': f'le({a}*t^{m + 1})',
                                 'equal': sc.series_allclose(state.partial_sum, reference)}
    result['values'] = [[t] + _pair(sc.series_eval(state.partial_sum, t)) for t in _grid(config, 't')]
    return result


def _solve_fractional_vn(config, params, args, cfg):
    f = _series(_require(params, 'f'), 'f')
    alpha = float(_require(params, 'alpha'))
    Y0 = _number(params.get('Y0', 1), 'Y0')
    order = float(params.get('order', args.order))
    state = vn.fractional_vn_solve(f, alpha, Y0, params.get('n_iter'), order)
    residual = vn.fractional_vn_residual(state, f, alpha, Y0)
    return {'solution': state.partial_sum.to_dict(),
            'valuations': [float(v) for v in state.valuations],
            'residual': max((abs(complex(c)) for _, c in residual.terms), default=0.0),
            'values': [[t] + _pair(sc.series_eval(state.partial_sum, t)) for t in _grid(config, 't')]}


def _solve_dyson(config, params, args, cfg):
    M = _matrix_series(_require(params, 'M'), 'M')
    alpha = float(params.get('alpha', 1))
    order = float(params.get('order', args.order))
    U = vn.dyson_evolution_operator(M, alpha, params.get('n_iter'), order, params.get('variant', 'recursive'))
    result = {'solution': U.to_dict()}
    if 'Y0' in params:
        Y0 = np.asarray([complex(_number(v, 'Y0')) for v in params['Y0']])
        Y = vn.dyson_apply(U, np.real_if_close(Y0))
        result['applied'] = Y.to_dict()
        result['values'] = [{'t': t, 'Y': [_pair(v) for v in np.ravel(sc.series_eval(Y, t))]}
                            for t in _grid(config, 't')]
    return result


SOLVERS = {
    'transport': _solve_transport,
    'drift': _solve_drift,
    'schrodinger': _solve_schrodinger,
    'matrix': _solve_matrix,
    'fractional-matrix': _solve_fractional_matrix,
    'fractional-schrodinger': _solve_fractional_schrodinger,
    'vn': _solve_vn,
    'fractional-vn': _solve_fractional_vn,
    'dyson': _solve_dyson,
}


def solve_config(config, args, cfg):
    """Run the solver named by ``config['problem']``.

    Returns:
        JSON-ready dictionary.

    Raises:
        ConfigError: if the configuration is invalid.
    """
    if not isinstance(config, dict):
        raise ConfigError('Configuration must be a JSON object.')
    problem = config.get('problem')
    if problem not in SOLVERS:
        raise ConfigError(f'Unknown problem {problem!r}. Choose from {", ".join(SOLVERS)}.')
    params = config.get('params', {})
    if not isinstance(params, dict):
        raise ConfigError('params must be a JSON object.')
    try:
        result = SOLVERS[problem](config, params, args, cfg)
    except (KeyError, TypeError) as e:
        raise ConfigError(f'Invalid {problem} configuration: {e}') from None
    except ValueError as e:
        if isinstance(e, PeoError):
            raise
        raise ConfigError(f'Invalid {problem} configuration: {e}') from None
    return {'problem': problem, **result}


def cmd_solve(args, cfg):
    """Solve a configured problem and print or save the JSON result."""
    try:
        config = load_obj(args.config)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f'Cannot read configuration {args.config}: {e}') from None
    result = solve_config(config, args, cfg)
    if args.out:
        save_obj(result, args.out)
    else:
        print(json.dumps(result, indent=4))
    return EXIT_OK


# %% plot
def trig_table(x_min, x_max, step, cfg=sf.DEFAULT_CONFIG):
    """Columns x, lc and ls on the multiples of step inside [x_min, x_max].

    Returns:
        dict of 1d arrays.
    """
    if not x_min < x_max:
        raise ConfigError(f'x_min must be below x_max, got {x_min} and {x_max}.')
    if not step > 0:
        raise ConfigError(f'step must be positive, got {step}.')
    i0 = math.ceil(x_min/step - 1e-9)
    i1 = math.floor(x_max/step + 1e-9)
    x = step*np.arange(i0, i1 + 1)
    lc = np.array([sf.laguerre_cos(v, cfg) for v in x])
    ls = np.array([sf.laguerre_sin(v, cfg) for v in x])
    return {'x': x, 'lc': lc, 'ls': ls}


def ls_zeros(table, cfg=sf.DEFAULT_CONFIG):
    """First negative and first positive zero of ls, refined by bisection.

    Returns:
        tuple ``(negative, positive)``, None where no sign change is found.
    """
    def ls(x):
        return sf.laguerre_sin(x, cfg)

    negative = None
    positive = None
    for a, b in sign_changes(table['x'], table['ls']):
        if a == b == 0:
            continue
        zero = a if a == b else bisect(ls, a, b, xtol=1e-14, rtol=4*np.finfo(float).eps)
        if zero < 0:
            negative = zero
        elif positive is None:
            positive = zero
    return negative, positive


def cmd_plot_trig(args, cfg):
    """Write the x, lc, ls table as CSV and report the zeros of ls on stderr."""
    table = trig_table(args.x_min, args.x_max, args.step, cfg)
    save_data(table, args.out if args.out else sys.stdout)
    negative, positive = ls_zeros(table, cfg)
    for label, zero in (('negative', negative), ('positive', positive)):
        if zero is None:
            print(f'no {label} zero of ls in range', file=sys.stderr)
        else:
            print(f'first {label} zero of ls: x = {zero:.17g}', file=sys.stderr)
    return EXIT_OK


# %% verify
def cmd_verify(args, cfg):
    """Run verification suites; exit 0 only if every check passes."""
    if args.suite != 'all' and args.suite not in SUITE_NAMES:
        raise ConfigError(f'Unknown suite {args.suite!r}. Choose from all, {", ".join(SUITE_NAMES)}.')
    results = run(args.suite, args.tol or 1.0)
    print(format_report(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_NUMERIC


# %% entry point
def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--out', default=None, help='Output file (default: stdout).')
    common.add_argument('--tol', type=float, default=None,
                        help='Relative tolerance of series sums; scale of the thresholds for verify.')
    common.add_argument('--order', type=float, default=DEFAULT_ORDER,
                        help=f'Default truncation order (default: {DEFAULT_ORDER}).')
    common.add_argument('--max-terms', type=int, default=None, dest='max_terms',
                        help='Largest number of terms of a series sum.')

    parser = argparse.ArgumentParser(prog='peocalc', description='Laguerre and fractional operational calculus.')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('eval', parents=[common], help='Evaluate a special function.')
    p.add_argument('function', help=f'One of {", ".join(EVAL_FUNCTIONS)}.')
    p.add_argument('args', nargs='*', help='Function arguments.')
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser('solve', parents=[common], help='Solve a problem described by a JSON file.')
    p.add_argument('config', help='Path to the JSON configuration.')
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser('plot-trig', parents=[common], help='Table of the Laguerre cosine and sine.')
    p.add_argument('x_min', type=float, nargs='?', default=-20.0)
    p.add_argument('x_max', type=float, nargs='?', default=20.0)
    p.add_argument('step', type=float, nargs='?', default=0.05)
    p.set_defaults(func=cmd_plot_trig)

    p = sub.add_parser('verify', parents=[common], help='Run identity checks.')
    p.add_argument('suite', nargs='?', default='all', help=f'all, {", ".join(SUITE_NAMES)}.')
    p.set_defaults(func=cmd_verify)
    return parser


def _config(args):
    try:
        return sf.SeriesEvalConfig(rel_tol=args.tol or sf.DEFAULT_CONFIG.rel_tol,
                                   max_terms=args.max_terms or sf.DEFAULT_CONFIG.max_terms)
    except ValueError as e:
        raise ConfigError(str(e)) from None


def main(argv=None):
    """Command line entry point.

    Args:
        argv (list, optional): arguments, defaults to ``sys.argv[1:]``.

    Returns:
        int exit status.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    try:
        if args.command == 'verify':
            cfg = sf.DEFAULT_CONFIG
        else:
            cfg = _config(args)
        return args.func(args, cfg)
    except PeoError as e:
        print(f'peocalc: {e}', file=sys.stderr)
        return exit_code(e)


if __name__ == '__main__':
    sys.exit(main())
