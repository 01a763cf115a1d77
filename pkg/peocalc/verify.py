#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Identity verification suites.

Each check computes a residual (0 or 1 for exact identities) and passes if
it does not exceed its threshold times a global scale factor. Suites are
run from the command line with ``peocalc verify <suite>``.

Usage:

>>> results = run('series')
>>> all(r.passed for r in results)
True
"""

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.integrate import solve_ivp

from . import peo_solvers as ps
from . import series_core as sc
from . import special_functions as sf
from . import umbral as um
from . import volterra as vn
from . import weyl as wa
from .errors import PeoError

SUITE_NAMES = ('series', 'special', 'umbral', 'weyl', 'peo', 'vn')
SUITES = {name: [] for name in SUITE_NAMES}


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one identity check."""
    suite: str
    name: str
    residual: float
    threshold: float
    passed: bool
    message: str = ''

    def __str__(self):
        status = 'PASS' if self.passed else 'FAIL'
        line = f'{status} {self.suite:8s} {self.name:48s} residual={self.residual:.3e} (<= {self.threshold:.1e})'
        return line + (f'  {self.message}' if self.message else '')


def check(suite, name, threshold=0.0):
    """Register a residual function in a suite."""
    def decorator(func):
        SUITES[suite].append((name, threshold, func))
        return func
    return decorator


def _exact(condition):
    return 0.0 if condition else 1.0


def _rel(a, b):
    return abs(a - b)/max(abs(b), 1e-300)


def _max(values):
    return float(max(values))


# %% series
@check('series', 'laguerre antiderivative is a right inverse')
def _series_antiderivative():
    s = sc.FracSeries({0: 1, 1: Fraction(1, 2), Fraction(3, 2): 2})
    return _exact(sc.laguerre_derivative(sc.laguerre_antiderivative(s)) == s)


@check('series', 'rl derivative inverts rl integral (mu=0.5)', 1e-12)
def _series_rl_inverse():
    s = sc.FracSeries({0: 1, 1: 2.0, 2.5: -1})
    back = sc.rl_derivative(sc.rl_integral(s, 0.5), 0.5)
    return _max(_rel(back.coefficient(e), c) for e, c in s.terms)


@check('series', 'half laguerre derivatives compose (t^3)', 1e-10)
def _series_half_laguerre():
    s = sc.FracSeries({3: 1})
    half = sc.laguerre_fractional_derivative(sc.laguerre_fractional_derivative(s, 0.5), 0.5)
    return _rel(half.coefficient(2), 9)


@check('series', 'bessel change of variable')
def _series_bessel():
    s = sc.laguerre_exp_series(Fraction(-1, 4), order=20, power=2)
    lhs = sc.series_shift(sc.derivative(sc.series_shift(sc.derivative(s), 1)), -1)
    return _exact(lhs.truncate(18) == (-s).truncate(18))


# %% special functions
@check('special', 'le(-(t/2)^2) = J0(t)', 1e-12)
def _special_j0():
    return _max(abs(sf.laguerre_exp(-(t/2)**2) - sf.bessel_j0(t)) for t in (0.5, 1, 2, 5, 10))


@check('special', 'lc, ls = ber, bei at 2 sqrt(x)', 1e-12)
def _special_kelvin():
    return _max(max(abs(sf.laguerre_cos(x) - sf.kelvin_ber(2*math.sqrt(x))),
                    abs(sf.laguerre_sin(x) - sf.kelvin_bei(2*math.sqrt(x)))) for x in (0.5, 1, 2, 5))


@check('special', 'le(x) = I0(2 sqrt(x))', 1e-12)
def _special_i0():
    return _max(_rel(sf.laguerre_exp(x), sf.bessel_i0(2*math.sqrt(x))) for x in (0.25, 1, 4))


@check('special', 'mittag-leffler reductions (exp, cos)', 1e-13)
def _special_ml():
    return max(_rel(sf.mittag_leffler(1, 1, 1.0), math.e), _rel(sf.mittag_leffler(2, 1, -1.0), math.cos(1)))


@check('special', 'mittag-leffler laplace form', 1e-9)
def _special_ml_laplace():
    return _rel(sf.mittag_leffler_laplace(0.5, 1, 0.3), sf.mittag_leffler(0.5, 1, 0.3))


@check('special', 'third order hermite generating function', 1e-12)
def _special_hermite():
    t, x, y = 0.3, 1.1, -0.4
    total = math.fsum(t**n/math.factorial(n)*sf.hermite3(n, x, y) for n in range(41))
    return _rel(total, math.exp(t*x + t**3*y))


# %% umbral
@check('umbral', 'laguerre exponential image', 1e-13)
def _umbral_le():
    return _rel(um.fio_eval_series(um.laguerre_exp_image(0.7)), sf.laguerre_exp(0.7))


@check('umbral', 'mittag-leffler image', 1e-12)
def _umbral_ml():
    return _rel(um.fio_eval_series(um.mittag_leffler_image(0.5, 1, 0.3)), sf.mittag_leffler(0.5, 1, 0.3))


@check('umbral', 'hypergeometric image 2F1(1,1;2;1/2)', 1e-12)
def _umbral_2f1():
    value = um.fio_eval_series(um.hypergeometric_image([1, 1], [2], Fraction(1, 2)))
    return _rel(float(value), 2*math.log(2))


@check('umbral', 'laguerre binomial image', 0.0)
def _umbral_binomial():
    return _exact(um.fio_eval_series(um.laguerre_binomial_image(3, 2, 5)) == um.laguerre_binomial_pow(3, 2, 5))


@check('umbral', 'laguerre semigroup coefficients n<=10')
def _umbral_semigroup_exact():
    return _exact(all(a == b for n in range(11) for a, b in zip(*um.laguerre_semigroup_coefficients(n))))


@check('umbral', 'laguerre semigroup at (0.7, -0.3)', 1e-13)
def _umbral_semigroup():
    return um.laguerre_semigroup_check(0.7, -0.3, 40)


@check('umbral', 'mittag-leffler semigroup binomial excess')
def _umbral_ml_semigroup():
    ok = True
    for r in range(5):
        for k in range(5):
            product, composed = um.ml_semigroup_coefficients(1, 1, r, k)
            ok = ok and composed == math.comb(r + k, r)*product
    return _exact(ok)


# %% weyl algebra
_PARAMS = ((1, 1), (2, -3), (Fraction(1, 2), Fraction(5, 3)))


@check('weyl', 'weyl rule (drift disentanglement)')
def _weyl_rule():
    return _exact(all(wa.weyl_rule_check(a, b, 6) for a, b in _PARAMS))


@check('weyl', 'zassenhaus C2, C3, C4=C5=0 on (d^2, x)')
def _weyl_zassenhaus():
    X, Y = wa.WeylElement.d(2), wa.WeylElement.x()
    c2 = wa.zassenhaus_coeff(X, Y, 2)
    c3 = wa.zassenhaus_coeff(X, Y, 3)
    ok = c2 == wa.commutator(Y, X)/2 and c3 == wa.commutator(c2, X + 2*Y)/3
    ok = ok and not wa.zassenhaus_coeff(X, Y, 4) and not wa.zassenhaus_coeff(X, Y, 5)
    return _exact(ok)


@check('weyl', 'disentangled chain, left/crofton/normal forms')
def _weyl_chain():
    return _exact(all(wa.zassenhaus_chain_check(k, l, 6, form) for k, l in _PARAMS
                      for form in ('left', 'crofton', 'normal')))


@check('weyl', 'crofton-glaisher m=1,2,3')
def _weyl_crofton():
    f = wa.Polynomial([1, -2, 0, 0, 1])
    p = wa.Polynomial([3, 0, 1, 1])
    return _exact(all(wa.crofton_glaisher_check(m, f, p, 5) for m in (1, 2, 3)))


@check('weyl', 'crofton-glaisher regenerates H_n^(3), n<=9')
def _weyl_hermite():
    ok = True
    for n in range(10):
        lhs, _ = wa.crofton_glaisher_sides(3, wa.Polynomial.monomial(n), n//3)
        graded = lhs.apply(wa.Polynomial([1]))
        for r in range(n//3 + 1):
            expected = wa.Polynomial.monomial(n - 3*r, math.factorial(n)//(math.factorial(n - 3*r)*math.factorial(r)))
            ok = ok and graded[r] == expected
    return _exact(ok)


@check('weyl', 'berry rule at alpha=beta=0.1', 1e-10)
def _weyl_berry():
    return wa.berry_rule_check(0.1, 0.1, 6, 40)


@check('weyl', 'berry rule agrees with zassenhaus route', 1e-10)
def _weyl_berry_zassenhaus():
    return wa.berry_zassenhaus_agreement(0.1, 0.1, 6, 40)


# %% solvers
@check('peo', 'laguerre transport residual, deg f <= 8')
def _peo_transport():
    f = wa.Polynomial([1, -1, 2, 0, 3, 1, 0, -2, 1])
    F = ps.solve_laguerre_transport(f, Fraction(3, 2), 8)
    return _exact(not ps.transport_residual(F, Fraction(3, 2)))


@check('peo', 'exp kernel transport is a shift', 1e-12)
def _peo_transport_exp():
    f = wa.Polynomial([1, -1, 2, 0, 3])
    F = ps.solve_transport(f, 0.5, 4, ps.EXP)
    return _rel(F.eval(0.3, 0.7), f(0.3 + 0.5*0.7))


@check('peo', 'drift single and double sums agree', 1e-12)
def _peo_drift_forms():
    rng = np.random.default_rng(0)
    residual = 0.0
    for x, t in rng.uniform(0, 1.5, size=(20, 2)):
        residual = max(residual, _rel(ps.solve_laguerre_drift(1, 1, x, t, form='double'),
                                      ps.solve_laguerre_drift(1, 1, x, t)))
    return residual


@check('peo', 'drift umbral double sum', 1e-12)
def _peo_drift_umbral():
    value = um.fio_eval_series(ps.drift_umbral_image(1, 1, 0.5, 0.8))
    return _rel(ps.solve_laguerre_drift(1, 1, 0.5, 0.8), value)


@check('peo', 'schrodinger hermite recurrence n<=12')
def _peo_hermite():
    return _exact(ps.hermite_recurrence_check(1, Fraction(1, 2), 12)
                  and ps.hermite_recurrence_check(1, Fraction(1, 2), 12, sign=-1))


@check('peo', 'laguerre schrodinger residual through t^10', 1e-12)
def _peo_schrodinger():
    F = ps.solve_laguerre_schrodinger_general(wa.Polynomial([1]), 1, 0.5, 11, method='recurrence')
    return ps.laguerre_schrodinger_residual(F, 1, 0.5).max_abs()


@check('peo', 'fractional schrodinger residual through 9 mu', 1e-12)
def _peo_fractional_schrodinger():
    F = ps.fractional_schrodinger_series(1, 0.5, 0.5, 10)
    return ps.fractional_schrodinger_residual(F, 1, 0.5, 0.5).max_abs()


@check('peo', 'cayley-hamilton vs direct series (20 matrices)', 1e-11)
def _peo_matrix():
    rng = np.random.default_rng(1)
    residual = 0.0
    done = 0
    while done < 20:
        M = ps.Matrix2(rng.uniform(-1, 1, size=(2, 2)))
        lp, lm = M.eigenvalues
        if abs(lp - lm) < 0.1:
            continue
        ch = ps.matrix_laguerre_exp(M, 0.5).entries
        series = ps.matrix_kernel_series(ps.LAGUERRE, M.entries, 0.5)
        residual = max(residual, float(np.max(np.abs(ch - series)))/max(np.linalg.norm(series), 1.0))
        done += 1
    return residual


@check('peo', 'pseudo-rotation matrix', 1e-12)
def _peo_rotation():
    a, b, t = 2.0, 0.5, 0.8
    R = ps.matrix_laguerre_exp([[0, -a], [b, 0]], t).entries
    w = math.sqrt(a*b)*t
    lc, ls = sf.laguerre_cos(w), sf.laguerre_sin(w)
    expected = np.array([[lc, -math.sqrt(a/b)*ls], [math.sqrt(b/a)*ls, lc]])
    return float(np.max(np.abs(R - expected)))


@check('peo', 'mittag-leffler pseudo-eigenfunction residual', 1e-12)
def _peo_pseudo_eigen():
    residual = 0.0
    for mu in (0.3, 0.5, 0.8):
        r = ps.pseudo_eigenfunction_residual([[0.7]], mu, [1.0], 11*mu)
        residual = max([residual] + [float(np.max(np.abs(c))) for _, c in r.terms])
    return residual


# %% Volterra-Neumann
@check('vn', 'f=-t gives le(-(t/2)^2) through t^20')
def _vn_bessel():
    state = vn.laguerre_vn_solve(sc.FracSeries({1: -1}), order=20)
    return _exact(state.partial_sum == sc.laguerre_exp_series(Fraction(-1, 4), 20, power=2))


@check('vn', 'f=-t^2 gives le(-t^3/9) through t^20')
def _vn_monomial():
    state = vn.laguerre_vn_solve(sc.FracSeries({2: -1}), order=20)
    return _exact(state.partial_sum == sc.laguerre_exp_series(Fraction(-1, 9), 20, power=3))


@check('vn', 'cos(t) recursion matches generic iterates')
def _vn_cos():
    R = 6
    state = vn.laguerre_vn_solve(sc.cos_series(2*R + 4), order=2*R + 4)
    return _exact(all(state.iterates[n].truncate(2*R + n) == vn.cos_recursion_iterate(n, R)
                      for n in range(1, 5)))


@check('vn', 'fractional f=-t matches beta product', 1e-12)
def _vn_fractional():
    residual = 0.0
    for alpha in (0.3, 0.7):
        state = vn.fractional_vn_solve(sc.FracSeries({1: -1}), alpha, n_iter=5, order=5*(alpha + 1))
        for n in range(1, 6):
            value = sc.series_eval(state.iterates[n], 0.9)
            residual = max(residual, _rel(value, vn.fractional_vn_monomial_closed_form(n, alpha, 0.9)))
    return residual


@check('vn', 'dyson with constant generator', 1e-12)
def _vn_dyson_constant():
    M = np.array([[0.2, -1.0], [0.5, 0.1]])
    residual = 0.0
    for alpha in (0.4, 1):
        U = vn.dyson_evolution_operator(sc.MatrixSeries.constant(M), alpha, order=8)
        for n in range(int(8/alpha) + 1):
            expected = np.linalg.matrix_power(M, n)*sc.recip_gamma(alpha*n + 1)
            residual = max(residual, float(np.max(np.abs(U.coefficient(alpha*n) - expected))))
    return residual


@check('vn', 'dyson with non-commuting generator', 1e-8)
def _vn_dyson_ivp():
    A = np.array([[0.0, 1.0], [-1.0, 0.0]])
    B = np.array([[0.5, 0.0], [0.0, -0.5]])
    U = vn.dyson_evolution_operator(sc.MatrixSeries({0: A, 1: B}), 1, order=30)
    sol = solve_ivp(lambda t, y: ((A + B*t) @ y.reshape(2, 2)).ravel(), (0, 1), np.eye(2).ravel(),
                    method='DOP853', rtol=1e-13, atol=1e-14)
    return float(np.max(np.abs(sc.series_eval(U, 1.0) - sol.y[:, -1].reshape(2, 2))))


@check('vn', 'kernel convolution equals rl power rule', 1e-8)
def _vn_convolution():
    return _max(_rel(*vn.convolution_power_rule(g, a)) for g, a in
                ((0, 0.5), (1, 0.3), (2.5, 0.7), (0.5, 0.9), (3, 0.2)))


# %% runner
def run(suite='all', tol_scale=1.0):
    """Run one suite, or all of them.

    Args:
        suite (str, optional): suite name or ``'all'``.
        tol_scale (float, optional): factor applied to every threshold.

    Returns:
        list of CheckResult
    """
    if suite == 'all':
        names = SUITE_NAMES
    elif suite in SUITES:
        names = (suite, )
    else:
        raise KeyError(suite)
    results = []
    for name in names:
        for label, threshold, func in SUITES[name]:
            limit = threshold*tol_scale
            with warnings.catch_warnings():
                warnings.simplefilter('ignore')
                try:
                    residual = float(func())
                except PeoError as e:
                    results.append(CheckResult(name, label, math.nan, limit, False, f'{type(e).__name__}: {e}'))
                    continue
            results.append(CheckResult(name, label, residual, limit, residual <= limit))
    return results


def format_report(results):
    """Returns the report text, one line per check plus a summary."""
    lines = [str(r) for r in results]
    failed = sum(not r.passed for r in results)
    lines.append(f'{len(results) - failed}/{len(results)} checks passed')
    return '\n'.join(lines)
