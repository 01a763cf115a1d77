import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.integrate import solve_ivp
from scipy.special import rgamma

from peocalc.errors import DomainError, TruncationWarning
from peocalc.series_core import (FracSeries, MatrixSeries, cos_series, exp_series, laguerre_exp_series,
                                 series_eval)
from peocalc.volterra import (convolution_power_rule, cos_recursion_coeffs, cos_recursion_iterate, dyson_apply,
                              dyson_evolution_operator, dyson_iterates, fractional_vn_monomial_closed_form,
                              fractional_vn_residual, fractional_vn_solve, laguerre_vn_residual,
                              laguerre_vn_solve)


def _max_abs(s):
    return max((abs(complex(c)) for _, c in s.terms), default=0.0)


# %% Laguerre Volterra-Neumann
def test_laguerre_vn_bessel():
    state = laguerre_vn_solve(FracSeries({1: -1}), order=4)
    assert state.partial_sum == FracSeries({0: 1, 2: Fraction(-1, 4), 4: Fraction(1, 64)})
    state = laguerre_vn_solve(FracSeries({1: -1}), order=20)
    assert state.partial_sum == laguerre_exp_series(Fraction(-1, 4), 20, power=2)


@pytest.mark.parametrize('m, c', [(2, -1), (3, Fraction(1, 2)), (0, 2)])
def test_laguerre_vn_monomial(m, c):
    # f = c t^m gives le(c t^(m+1)/(m+1)^2)
    state = laguerre_vn_solve(FracSeries({m: c}), order=18)
    expected = laguerre_exp_series(Fraction(c)/(m + 1)**2, 18, power=m + 1)
    assert state.partial_sum == expected


def test_laguerre_vn_valuations():
    state = laguerre_vn_solve(FracSeries({1: -1}), order=10)
    assert state.valuations == [0, 2, 4, 6, 8, 10]
    assert state.n_iter == 5


def test_laguerre_vn_residual():
    f = FracSeries({0: 1, 1: Fraction(-1, 3), 2: 2})
    state = laguerre_vn_solve(f, Y0=3, order=12)
    assert not laguerre_vn_residual(state, f, Y0=3)


def test_laguerre_vn_zero_coefficient():
    state = laguerre_vn_solve(FracSeries(), Y0=2)
    assert state.partial_sum == FracSeries({0: 2})
    assert state.n_iter == 0


def test_laguerre_vn_domain():
    with pytest.raises(DomainError):
        laguerre_vn_solve(FracSeries({-1: 1}))


def test_laguerre_vn_truncation_warning():
    with pytest.warns(TruncationWarning):
        laguerre_vn_solve(FracSeries({1: -1}), n_iter=2, order=10)


# %% cos(t) recursion
def test_cos_recursion_first_iterate():
    assert cos_recursion_coeffs(1, 3) == [1, Fraction(1, 2), Fraction(1, 24), Fraction(1, 720)]
    with pytest.raises(ValueError):
        cos_recursion_coeffs(0, 3)


def test_cos_recursion_matches_iterates():
    R = 6
    state = laguerre_vn_solve(cos_series(2*R + 4), order=2*R + 4)
    for n in range(1, 5):
        assert state.iterates[n].truncate(2*R + n) == cos_recursion_iterate(n, R)
    assert cos_recursion_iterate(0, R) == FracSeries({0: 1})


# %% fractional Volterra-Neumann
def test_fractional_vn_alpha_one_is_exponential():
    state = fractional_vn_solve(FracSeries({0: -1}), 1, order=10)
    assert state.partial_sum == exp_series(-1, 10)


@pytest.mark.parametrize('alpha', [0.3, 0.7])
def test_fractional_vn_closed_form(alpha):
    state = fractional_vn_solve(FracSeries({1: -1}), alpha, n_iter=5, order=5*(alpha + 1))
    for n in range(1, 6):
        value = series_eval(state.iterates[n], 0.9)
        assert value == pytest.approx(fractional_vn_monomial_closed_form(n, alpha, 0.9), rel=1e-12)


def test_fractional_vn_constant_is_mittag_leffler():
    # f = -1 gives E_alpha(-t^alpha)
    alpha = 0.5
    state = fractional_vn_solve(FracSeries({0: -1}), alpha, order=15)
    for n in range(8):
        assert state.partial_sum.coefficient(alpha*n) == pytest.approx((-1)**n*rgamma(alpha*n + 1), rel=1e-12)


@pytest.mark.parametrize('form', ['differential', 'fixed-point'])
def test_fractional_vn_residual(form):
    f = FracSeries({1: -1, 0.5: 0.3})
    state = fractional_vn_solve(f, 0.6, Y0=2, order=6)
    assert _max_abs(fractional_vn_residual(state, f, 0.6, Y0=2, form=form)) <= 1e-12


def test_fractional_vn_arguments():
    with pytest.raises(DomainError):
        fractional_vn_solve(FracSeries({0: 1}), 0)
    with pytest.raises(DomainError):
        fractional_vn_solve(FracSeries({0: 1}), 1.5)
    state = fractional_vn_solve(FracSeries({0: 1}), 0.5, order=2)
    with pytest.raises(ValueError):
        fractional_vn_residual(state, FracSeries({0: 1}), 0.5, form='integral')


# %% Dyson series
M_CONST = np.array([[0.2, -1.0], [0.5, 0.1]])


@pytest.mark.parametrize('alpha', [0.4, 1])
def test_dyson_constant_generator(alpha):
    U = dyson_evolution_operator(MatrixSeries.constant(M_CONST), alpha, order=8)
    for n in range(int(8/alpha) + 1):
        expected = np.linalg.matrix_power(M_CONST, n)*rgamma(alpha*n + 1)
        np.testing.assert_allclose(U.coefficient(alpha*n), expected, atol=1e-12)


def test_dyson_literal_constant_generator():
    alpha = 0.5
    U = dyson_evolution_operator(MatrixSeries.constant(M_CONST), alpha, n_iter=3, order=2, variant='literal')
    for n in range(1, 4):
        expected = np.linalg.matrix_power(M_CONST, n)*(rgamma(alpha + 1))**n/math.factorial(n)
        np.testing.assert_allclose(U.coefficient(alpha*n), expected, rtol=1e-8)


def test_dyson_variants_differ_for_fractional_order():
    generator = MatrixSeries.constant(M_CONST)
    recursive = dyson_evolution_operator(generator, 0.5, n_iter=3, order=2)
    literal = dyson_evolution_operator(generator, 0.5, n_iter=3, order=2, variant='literal')
    np.testing.assert_allclose(recursive.coefficient(0.5), literal.coefficient(0.5), rtol=1e-8)
    assert not np.allclose(recursive.coefficient(1.0), literal.coefficient(1.0))


def test_dyson_variants_coincide_for_alpha_one():
    A = np.array([[0.0, 1.0], [-1.0, 0.0]])
    B = np.array([[0.5, 0.0], [0.0, -0.5]])
    generator = MatrixSeries({0: A, 1: B})
    recursive = dyson_evolution_operator(generator, 1, order=4)
    literal = dyson_evolution_operator(generator, 1, order=4, variant='literal')
    np.testing.assert_allclose(series_eval(literal, 0.8), series_eval(recursive, 0.8), atol=1e-13)


def test_dyson_against_ivp():
    A = np.array([[0.0, 1.0], [-1.0, 0.0]])
    B = np.array([[0.5, 0.0], [0.0, -0.5]])
    U = dyson_evolution_operator(MatrixSeries({0: A, 1: B}), 1, order=30)
    sol = solve_ivp(lambda t, y: ((A + B*t) @ y.reshape(2, 2)).ravel(), (0, 1), np.eye(2).ravel(),
                    method='DOP853', rtol=1e-13, atol=1e-14)
    np.testing.assert_allclose(series_eval(U, 1.0), sol.y[:, -1].reshape(2, 2), atol=1e-8)


def test_dyson_arguments():
    generator = MatrixSeries.constant(M_CONST)
    with pytest.raises(DomainError):
        dyson_iterates(generator, 0.5, n_iter=4, variant='literal')
    with pytest.raises(ValueError):
        dyson_iterates(generator, 1, variant='magnus')
    with pytest.raises(DomainError):
        dyson_iterates(generator, 1.2)
    with pytest.raises(DomainError):
        dyson_iterates(MatrixSeries({-0.5: M_CONST}), 1)


def test_dyson_apply():
    U = dyson_evolution_operator(MatrixSeries.constant(M_CONST), 1, order=3)
    Y = dyson_apply(U, [1.0, 0.0])
    np.testing.assert_allclose(Y.coefficient(1), M_CONST[:, :1])
    assert Y.coefficient(0).shape == (2, 1)


@pytest.mark.parametrize('gamma_exp, alpha', [(0, 0.5), (1, 0.3), (2.5, 0.7), (3, 0.2)])
def test_convolution_power_rule(gamma_exp, alpha):
    value, rule = convolution_power_rule(gamma_exp, alpha)
    assert value == pytest.approx(rule, rel=1e-8)
