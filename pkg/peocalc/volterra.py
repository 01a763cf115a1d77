#! /usr/bin/env python3
# -*- coding: utf-8 -*-
r"""Volterra-Neumann and Dyson series.

Time-dependent pseudo-evolution problems are turned into integral equations
and solved by iteration,

.. math:: Y_{n+1} = \hat{K}[f Y_n], \qquad Y_0 = \text{const},

with :math:`\hat{K}` the Laguerre antiderivative or the Riemann-Liouville
integral of order :math:`\alpha`. Iterates are series in t and every
iteration raises the lowest exponent, so a truncation order bounds the
number of iterations needed. The matrix case gives the time-ordered
evolution operator (Dyson series).
"""

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np
from scipy.integrate import quad
from scipy.special import beta as beta_fn
from scipy.special import betainc

from .errors import ConvergenceError, DomainError, TruncationWarning
from .series_core import (FracSeries, MatrixSeries, beta, gamma, laguerre_antiderivative,
                          recip_gamma, rl_derivative, rl_integral)

#: tolerance of the valuation growth guard
VALUATION_TOL = 1e-12
#: largest number of iterations of the literal Dyson variant for alpha < 1
LITERAL_MAX_ITER = 3


@dataclass(frozen=True)
class VNState:
    """Iterates and partial sum of a Volterra-Neumann expansion.

    Args:
        iterates (tuple): :math:`Y_0, Y_1, \\ldots` as FracSeries or MatrixSeries.
        partial_sum (FracSeries): sum of the iterates, truncated at ``order``.
        order (float): truncation order.
    """
    iterates: tuple
    partial_sum: FracSeries
    order: float

    @property
    def n_iter(self):
        return len(self.iterates) - 1

    @property
    def valuations(self):
        """Lowest exponent of each iterate."""
        return [y.valuation for y in self.iterates]


def _constant(Y0, order):
    if isinstance(Y0, np.ndarray):
        return MatrixSeries({0: Y0}, order=order)
    if isinstance(Y0, int):
        Y0 = Fraction(Y0)
    return FracSeries({0: Y0}, order=order)


def _iterate(step, f, Y0, gain, n_iter, order, name):
    """Shared loop: Y_{n+1} = step(f*Y_n), truncated at order, with the valuation guard."""
    if not gain > 0:
        raise DomainError(f'{name}: iterations do not raise the valuation (gain {gain}).')
    if n_iter is None:
        n_iter = int(math.ceil(order/gain)) + 1
    f = f.truncate(order)
    Y = _constant(Y0, order)
    iterates = [Y]
    total = Y
    for n in range(1, n_iter + 1):
        Y = step(f*Y).truncate(order)
        if not Y:
            break
        if Y.valuation < n*gain - VALUATION_TOL:
            raise ConvergenceError(f'{name}: iterate {n} has valuation {Y.valuation} below {n*gain}.')
        iterates.append(Y)
        total = total + Y
    else:
        if n_iter*gain + gain <= order:
            warnings.warn(f'{name}: {n_iter} iterations do not reach order {order}.', TruncationWarning)
    return VNState(tuple(iterates), total, order)


# %% Laguerre
def laguerre_vn_solve(f, Y0=1, n_iter=None, order=10):
    r"""Volterra-Neumann expansion of :math:`{}_l\partial_t Y = f(t)Y`, :math:`Y(0) = Y_0`.

    .. math:: Y_{n+1}(t) = \int_0^t\frac{dt_1}{t_1}\int_0^{t_1}f(t_2)Y_n(t_2)\,dt_2

    Rational inputs give exact rational coefficients.

    Args:
        f (FracSeries): coefficient, exponents > -1.
        Y0 (number, optional): initial value.
        n_iter (int, optional): number of iterations. By default enough to
            reach ``order``.
        order (float, optional): truncation order.

    Returns:
        VNState

    Example:
        >>> state = laguerre_vn_solve(FracSeries({1: -1}), order=4)
        >>> print(state.partial_sum)
        FracSeries(1*t^0 + -1/4*t^2 + 1/64*t^4)
    """
    gain = 1 + f.valuation if f else math.inf
    if not f:
        return VNState((_constant(Y0, order),), _constant(Y0, order), order)
    return _iterate(laguerre_antiderivative, f, Y0, gain, n_iter, order, 'laguerre_vn_solve')


def laguerre_vn_residual(state, f, Y0=1):
    r"""Fixed-point residual :math:`S - \hat{K}[fS] - Y_0`, through the truncation order."""
    S = state.partial_sum
    return (S - laguerre_antiderivative(f*S) - _constant(Y0, math.inf)).truncate(state.order)


def cos_recursion_coeffs(n, R):
    r"""Coefficients :math:`{}_na_r`, r <= R, of the iterates for :math:`f = \cos t`.

    .. math:: {}_1a_r = \frac{1}{(2r)!}, \qquad
        {}_na_r = \sum_{k=0}^{r}\frac{{}_{n-1}a_k}{(2k+n-1)^2\,[2(r-k)]!}

    Returns:
        list of Fraction
    """
    if n < 1:
        raise ValueError(f'n must be a positive integer, got {n}.')
    a = [Fraction(1, math.factorial(2*r)) for r in range(R + 1)]
    for m in range(2, n + 1):
        a = [sum(a[k]/((2*k + m - 1)**2*math.factorial(2*(r - k))) for k in range(r + 1))
             for r in range(R + 1)]
    return a


def cos_recursion_iterate(n, R):
    r"""Iterate :math:`Y_n(t) = \sum_{r\leq R}(-1)^r\frac{{}_na_r}{(2r+n)^2}t^{2r+n}`."""
    if n == 0:
        return FracSeries({0: Fraction(1)})
    a = cos_recursion_coeffs(n, R)
    return FracSeries({2*r + n: (-1)**r*a[r]/(2*r + n)**2 for r in range(R + 1)},
                      order=2*R + n, truncated=True)


# %% fractional
def fractional_vn_solve(f, alpha, Y0=1, n_iter=None, order=10):
    r"""Volterra-Neumann expansion of :math:`\partial_t^\alpha Y = f(t)Y + Y_0 t^{-\alpha}/\Gamma(1-\alpha)`.

    .. math:: Y_{n+1}(t) = \frac{1}{\Gamma(\alpha)}\int_0^t f(\tau)Y_n(\tau)(t-\tau)^{\alpha-1}\,d\tau

    Args:
        f (FracSeries): coefficient, exponents > -1.
        alpha (float): order in (0, 1].
        Y0 (number, optional): initial value.
        n_iter (int, optional): number of iterations.
        order (float, optional): truncation order.

    Returns:
        VNState
    """
    if not 0 < alpha <= 1:
        raise DomainError(f'alpha must lie in (0, 1], got {alpha}.')
    if not f:
        return VNState((_constant(Y0, order),), _constant(Y0, order), order)
    return _iterate(lambda s: rl_integral(s, alpha), f, Y0, alpha + f.valuation, n_iter, order,
                    'fractional_vn_solve')


def fractional_vn_residual(state, f, alpha, Y0=1, form='differential'):
    r"""Residual of a fractional Volterra-Neumann solution.

    ``'differential'``: :math:`\partial_t^\alpha S - fS - Y_0 t^{-\alpha}/\Gamma(1-\alpha)`,
    through ``order - alpha``. ``'fixed-point'``: :math:`S - I^\alpha[fS] - Y_0`,
    through ``order``.
    """
    S = state.partial_sum
    if form == 'differential':
        source = rl_derivative(_constant(Y0, math.inf), alpha)
        return (rl_derivative(S, alpha) - f*S - source).truncate(state.order - alpha)
    if form == 'fixed-point':
        return (S - rl_integral(f*S, alpha) - _constant(Y0, math.inf)).truncate(state.order)
    raise ValueError(f"form must be 'differential' or 'fixed-point', got {form!r}.")


def fractional_vn_monomial_closed_form(n, alpha, t):
    r"""Iterate n for :math:`f(t) = -t`.

    .. math:: Y_n(t) = \left(-\frac{t^{\alpha+1}}{\Gamma(\alpha)}\right)^n
        \prod_{k=0}^{n-1}B(k(\alpha+1)+2, \alpha)
    """
    value = (-t**(alpha + 1)*recip_gamma(alpha))**n
    for k in range(n):
        value *= beta(k*(alpha + 1) + 2, alpha)
    return value


# %% Dyson series
def _float_matrix_series(M):
    terms = [(e, np.asarray(c, dtype=complex if np.iscomplexobj(c) else float)) for e, c in M.terms]
    return MatrixSeries(terms, order=M.order, truncated=M.truncated)


def _simplex_integral(gammas, alpha):
    r"""Integral over :math:`0<s_1<\cdots<s_n<1` of :math:`\prod_j s_j^{\gamma_j}(1-s_j)^{\alpha-1}`."""
    n = len(gammas)
    if alpha == 1:
        value = 1.0
        total = 0.0
        for g in gammas:
            total += g + 1
            value /= total
        return value
    g1 = gammas[0]

    def inner(s):
        return betainc(g1 + 1, alpha, s)*beta_fn(g1 + 1, alpha)

    func = inner
    for g in gammas[1:n - 1]:
        def func(s, prev=func, g=g):
            return quad(lambda x: x**g*(1 - x)**(alpha - 1)*prev(x), 0, s, epsabs=1e-14, epsrel=1e-12,
                        limit=200)[0]
    if n == 1:
        return float(beta_fn(g1 + 1, alpha))
    return quad(func, 0, 1, weight='alg', wvar=(gammas[-1], alpha - 1), epsabs=1e-14, epsrel=1e-12,
                limit=200)[0]


def _literal_term(M, n, alpha, order):
    """n-fold term with every kernel taken at the outer time."""
    out = []
    for combo in product(M.terms, repeat=n):
        gammas = [float(e) for e, _ in combo]
        exponent = sum(gammas) + n*alpha
        if exponent > order + VALUATION_TOL:
            continue
        coeff = np.eye(M.shape[0])
        for _, c in combo:
            coeff = c @ coeff
        out.append((exponent, coeff*_simplex_integral(gammas, alpha)*recip_gamma(alpha)**n))
    return MatrixSeries(out, order=order, truncated=True)


def dyson_iterates(M, alpha=1, n_iter=None, order=8, variant='recursive'):
    r"""Terms :math:`\hat{U}_n` of the fractional Dyson series.

    The ``'recursive'`` variant iterates the integral equation,
    :math:`\hat{U}_{n+1} = I^\alpha[\hat{M}\hat{U}_n]`, so the kernel of each
    nested integral is taken at the next later time. The ``'literal'``
    variant uses :math:`(t-t_j)^{\alpha-1}` with the outer time t for every
    kernel, computing each term by the change of scale :math:`t_j = t s_j`;
    it is limited to :data:`LITERAL_MAX_ITER` iterations when alpha < 1.
    Both coincide for alpha = 1.

    Args:
        M (MatrixSeries): generator, exponents >= 0.
        alpha (float, optional): order in (0, 1].
        n_iter (int, optional): number of terms beyond the identity.
        order (float, optional): truncation order.
        variant (str, optional): ``'recursive'`` or ``'literal'``.

    Returns:
        VNState with MatrixSeries iterates.
    """
    if not 0 < alpha <= 1:
        raise DomainError(f'alpha must lie in (0, 1], got {alpha}.')
    if M and M.valuation < 0:
        raise DomainError('Dyson series needs a generator with exponents >= 0.')
    M = _float_matrix_series(M)
    gain = alpha + (M.valuation if M else 0)
    if n_iter is None:
        n_iter = int(math.ceil(order/gain)) + 1
    size = M.shape[0] if M else 1
    identity = MatrixSeries({0: np.eye(size)}, order=order)
    if variant == 'recursive':
        return _iterate(lambda s: rl_integral(s, alpha), M, np.eye(size), gain, n_iter, order,
                        'dyson_evolution_operator')
    if variant != 'literal':
        raise ValueError(f"variant must be 'recursive' or 'literal', got {variant!r}.")
    if alpha < 1 and n_iter > LITERAL_MAX_ITER:
        raise DomainError(f'Literal Dyson variant is limited to {LITERAL_MAX_ITER} iterations for alpha < 1.')
    iterates = [identity]
    total = identity
    for n in range(1, n_iter + 1):
        U = _literal_term(M, n, alpha, order)
        if not U:
            break
        iterates.append(U)
        total = total + U
    return VNState(tuple(iterates), total, order)


def dyson_evolution_operator(M, alpha=1, n_iter=None, order=8, variant='recursive'):
    r"""Evolution operator :math:`\hat{U}(t) = \sum_n\hat{U}_n(t)` of
    :math:`\partial_t^\alpha\underline{Y} = \hat{M}(t)\underline{Y}+\underline{Y}_0 t^{-\alpha}/\Gamma(1-\alpha)`.

    See :func:`dyson_iterates` for the arguments.

    Returns:
        MatrixSeries
    """
    return dyson_iterates(M, alpha, n_iter, order, variant).partial_sum


def dyson_apply(U, Y0):
    r"""Returns :math:`\hat{U}(t)\underline{Y}_0` as a column MatrixSeries."""
    y = np.asarray(Y0).reshape(-1, 1)
    return MatrixSeries([(e, c @ y) for e, c in U.terms], order=U.order, truncated=U.truncated)


def convolution_power_rule(gamma_exp, alpha, t=1.0):
    r"""Kernel convolution of a monomial by quadrature.

    .. math:: \frac{1}{\Gamma(\alpha)}\int_0^t \tau^\gamma(t-\tau)^{\alpha-1}\,d\tau

    Returns:
        tuple ``(quadrature, power_rule)``, the second from the
        Riemann-Liouville power rule.
    """
    value = quad(lambda x: 1.0, 0, t, weight='alg', wvar=(gamma_exp, alpha - 1))[0]/gamma(alpha)
    rule = gamma(gamma_exp + 1)*recip_gamma(gamma_exp + alpha + 1)*t**(gamma_exp + alpha)
    return value, rule
