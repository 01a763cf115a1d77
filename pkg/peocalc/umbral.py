#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Umbral images and the formal integration operator.

The operator acts on monomials in formal variables. A ``u`` variable raised
to :math:`\\alpha` evaluates to :math:`\\Gamma(\\alpha)`, a ``v`` variable
raised to :math:`\\alpha` to :math:`1/\\Gamma(\\alpha)`:

.. math::

    \\hat{\\mathbb{I}}(u^{\\alpha}) = \\Gamma(\\alpha), \\qquad
    \\hat{\\mathbb{I}}(v^{\\alpha}) = \\frac{1}{\\Gamma(\\alpha)}.

Monomials on disjoint sets of variables factorize. Sums are evaluated term
by term after a summability test on the tail.

Usage:

>>> alloc = VariableAllocator()
>>> u, v = alloc.u(), alloc.v()
>>> fio_eval(UmbralTerm(1, {u: 3}, {v: 3}))
Fraction(1, 1)
"""

import math
import warnings
from fractions import Fraction
from numbers import Rational

from .errors import ConvergenceError, DiscrepancyWarning, DomainError
from .series_core import gamma, is_pole, rgamma_exact
from .special_functions import DEFAULT_CONFIG, laguerre_exp, mittag_leffler

SUMMABILITY_TOL = 1e-13
TAIL_WINDOW = 10


class VariableAllocator:
    """Hands out fresh umbral variable ids.

    Ids increase monotonically and are shared between u and v variables, so
    two variables from the same allocator are always distinct.
    """

    def __init__(self, start=0):
        self._next = start
        self.kinds = {}

    def _fresh(self, kind):
        vid = self._next
        self._next += 1
        self.kinds[vid] = kind
        return vid

    def u(self):
        """Returns a fresh u (Gamma) variable id."""
        return self._fresh('u')

    def v(self):
        """Returns a fresh v (reciprocal Gamma) variable id."""
        return self._fresh('v')


class UmbralTerm:
    """Coefficient times a monomial in u and v variables.

    Args:
        coeff (number): scalar coefficient.
        u_exps (dict, optional): ``{variable id: exponent}`` for u variables.
        v_exps (dict, optional): ``{variable id: exponent}`` for v variables.

    Raises:
        DomainError: if a variable id is both u and v, or if a u exponent is
            a pole of the Gamma function.
    """

    __slots__ = ('coeff', '_u', '_v')

    def __init__(self, coeff=1, u_exps=None, v_exps=None):
        u_exps = dict(u_exps or {})
        v_exps = dict(v_exps or {})
        common = set(u_exps) & set(v_exps)
        if common:
            raise DomainError(f'Variables {sorted(common)} used both as u and v.')
        for vid, e in u_exps.items():
            if is_pole(e):
                raise DomainError(f'u variable {vid} has exponent {e}, a pole of Gamma.')
        self.coeff = coeff
        self._u = tuple(sorted(u_exps.items()))
        self._v = tuple(sorted(v_exps.items()))

    @property
    def u_exps(self):
        return dict(self._u)

    @property
    def v_exps(self):
        return dict(self._v)

    @property
    def variables(self):
        """Set of variable ids the monomial depends on."""
        return {vid for vid, _ in self._u} | {vid for vid, _ in self._v}

    def __mul__(self, other):
        if not isinstance(other, UmbralTerm):
            return UmbralTerm(self.coeff*other, self.u_exps, self.v_exps)
        u = self.u_exps
        for vid, e in other._u:
            u[vid] = u.get(vid, 0) + e
        v = self.v_exps
        for vid, e in other._v:
            v[vid] = v.get(vid, 0) + e
        return UmbralTerm(self.coeff*other.coeff, u, v)

    __rmul__ = __mul__

    def __repr__(self):
        mono = ' '.join([f'u{vid}^{e}' for vid, e in self._u] + [f'v{vid}^{e}' for vid, e in self._v])
        return f'UmbralTerm({self.coeff} {mono})'


class UmbralSum:
    """Sum of umbral terms.

    Args:
        terms (iterable): UmbralTerm instances.
        exhaustive (bool, optional): True if the terms are the whole family
            (a finite sum). Otherwise they are the leading part of an infinite
            family and the tail must pass the summability test.
    """

    def __init__(self, terms, exhaustive=False):
        self.terms = tuple(terms)
        self.exhaustive = exhaustive

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)


def _gamma_exact(z):
    if isinstance(z, Rational) and Fraction(z).denominator == 1 and z > 0:
        return Fraction(math.factorial(int(z) - 1))
    return gamma(z)


def fio_eval(term):
    r"""Formal integration of a single umbral monomial.

    .. math:: c\prod_u \Gamma(e_u)\prod_v \frac{1}{\Gamma(e_v)}

    Integer exponents are evaluated with exact factorials.

    Args:
        term (UmbralTerm): monomial.

    Returns:
        number.
    """
    value = term.coeff
    for _, e in term._u:
        value = value*_gamma_exact(e)
    for _, e in term._v:
        value = value*rgamma_exact(e)
    return value


def tail_bound(magnitudes):
    """Geometric tail estimate of a decreasing sequence of magnitudes.

    A ratio is fitted over the last :data:`TAIL_WINDOW` values.

    Args:
        magnitudes (list): magnitudes sorted in decreasing order.

    Returns:
        float. ``inf`` if the fitted ratio is not below one.
    """
    if not magnitudes:
        return 0.0
    window = magnitudes[-TAIL_WINDOW:]
    last = window[-1]
    if last == 0:
        return 0.0
    if len(window) < 2 or window[0] == 0:
        return math.inf
    ratio = (last/window[0])**(1/(len(window) - 1))
    if ratio >= 1:
        return math.inf
    return last*ratio/(1 - ratio)


def fio_eval_series(s, full_output=False):
    """Formal integration of an umbral sum.

    Terms are evaluated individually and summed from the largest magnitude
    down. Non-exhaustive sums must pass the summability test: the geometric
    tail bound has to stay below ``1e-13*max(1, |sum|)``.

    Args:
        s (UmbralSum): sum of monomials.
        full_output (bool, optional): if True, returns ``(value, tail_bound)``.

    Returns:
        number.

    Raises:
        ConvergenceError: if the summability test fails.
    """
    values = [fio_eval(t) for t in s.terms]
    order = sorted(range(len(values)), key=lambda i: abs(values[i]), reverse=True)
    total = 0
    for i in order:
        total = total + values[i]
    if s.exhaustive:
        tail = 0.0
    else:
        tail = tail_bound([float(abs(values[i])) for i in order])
        if not tail < SUMMABILITY_TOL*max(1.0, float(abs(total))):
            raise ConvergenceError(f'Umbral sum failed the summability test (tail bound {tail:.3g}).')
    return (total, tail) if full_output else total


def pochhammer(a, n):
    r"""Rising factorial :math:`(a)_n = \hat{\mathbb{I}}(u^{a+n}v^{a})`."""
    alloc = VariableAllocator()
    return fio_eval(UmbralTerm(1, {alloc.u(): a + n}, {alloc.v(): a}))


# %% images of special functions
def _exact_coeff(x, r, denominator):
    if isinstance(x, Rational):
        return Fraction(x)**r/denominator
    return x**r/denominator


def laguerre_exp_image(x, n_terms=60):
    r"""Umbral image :math:`{}_le(x) = \hat{\mathbb{I}}(v e^{vx})`.

    Returns:
        UmbralSum with terms :math:`\frac{x^r}{r!} v^{r+1}`.
    """
    v = VariableAllocator().v()
    return UmbralSum(UmbralTerm(_exact_coeff(x, r, math.factorial(r)), v_exps={v: r + 1})
                     for r in range(n_terms))


def mittag_leffler_image(alpha, beta, x, n_terms=80):
    r"""Umbral image :math:`E_{\alpha,\beta}(x) = \hat{\mathbb{I}}\left(\frac{v^\beta}{1-xv^\alpha}\right)`.

    Returns:
        UmbralSum with terms :math:`x^r v^{\alpha r+\beta}`.
    """
    v = VariableAllocator().v()
    return UmbralSum(UmbralTerm(_exact_coeff(x, r, 1), v_exps={v: alpha*r + beta})
                     for r in range(n_terms))


def hypergeometric_image(alphas, betas, z, n_terms=80):
    r"""Umbral image of the generalized hypergeometric function.

    .. math::

        {}_pF_q(a; b; z) = \sum_{k\geq 0}\frac{\prod_i (a_i)_k}{\prod_j (b_j)_k}\frac{z^k}{k!},
        \qquad (a)_k = \hat{\mathbb{I}}(u^{a+k}v^{a}),\quad
        \frac{1}{(b)_k} = \hat{\mathbb{I}}(u^{b}v^{b+k})

    Each parameter gets its own pair of variables and :math:`1/k!` a further
    v variable.

    Args:
        alphas (list): upper parameters.
        betas (list): lower parameters.
        z (number): argument.
        n_terms (int, optional): number of terms.

    Returns:
        UmbralSum
    """
    alloc = VariableAllocator()
    upper = [(alloc.u(), alloc.v(), a) for a in alphas]
    lower = [(alloc.u(), alloc.v(), b) for b in betas]
    vk = alloc.v()
    terms = []
    for k in range(n_terms):
        u_exps = {}
        v_exps = {vk: k + 1}
        for u, v, a in upper:
            u_exps[u] = a + k
            v_exps[v] = a
        for u, v, b in lower:
            u_exps[u] = b
            v_exps[v] = b + k
        terms.append(UmbralTerm(_exact_coeff(z, k, 1), u_exps, v_exps))
    return UmbralSum(terms)


# %% binomial laws
def laguerre_binomial_pow(n, x, y):
    r"""Laguerre Newton binomial.

    .. math:: (x\oplus_l y)^n = \sum_{s=0}^n \binom{n}{s}^2 x^{n-s}y^s

    Example:
        >>> laguerre_binomial_pow(2, 1, 1)
        6
    """
    return sum(math.comb(n, s)**2*x**(n - s)*y**s for s in range(n + 1))


def laguerre_binomial_image(n, x, y):
    r"""Reshaped umbral form :math:`\hat{\mathbb{I}}(u v_1 v_2 (u(v_1x+v_2y))^n)`.

    Returns:
        exhaustive UmbralSum whose evaluation is :math:`(x\oplus_l y)^n`.
    """
    alloc = VariableAllocator()
    u, v1, v2 = alloc.u(), alloc.v(), alloc.v()
    return UmbralSum((UmbralTerm(math.comb(n, s)*x**(n - s)*y**s,
                                 {u: n + 1}, {v1: n - s + 1, v2: s + 1})
                      for s in range(n + 1)), exhaustive=True)


def _check_poles(*args):
    for z in args:
        if is_pole(z):
            raise DomainError(f'Gamma function has a pole at {z}.')


def ml_binomial_pow(alpha, beta, n, x, y):
    r"""Mittag-Leffler binomial law, as printed.

    .. math::

        (x\oplus_{E_{\alpha,\beta}} y)^n = \sum_{r=0}^n\binom{n}{r}
        \frac{\Gamma(n\alpha+\beta)}{\Gamma(\alpha r+\beta)\Gamma(\alpha(n-r)+\beta)}x^r y^{n-r}

    Raises:
        DomainError: if any Gamma argument is a pole.
    """
    _check_poles(n*alpha + beta)
    total = 0
    top = _gamma_exact(n*alpha + beta)
    for r in range(n + 1):
        _check_poles(alpha*r + beta, alpha*(n - r) + beta)
        weight = math.comb(n, r)*top*rgamma_exact(alpha*r + beta)*rgamma_exact(alpha*(n - r) + beta)
        total = total + weight*x**r*y**(n - r)
    return total


def ml_binomial_image(alpha, beta, n, x, y):
    r"""Umbral form of the Mittag-Leffler binomial.

    Terms :math:`\binom{n}{r}x^r y^{n-r}\,u^{n\alpha+\beta}v_1^{\alpha r+\beta}v_2^{\alpha(n-r)+\beta}`.
    """
    alloc = VariableAllocator()
    u, v1, v2 = alloc.u(), alloc.v(), alloc.v()
    return UmbralSum((UmbralTerm(math.comb(n, r)*x**r*y**(n - r),
                                 {u: n*alpha + beta}, {v1: alpha*r + beta, v2: alpha*(n - r) + beta})
                      for r in range(n + 1)), exhaustive=True)


def laguerre_semigroup_check(x, y, N=40, tol=None, cfg=DEFAULT_CONFIG):
    r"""Residual of :math:`{}_le(x)\,{}_le(y) = {}_le(x\oplus_l y)`.

    The right-hand side is :math:`\sum_{n\leq N}(x\oplus_l y)^n/(n!)^2`.

    Args:
        x (number): first argument.
        y (number): second argument.
        N (int, optional): number of composed terms.
        tol (float, optional): if given, a residual above it is reported
            with a :class:`DiscrepancyWarning`.

    Returns:
        float residual.
    """
    terms = [laguerre_binomial_pow(n, x, y)*Fraction(1, math.factorial(n)**2) for n in range(N + 1)]
    if any(isinstance(t, complex) for t in terms):
        composed = complex(math.fsum(complex(t).real for t in terms), math.fsum(complex(t).imag for t in terms))
    else:
        composed = math.fsum(float(t) for t in terms)
    residual = abs(composed - laguerre_exp(x, cfg)*laguerre_exp(y, cfg))
    if tol is not None and residual > tol:
        warnings.warn(f'Laguerre semigroup residual {residual:.3g} above {tol:.3g}.', DiscrepancyWarning)
    return residual


def laguerre_semigroup_coefficients(n):
    r"""Coefficients of :math:`x^r y^{n-r}` on both sides of the Laguerre semigroup law.

    Returns:
        two lists of Fractions indexed by r, from :math:`{}_le(x){}_le(y)` and
        from :math:`(x\oplus_l y)^n/(n!)^2`.
    """
    product = [Fraction(1, (math.factorial(r)*math.factorial(n - r))**2) for r in range(n + 1)]
    composed = [Fraction(math.comb(n, n - r)**2, math.factorial(n)**2) for r in range(n + 1)]
    return product, composed


def ml_semigroup_coefficients(alpha, beta, r, k):
    r"""Coefficient of :math:`x^r y^k` in the product and in the composed Mittag-Leffler series.

    The product :math:`E_{\alpha,\beta}(x)E_{\alpha,\beta}(y)` gives
    :math:`1/(\Gamma(\alpha r+\beta)\Gamma(\alpha k+\beta))`, while
    :math:`\sum_n (x\oplus_{E_{\alpha,\beta}} y)^n/\Gamma(\alpha n+\beta)`
    carries an extra :math:`\binom{r+k}{r}`.

    Returns:
        tuple ``(product_coeff, composed_coeff)``.
    """
    n = r + k
    product = rgamma_exact(alpha*r + beta)*rgamma_exact(alpha*k + beta)
    weight = math.comb(n, r)*_gamma_exact(n*alpha + beta)*rgamma_exact(alpha*r + beta)*rgamma_exact(alpha*k + beta)
    return product, weight*rgamma_exact(n*alpha + beta)


def ml_semigroup_comparison(alpha, beta, x, y, N=60, cfg=DEFAULT_CONFIG):
    r"""Compare :math:`E_{\alpha,\beta}(x)E_{\alpha,\beta}(y)` with the composed series.

    Args:
        alpha (float): order.
        beta (float): shift.
        x (number): first argument.
        y (number): second argument.
        N (int, optional): number of composed terms.

    Returns:
        tuple ``(product, composed, discrepancy)`` where
        ``discrepancy = composed - product``.
    """
    product = mittag_leffler(alpha, beta, x, cfg)*mittag_leffler(alpha, beta, y, cfg)
    composed = 0
    for n in range(N + 1):
        composed = composed + ml_binomial_pow(alpha, beta, n, x, y)*rgamma_exact(alpha*n + beta)
    composed = complex(composed) if isinstance(composed, complex) else float(composed)
    return product, composed, composed - product
