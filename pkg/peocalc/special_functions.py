#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Special functions of the Laguerre and Mittag-Leffler calculus.

Entire functions are summed from their ascending series following the
truncation policy in :class:`SeriesEvalConfig`. Bessel and Kelvin functions
are implemented separately from the Laguerre exponential, with their own
summation, so they can serve as independent checks.
"""

import cmath
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral, Rational, Real

from scipy.integrate import quad

from .errors import ConvergenceError, DiscrepancyWarning
from .series_core import log_gamma, recip_gamma, rgamma_exact


@dataclass(frozen=True)
class SeriesEvalConfig:
    """Truncation policy for ascending series.

    A sum stops once ``consecutive_small`` successive terms satisfy
    ``|term| <= rel_tol*|partial sum|``.

    Args:
        rel_tol (float, optional): relative size of a negligible term.
        max_terms (int, optional): terms allowed before giving up.
        consecutive_small (int, optional): negligible terms required in a row.
    """
    rel_tol: float = 1e-14
    max_terms: int = 10000
    consecutive_small: int = 3

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError(f'rel_tol must be positive, got {self.rel_tol}.')
        if self.max_terms < 1:
            raise ValueError(f'max_terms must be at least 1, got {self.max_terms}.')
        if self.consecutive_small < 1:
            raise ValueError(f'consecutive_small must be at least 1, got {self.consecutive_small}.')


DEFAULT_CONFIG = SeriesEvalConfig()

# largest term over result beyond which a floating sum is rejected
CANCELLATION_LIMIT = 1e13


def sum_terms(terms, cfg, name, max_ratio=None):
    """Sum an iterator of terms following cfg.

    A partial sum that overflows raises :class:`ConvergenceError`, and so does
    a sum whose largest term exceeds ``max_ratio`` times the result.

    Returns:
        value and number of terms used.
    """
    re_parts = []
    im_parts = []
    partial = 0
    largest = 0.0
    small = 0
    is_complex = False
    for n, term in enumerate(terms):
        if n >= cfg.max_terms:
            raise ConvergenceError(f'{name}: no convergence within {cfg.max_terms} terms.')
        if isinstance(term, complex):
            is_complex = True
            re_parts.append(term.real)
            im_parts.append(term.imag)
        else:
            re_parts.append(term)
        partial += term
        if not cmath.isfinite(partial):
            raise ConvergenceError(f'{name}: partial sum overflowed after {n + 1} terms.')
        largest = max(largest, abs(term))
        if abs(term) <= cfg.rel_tol*abs(partial):
            small += 1
            if small >= cfg.consecutive_small:
                break
        else:
            small = 0
    value = math.fsum(re_parts)
    if is_complex:
        value = complex(value, math.fsum(im_parts))
    if max_ratio is not None and largest > max_ratio*abs(value):
        raise ConvergenceError(f'{name}: terms up to {largest:.3g} cancel to {abs(value):.3g}.')
    return value, n + 1


def _sum_exact(terms, cfg, name):
    """Rational counterpart of :func:`sum_terms`, rounded once."""
    partial = Fraction(0)
    small = 0
    for n, term in enumerate(terms):
        if n >= cfg.max_terms:
            raise ConvergenceError(f'{name}: no convergence within {cfg.max_terms} terms.')
        partial += term
        if abs(term) <= cfg.rel_tol*abs(partial):
            small += 1
            if small >= cfg.consecutive_small:
                break
        else:
            small = 0
    try:
        return float(partial), n + 1
    except OverflowError:
        raise ConvergenceError(f'{name}: value too large for a float.') from None


def _is_exact_integer(value):
    return isinstance(value, Integral) or (isinstance(value, Rational) and Fraction(value).denominator == 1)


def _wright_terms(alpha, beta, x):
    """Terms x^r/(r! Gamma(alpha r + beta)), exact before rounding when possible."""
    exact = _is_exact_integer(alpha) and _is_exact_integer(beta) and isinstance(x, Real)
    if exact:
        xf = Fraction(x)
        power = Fraction(1)
        r = 0
        while True:
            yield float(power*rgamma_exact(alpha*r + beta))
            r += 1
            power *= xf/r
    else:
        power = 1 + 0j if isinstance(x, complex) else 1.0
        r = 0
        while True:
            yield power*recip_gamma(alpha*r + beta)
            r += 1
            power *= x/r


def wright(alpha, beta, x, cfg=DEFAULT_CONFIG, full_output=False):
    r"""Wright function.

    .. math:: W_{\alpha,\beta}(x) = \sum_{r\geq 0}\frac{x^r}{r!\,\Gamma(\alpha r+\beta)}

    :param alpha: non-negative order
    :param beta: shift
    :param x: argument (real or complex)
    :param cfg: :class:`SeriesEvalConfig`
    :param full_output: if True, returns ``(value, n_terms)``
    :return: :math:`W_{\alpha,\beta}(x)`
    """
    value, n = sum_terms(_wright_terms(alpha, beta, x), cfg, 'wright')
    return (value, n) if full_output else value


def laguerre_exp(x, cfg=DEFAULT_CONFIG, full_output=False):
    r"""Laguerre exponential, eigenfunction of :math:`{}_l\partial_x`.

    .. math:: {}_le(x) = \sum_{r\geq 0}\frac{x^r}{(r!)^2} = I_0(2\sqrt{x})

    :param x: argument (real or complex)
    :param cfg: :class:`SeriesEvalConfig`
    :param full_output: if True, returns ``(value, n_terms)``
    :return: :math:`{}_le(x)`

    Example:
        >>> laguerre_exp(0)
        1.0
    """
    return wright(1, 1, x, cfg, full_output)


def laguerre_e_nm(n, m, x, cfg=DEFAULT_CONFIG, full_output=False):
    r"""Two-index Bessel-like function.

    .. math:: {}_le_n^{(m)}(x) = \sum_{r\geq 0}\frac{x^r}{r!\,\Gamma(mr+n+1)}

    :param n: non-negative integer
    :param m: positive integer
    :param x: argument
    :return: :math:`{}_le_n^{(m)}(x)`
    """
    return wright(m, n + 1, x, cfg, full_output)


def laguerre_cos(x, cfg=DEFAULT_CONFIG):
    r"""Laguerre cosine.

    .. math:: {}_lc(x) = \frac{{}_le(ix) + {}_le(-ix)}{2} = \text{ber}(2\sqrt{x})

    :param x: real argument
    :return: :math:`{}_lc(x)`
    """
    return complex(laguerre_exp(complex(0, x), cfg)).real


def laguerre_sin(x, cfg=DEFAULT_CONFIG):
    r"""Laguerre sine.

    .. math:: {}_ls(x) = \frac{{}_le(ix) - {}_le(-ix)}{2i} = \text{bei}(2\sqrt{x})

    The second identity holds for :math:`x \geq 0`; ``ls`` is odd.

    :param x: real argument
    :return: :math:`{}_ls(x)`
    """
    return complex(laguerre_exp(complex(0, x), cfg)).imag


def _real_axis(x):
    """Complex arguments with a zero imaginary part are read as real."""
    return x.real if isinstance(x, complex) and x.imag == 0 else x


def _ml_integral_applies(alpha, beta, x):
    return (isinstance(x, Real) and x < -1 and isinstance(alpha, Real) and alpha < 1
            and isinstance(beta, Real) and beta < 1 + alpha)


def _mittag_leffler_integral(alpha, beta, x):
    r"""Mittag-Leffler function on the negative axis from a real integral.

    .. math:: E_{\alpha,\beta}(x) = \frac{1}{\alpha\pi}\int_0^\infty r^{\frac{1-\beta}{\alpha}}e^{-r^{1/\alpha}}
        \frac{r\sin(\pi(1-\beta)) - x\sin(\pi(1-\beta+\alpha))}{r^2 - 2rx\cos(\alpha\pi) + x^2}\,dr

    valid for :math:`0 < \alpha < 1`, :math:`\beta < 1 + \alpha` and :math:`x < 0`.

    Returns:
        value and number of integrand evaluations.
    """
    alpha, beta, x = float(alpha), float(beta), float(x)
    p = (1 - beta)/alpha
    s1 = math.sin(math.pi*(1 - beta))
    s2 = math.sin(math.pi*(1 - beta + alpha))
    c = math.cos(math.pi*alpha)

    def kernel(r):
        if r <= 0:
            return 0.0
        return r**p*math.exp(-r**(1/alpha))*(r*s1 - x*s2)/(r*r - 2*r*x*c + x*x)

    # exp(-r^(1/alpha)) underflows past r_max
    r_max = 750**alpha
    points = [0.0, -x, r_max] if -x < r_max else [0.0, r_max]
    value = 0.0
    n_eval = 0
    for a, b in zip(points[:-1], points[1:]):
        part, _, info = quad(kernel, a, b, limit=200, epsabs=1e-17, epsrel=1e-13, full_output=1)
        value += part
        n_eval += info['neval']
    return value/(alpha*math.pi), n_eval


def mittag_leffler(alpha, beta, x, cfg=DEFAULT_CONFIG, full_output=False):
    r"""Two-parameter Mittag-Leffler function.

    .. math:: E_{\alpha,\beta}(x) = \sum_{r\geq 0}\frac{x^r}{\Gamma(\alpha r+\beta)}

    Terms where :math:`\Gamma(\alpha r + \beta)` has a pole contribute zero.
    Integer ``alpha`` and ``beta`` with real ``x`` are summed in rational
    arithmetic. For :math:`0 < \alpha < 1`, :math:`\beta < 1 + \alpha` and
    real :math:`x < -1` the alternating series cancels, and the value is
    taken from an integral along the positive axis (see
    :func:`_mittag_leffler_integral`). Any other floating series whose
    largest term exceeds ``1e13`` times the result raises
    :class:`ConvergenceError`.

    :param alpha: positive order
    :param beta: shift
    :param x: argument
    :param full_output: if True, returns ``(value, n)`` with the number of
        terms, or of integrand evaluations on the integral path
    :return: :math:`E_{\alpha,\beta}(x)`

    Example:
        >>> from scipy.special import erfcx
        >>> abs(mittag_leffler(0.5, 1, -10.0) - erfcx(10.0)) < 1e-12
        True
    """
    if not alpha > 0:
        raise ValueError(f'alpha must be positive, got {alpha}.')

    if _is_exact_integer(alpha) and _is_exact_integer(beta) and isinstance(x, Real):
        xf = Fraction(x)

        def exact_terms():
            r = 0
            while True:
                yield xf**r*rgamma_exact(alpha*r + beta)
                r += 1

        value, n = _sum_exact(exact_terms(), cfg, 'mittag_leffler')
    elif _ml_integral_applies(alpha, beta, _real_axis(x)):
        value, n = _mittag_leffler_integral(alpha, beta, _real_axis(x))
        if isinstance(x, complex):
            value = complex(value)
    else:
        def terms():
            power = x**0
            r = 0
            while True:
                yield power*recip_gamma(alpha*r + beta)
                r += 1
                power *= x

        value, n = sum_terms(terms(), cfg, 'mittag_leffler', max_ratio=CANCELLATION_LIMIT)
    return (value, n) if full_output else value


def mittag_leffler_laplace(alpha, beta, x, variant='derived', cfg=DEFAULT_CONFIG, s_max=80.0):
    r"""Mittag-Leffler function from its Laplace form.

    The ``'derived'`` variant integrates

    .. math:: E_{\alpha,\beta}(x) = \int_0^\infty e^{-s} W_{\alpha,\beta}(sx)\,ds,

    which agrees with :func:`mittag_leffler` for moderate :math:`|x|` (up to
    about 1 with the default ``s_max``). The ``'printed'`` variant keeps the
    exponent independent of :math:`s`, so the integral is trivially 1 and the
    result collapses to :math:`W_{\alpha,\beta}(x)`.

    :param variant: ``'derived'`` or ``'printed'``
    :param s_max: upper integration limit standing in for infinity
    :return: value
    """
    if variant == 'printed':
        warnings.warn('Laplace form with an s-independent exponent does not reproduce E_{alpha,beta}.',
                      DiscrepancyWarning)
        return wright(alpha, beta, x, cfg)
    if variant != 'derived':
        raise ValueError(f"variant must be 'derived' or 'printed', got {variant!r}.")

    def integrand(s, part):
        value = complex(wright(alpha, beta, s*x, cfg))*math.exp(-s)
        return value.real if part == 0 else value.imag

    re = quad(integrand, 0, s_max, args=(0,), limit=200, epsabs=1e-15, epsrel=1e-13)[0]
    if isinstance(x, complex):
        im = quad(integrand, 0, s_max, args=(1,), limit=200, epsabs=1e-15, epsrel=1e-13)[0]
        return complex(re, im)
    return re


def hermite3(n, x, y):
    r"""Third order Hermite polynomials.

    .. math:: H_n^{(3)}(x,y) = e^{y\partial_x^3}x^n = n!\sum_{r=0}^{\lfloor n/3\rfloor}\frac{x^{n-3r}y^r}{(n-3r)!\,r!}

    Integer coefficients keep the result exact for exact inputs. For float
    arguments and n > 170 the terms are summed in logarithmic form.

    :param n: non-negative integer degree
    :param x: first argument
    :param y: second argument
    :return: :math:`H_n^{(3)}(x,y)`

    Example:
        >>> hermite3(3, 1, 2)
        13
    """
    if n < 0:
        raise ValueError(f'Degree must be non-negative, got {n}.')
    if n > 170 and (isinstance(x, (float, complex)) or isinstance(y, (float, complex))):
        return _hermite3_log(n, x, y)
    total = 0
    for r in range(n//3 + 1):
        k = math.factorial(n)//(math.factorial(n - 3*r)*math.factorial(r))
        total = total + k*x**(n - 3*r)*y**r
    return total


def _hermite3_log(n, x, y):
    """Terms of :func:`hermite3` from their logarithms, real for real arguments."""
    real = isinstance(x, Real) and isinstance(y, Real)
    terms = []
    for r in range(n//3 + 1):
        p = n - 3*r
        if (x == 0 and p > 0) or (y == 0 and r > 0):
            continue
        log_term = log_gamma(n + 1) - log_gamma(p + 1) - log_gamma(r + 1)
        if real:
            negative = (x < 0 and p % 2 == 1) != (y < 0 and r % 2 == 1)
            if p > 0:
                log_term += p*math.log(abs(x))
            if r > 0:
                log_term += r*math.log(abs(y))
            terms.append(-math.exp(log_term) if negative else math.exp(log_term))
            continue
        if p > 0:
            log_term += p*cmath.log(x)
        if r > 0:
            log_term += r*cmath.log(y)
        terms.append(cmath.exp(log_term))
    if real:
        return math.fsum(terms)
    return complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))


# %% independent oracles
def _exact_series(first, ratio, scale=1):
    """Rational summation helper for the oracles below, rounded once."""
    total = Fraction(0)
    term = first
    k = 0
    while True:
        total += term
        k += 1
        term = ratio(term, k)
        if k > 2 and abs(term) < Fraction(1, 10**20)*(1 + abs(total)):
            break
        if k > 2000:
            break
    return float(total*scale)


def bessel_j0(t):
    r"""Bessel function of the first kind of order zero.

    .. math:: J_0(t) = \sum_{k\geq 0}\frac{(-1)^k}{(k!)^2}\left(\frac{t}{2}\right)^{2k}

    The series is summed exactly in rational arithmetic from the binary value
    of ``t`` and rounded once.

    :param t: real argument
    :return: :math:`J_0(t)`
    """
    q = Fraction(t)**2/4
    return _exact_series(Fraction(1), lambda term, k: -term*q/(k*k))


def kelvin_ber(z):
    r"""Kelvin function ber.

    .. math:: \text{ber}(z) = \sum_{k\geq 0}\frac{(-1)^k}{((2k)!)^2}\left(\frac{z}{2}\right)^{4k}

    :param z: real argument
    :return: :math:`\text{ber}(z)`
    """
    q = Fraction(z)**4/16
    return _exact_series(Fraction(1), lambda term, k: -term*q/((2*k - 1)*(2*k))**2)


def kelvin_bei(z):
    r"""Kelvin function bei.

    .. math:: \text{bei}(z) = \sum_{k\geq 0}\frac{(-1)^k}{((2k+1)!)^2}\left(\frac{z}{2}\right)^{4k+2}

    :param z: real argument
    :return: :math:`\text{bei}(z)`
    """
    q = Fraction(z)**4/16
    return _exact_series(Fraction(z)**2/4, lambda term, k: -term*q/((2*k)*(2*k + 1))**2)


def bessel_i0(z):
    r"""Modified Bessel function :math:`I_0` for complex arguments.

    .. math:: I_0(z) = \sum_{k\geq 0}\frac{1}{(k!)^2}\left(\frac{z}{2}\right)^{2k}

    Oracle for :math:`{}_le(w) = I_0(2\sqrt{w})` and for the Kelvin relation
    :math:`\text{ber}(z) + i\,\text{bei}(z) = I_0(z e^{i\pi/4})`.

    :param z: complex argument
    :return: :math:`I_0(z)`
    """
    q = complex(z)**2/4
    re_parts = []
    im_parts = []
    term = 1 + 0j
    k = 0
    while True:
        re_parts.append(term.real)
        im_parts.append(term.imag)
        k += 1
        term = term*q/(k*k)
        if k > 2 and abs(term) < 1e-18*(1 + abs(complex(sum(re_parts), sum(im_parts)))):
            break
        if k > 2000:
            break
    value = complex(math.fsum(re_parts), math.fsum(im_parts))
    return value.real if not isinstance(z, complex) else value
