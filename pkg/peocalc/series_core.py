#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Generalized power series and the Gamma function backbone.

A :class:`FracSeries` is a finite sum :math:`\\sum_i c_i t^{\\gamma_i}` with real
exponents. Every fractional and Laguerre operator of the package acts on it
termwise through the power rules

.. math::

    t^\\gamma \\mapsto \\frac{\\Gamma(\\gamma+1)}{\\Gamma(\\gamma\\pm\\alpha+1)} t^{\\gamma\\pm\\alpha},
    \\qquad
    {}_l\\partial_t\\, t^\\gamma = \\gamma^2 t^{\\gamma-1}.

Coefficients are plain Python numbers (``int``, :class:`fractions.Fraction`,
``float``, ``complex``). Exact inputs stay exact whenever no Gamma function of
a non-integer argument is involved. :class:`MatrixSeries` carries numpy
arrays as coefficients and multiplies them with the matrix product.

Usage:

>>> from peocalc.series_core import FracSeries, laguerre_antiderivative
>>> s = FracSeries({1: 1})
>>> print(laguerre_antiderivative(s))
FracSeries(1/4*t^2)
"""

import cmath
import math
from fractions import Fraction
from numbers import Integral, Rational

import numpy as np

from .errors import DomainError, PoleError
from .weyl import GaussianRational

# %% constants
LANCZOS_G = 7
LANCZOS_COEFFS = (0.99999999999980993,
                  676.5203681218851,
                  -1259.1392167224028,
                  771.32342877765313,
                  -176.61502916214059,
                  12.507343278686905,
                  -0.13857109526572012,
                  9.9843695780195716e-6,
                  1.5056327351493116e-7)
_HALF_LOG_2PI = 0.5*math.log(2*math.pi)

#: relative tolerance for treating two exponents as the same term
EXPONENT_TOL = 1e-12
#: coefficients below this magnitude are underflow and get pruned
PRUNE_THRESHOLD = 1e-300
#: largest integer shift for which Gamma quotients are built exactly
EXACT_RATIO_LIMIT = 400


# %% Gamma function
def _as_scalar(z):
    """Convert Fractions and numpy scalars to plain float/complex/int."""
    if isinstance(z, bool):
        return int(z)
    if isinstance(z, Integral):
        return int(z)
    if isinstance(z, Rational):
        return float(z)
    if isinstance(z, (complex, np.complexfloating)):
        return complex(z)
    return float(z)


def _is_integer_valued(z):
    if isinstance(z, complex):
        return z.imag == 0 and float(z.real).is_integer()
    return float(z).is_integer()


def is_pole(z):
    """Returns True if z is a pole of the Gamma function (0, -1, -2, ...).

    Args:
        z (number): argument.

    Returns:
        bool
    """
    z = _as_scalar(z)
    real = z.real if isinstance(z, complex) else z
    return _is_integer_valued(z) and real <= 0


def _lanczos(z, cm):
    """Lanczos approximation for Re z >= 0.5, returns (value, log value)."""
    z = z - 1
    x = LANCZOS_COEFFS[0]
    for i in range(1, len(LANCZOS_COEFFS)):
        x += LANCZOS_COEFFS[i]/(z + i)
    t = z + LANCZOS_G + 0.5
    log_value = _HALF_LOG_2PI + (z + 0.5)*cm.log(t) - t + cm.log(x)
    return x, t, log_value


def gamma(z):
    r"""Gamma function.

    Lanczos approximation (g=7, 9 coefficients) with the reflection formula

    .. math:: \Gamma(z)\Gamma(1-z) = \frac{\pi}{\sin(\pi z)}

    for :math:`\text{Re}(z) < 0.5`. Positive integers up to 171 go through
    the exact factorial.

    Args:
        z (number): real or complex argument.

    Returns:
        float or complex. ``inf`` when the value overflows.

    Raises:
        PoleError: if z is 0, -1, -2, ...

    Example:
        >>> gamma(5)
        24.0
    """
    z = _as_scalar(z)
    if is_pole(z):
        raise PoleError(f'Gamma function has a pole at {z}.')

    if isinstance(z, complex):
        if z.imag == 0:
            return complex(gamma(z.real))
        if z.real < 0.5:
            return cmath.pi/(cmath.sin(cmath.pi*z)*gamma(1 - z))
        return cmath.exp(_lanczos(z, cmath)[2])

    z = float(z)
    if z.is_integer() and z <= 171:
        return float(math.factorial(int(z) - 1))
    if z < 0.5:
        g = gamma(1 - z)
        if math.isinf(g):
            return 0.0
        return math.pi/(math.sin(math.pi*z)*g)
    if z < 140:
        x, t, _ = _lanczos(z, math)
        return math.sqrt(2*math.pi)*t**(z - 0.5)*math.exp(-t)*x
    try:
        return math.exp(_lanczos(z, math)[2])
    except OverflowError:
        return math.inf


def log_gamma(z):
    r"""Logarithm of the Gamma function.

    For real arguments it returns :math:`\ln|\Gamma(z)|` (as :func:`math.lgamma`),
    for complex arguments a logarithm whose exponential is :math:`\Gamma(z)`.

    Args:
        z (number): argument.

    Returns:
        float or complex.

    Raises:
        PoleError: if z is a pole.
    """
    z = _as_scalar(z)
    if is_pole(z):
        raise PoleError(f'Gamma function has a pole at {z}.')
    if isinstance(z, complex):
        if z.real < 0.5:
            return cmath.log(cmath.pi/cmath.sin(cmath.pi*z)) - log_gamma(1 - z)
        return _lanczos(z, cmath)[2]
    if z < 0.5:
        return math.log(math.pi/abs(math.sin(math.pi*z))) - log_gamma(1 - z)
    return _lanczos(z, math)[2]


def _gamma_sign(x):
    """Sign of Gamma at a real non-pole argument."""
    if x > 0:
        return 1
    return -1 if math.floor(-x) % 2 == 0 else 1


def recip_gamma(z):
    r"""Reciprocal Gamma function :math:`1/\Gamma(z)`.

    It is entire and vanishes exactly at the poles of :math:`\Gamma`.

    Args:
        z (number): argument.

    Returns:
        float or complex.

    Example:
        >>> recip_gamma(-3)
        0.0
    """
    z = _as_scalar(z)
    if is_pole(z):
        return 0j if isinstance(z, complex) else 0.0
    if isinstance(z, complex):
        if z.real > 171:
            return cmath.exp(-log_gamma(z))
        return 1/gamma(z)
    if abs(z) > 171:
        return _gamma_sign(z)*math.exp(-log_gamma(z))
    g = gamma(z)
    return 0.0 if math.isinf(g) else 1/g


def beta(x, y):
    r"""Euler Beta function.

    .. math:: B(x, y) = \frac{\Gamma(x)\Gamma(y)}{\Gamma(x+y)}

    Args:
        x (float): positive argument.
        y (float): positive argument.

    Returns:
        float

    Raises:
        DomainError: if x or y are not positive.

    Example:
        >>> beta(2, 1)
        0.5
    """
    if x <= 0 or y <= 0:
        raise DomainError(f'Beta function requires positive arguments, got ({x}, {y}).')
    x = _as_scalar(x)
    y = _as_scalar(y)
    if x + y < 170:
        return gamma(x)*gamma(y)*recip_gamma(x + y)
    return math.exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y))


def _is_exact(value):
    return isinstance(value, Rational) and not isinstance(value, bool)


def gamma_ratio(a, b):
    r"""Returns :math:`\Gamma(a)/\Gamma(b)`.

    If a and b are exact rationals differing by an integer, the quotient is
    the exact rising (or falling) product, so integer-order operators keep
    rational coefficients.

    Args:
        a (number): numerator argument.
        b (number): denominator argument.

    Returns:
        Fraction, float or complex. Zero if b is a pole.

    Raises:
        PoleError: if a is a pole.
    """
    if is_pole(a):
        raise PoleError(f'Gamma function has a pole at {a}.')
    if _is_exact(a) and _is_exact(b):
        k = Fraction(b) - Fraction(a)
        if k.denominator == 1 and abs(k) <= EXACT_RATIO_LIMIT:
            a = Fraction(a)
            ratio = Fraction(1)
            if k > 0:
                for j in range(int(k)):
                    ratio /= a + j
            else:
                for j in range(1, int(-k) + 1):
                    ratio *= a - j
            return ratio
    if is_pole(b):
        return 0.0
    a = _as_scalar(a)
    b = _as_scalar(b)
    if isinstance(a, complex) or isinstance(b, complex):
        if max(abs(a.real), abs(b.real)) < 170:
            return gamma(a)*recip_gamma(b)
        return cmath.exp(log_gamma(complex(a)) - log_gamma(complex(b)))
    if max(abs(a), abs(b)) < 170:
        return gamma(a)*recip_gamma(b)
    return _gamma_sign(a)*_gamma_sign(b)*math.exp(log_gamma(a) - log_gamma(b))


def rgamma_exact(z):
    """Reciprocal Gamma that stays exact at positive integers.

    Args:
        z (number): argument.

    Returns:
        Fraction for integer-valued rational z, float or complex otherwise.
    """
    if _is_exact(z) and Fraction(z).denominator == 1:
        n = int(z)
        return Fraction(0) if n <= 0 else Fraction(1, math.factorial(n - 1))
    return recip_gamma(z)


# %% exponent helpers
def _normalize_exponent(exponent):
    """Integers and integer-valued floats become Fractions."""
    if isinstance(exponent, bool):
        return Fraction(int(exponent))
    if isinstance(exponent, Rational):
        return Fraction(exponent)
    exponent = float(exponent)
    if exponent.is_integer():
        return Fraction(int(exponent))
    return exponent


def same_exponent(g1, g2):
    """Returns True if two exponents describe the same term.

    Args:
        g1 (number): exponent.
        g2 (number): exponent.

    Returns:
        bool
    """
    if _is_exact(g1) and _is_exact(g2):
        return g1 == g2
    return abs(float(g1) - float(g2)) <= EXPONENT_TOL*max(1.0, abs(float(g1)))


def is_negligible(c):
    """Returns True if a coefficient counts as zero.

    Exact coefficients are zero only when they are exactly zero. Floating
    coefficients are pruned below :data:`PRUNE_THRESHOLD` (underflow).
    """
    if isinstance(c, np.ndarray):
        return all(is_negligible(v) for v in c.flat)
    if _is_exact(c) or getattr(c, 'exact', False):
        return c == 0
    return abs(c) < PRUNE_THRESHOLD


def _abs_array(c):
    """Elementwise magnitude of a scalar, array or exact complex coefficient."""
    if getattr(c, 'exact', False):
        return np.abs(complex(c))
    return np.abs(np.asarray(c, dtype=complex))


def _exceeds(exponent, order):
    return exponent > order and not (math.isfinite(order) and same_exponent(exponent, order))


# %% json helpers
def scalar_to_json(c):
    """Lossless JSON form of a coefficient.

    Exact rationals become ``"p/q"`` strings, Gaussian rationals a pair of
    such strings, floats stay numbers and complex numbers become ``[re, im]``.

    See Also:
        :py:func:`scalar_from_json`
    """
    if isinstance(c, Integral) and not isinstance(c, bool):
        return str(int(c))
    if isinstance(c, Rational):
        return str(Fraction(c))
    if getattr(c, 'exact', False):
        return [str(c.re), str(c.im)]
    if isinstance(c, (complex, np.complexfloating)):
        return [float(c.real), float(c.imag)]
    return float(c)


def scalar_from_json(obj):
    """Inverse of :py:func:`scalar_to_json`."""
    if isinstance(obj, str):
        return Fraction(obj)
    if isinstance(obj, list):
        re, im = obj
        if isinstance(re, str):
            return GaussianRational(Fraction(re), Fraction(im))
        return complex(re, im)
    return obj


def _exponent_to_json(e):
    if _is_exact(e):
        return str(Fraction(e))
    return float(e) if math.isfinite(e) else 'inf'


def _exponent_from_json(obj):
    if obj == 'inf':
        return math.inf
    return Fraction(obj) if isinstance(obj, str) else obj


# %% series classes
class FracSeries:
    """Generalized power series :math:`\\sum_i c_i t^{\\gamma_i}`.

    Instances are immutable. Terms are kept sorted by exponent, exponents
    closer than :data:`EXPONENT_TOL` are merged and negligible coefficients
    are pruned.

    Args:
        terms (dict or iterable, optional): ``{exponent: coefficient}`` or
            pairs ``(exponent, coefficient)``.
        order (float, optional): inclusive truncation order. Terms above it
            are dropped and flag the result as ``truncated``.
        truncated (bool, optional): marks a series known to be truncated.
    """

    __slots__ = ('_terms', '_order', '_truncated')

    def __init__(self, terms=(), order=math.inf, truncated=False):
        if isinstance(terms, dict):
            terms = terms.items()
        pairs = sorted(((_normalize_exponent(e), c) for e, c in terms), key=lambda p: float(p[0]))

        merged = []
        for e, c in pairs:
            if merged and same_exponent(merged[-1][0], e):
                e0, c0 = merged[-1]
                merged[-1] = (e0 if _is_exact(e0) else e, c0 + c)
            else:
                merged.append((e, c))

        if order is None:
            order = math.inf
        order = _normalize_exponent(order) if math.isfinite(order) else math.inf
        kept = []
        for e, c in merged:
            if _exceeds(e, order):
                truncated = True
                continue
            if is_negligible(c):
                continue
            kept.append((e, c))

        self._terms = tuple(kept)
        self._order = order
        self._truncated = bool(truncated)

    def _new(self, terms, order=None, truncated=None):
        """Build a series of the same class."""
        return type(self)(terms,
                          order=self._order if order is None else order,
                          truncated=self._truncated if truncated is None else truncated)

    # basic accessors
    @property
    def terms(self):
        """Tuple of ``(exponent, coefficient)`` pairs, increasing exponents."""
        return self._terms

    @property
    def order(self):
        """Inclusive truncation order."""
        return self._order

    @property
    def truncated(self):
        """True if terms above ``order`` were dropped at some point."""
        return self._truncated

    @property
    def exponents(self):
        return [e for e, _ in self._terms]

    @property
    def coefficients(self):
        return [c for _, c in self._terms]

    @property
    def valuation(self):
        """Lowest exponent (``inf`` for the empty series)."""
        return self._terms[0][0] if self._terms else math.inf

    def coefficient(self, exponent, default=0):
        """Returns the coefficient of :math:`t^{exponent}`."""
        for e, c in self._terms:
            if same_exponent(e, exponent):
                return c
        return default

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __bool__(self):
        return len(self._terms) > 0

    def __repr__(self):
        if not self._terms:
            return f'{type(self).__name__}(0)'
        body = ' + '.join(f'{c}*t^{e}' for e, c in self._terms)
        return f'{type(self).__name__}({body})'

    def _coeff_equal(self, c1, c2):
        return c1 == c2

    def __eq__(self, other):
        if not isinstance(other, FracSeries):
            return NotImplemented
        if len(self) != len(other):
            return False
        for (e1, c1), (e2, c2) in zip(self._terms, other._terms):
            if not same_exponent(e1, e2) or not self._coeff_equal(c1, c2):
                return False
        return True

    __hash__ = None

    # transformations
    def map_terms(self, func, shift=0):
        """Apply ``func(exponent, coefficient) -> (exponent, coefficient)`` termwise.

        Args:
            func (callable): term map.
            shift (float, optional): change of the truncation order.

        Returns:
            series of the same class.
        """
        order = self._order + shift if math.isfinite(self._order) else math.inf
        return self._new([func(e, c) for e, c in self._terms], order=order)

    def truncate(self, order):
        """Drop terms above ``order``."""
        order = min(order, self._order)
        return self._new(self._terms, order=order)

    def scale(self, a):
        """Multiply every coefficient by the scalar ``a``."""
        return self._new([(e, a*c) for e, c in self._terms])

    # arithmetic
    def _coeff_mul(self, c1, c2):
        return c1*c2

    def __add__(self, other):
        if not isinstance(other, FracSeries):
            other = self._new({0: other}, order=math.inf, truncated=False)
        cls = type(other) if isinstance(other, MatrixSeries) else type(self)
        return cls(self._terms + other._terms,
                   order=min(self._order, other._order),
                   truncated=self._truncated or other._truncated)

    __radd__ = __add__

    def __neg__(self):
        return self._new([(e, -c) for e, c in self._terms])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, FracSeries):
            return self.scale(other)
        cls = type(other) if isinstance(other, MatrixSeries) else type(self)
        order = min(self._order, other._order)
        truncated = self._truncated or other._truncated
        product = []
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = e1 + e2
                if _exceeds(e, order):
                    truncated = True
                    continue
                product.append((e, self._coeff_mul(c1, c2) if cls is type(self) else other._coeff_mul(c1, c2)))
        return cls(product, order=order, truncated=truncated)

    def __rmul__(self, other):
        if isinstance(other, FracSeries):
            return other.__mul__(self)
        return self._new([(e, other*c) for e, c in self._terms])

    def __call__(self, t):
        return series_eval(self, t)

    # serialization
    def _coeff_to_json(self, c):
        return scalar_to_json(c)

    @classmethod
    def _coeff_from_json(cls, obj):
        return scalar_from_json(obj)

    def to_dict(self):
        """Returns a JSON-ready dictionary.

        See Also:
            :py:func:`series_from_dict`
        """
        return {'type': type(self).__name__,
                'order': _exponent_to_json(self._order),
                'truncated': self._truncated,
                'terms': [[_exponent_to_json(e), self._coeff_to_json(c)] for e, c in self._terms]}


class MatrixSeries(FracSeries):
    """Series with square (or column) numpy array coefficients.

    The product of two matrix series is the matrix product, left factor first.
    The product with a scalar :class:`FracSeries` multiplies entrywise.
    """

    __slots__ = ()

    def _coeff_equal(self, c1, c2):
        return np.array_equal(np.asarray(c1), np.asarray(c2))

    def _coeff_mul(self, c1, c2):
        if isinstance(c1, np.ndarray) and isinstance(c2, np.ndarray):
            return c1 @ c2
        return c1*c2

    @classmethod
    def identity(cls, n, order=math.inf):
        """Identity matrix series (exact integer entries)."""
        return cls({0: np.eye(n, dtype=int).astype(object)}, order=order)

    @classmethod
    def constant(cls, matrix, order=math.inf):
        """Time independent matrix series."""
        return cls({0: np.asarray(matrix)}, order=order)

    @property
    def shape(self):
        return np.shape(self._terms[0][1]) if self._terms else None

    def entry(self, i, j=0):
        """Returns the scalar series of one entry."""
        return FracSeries([(e, c[i, j]) for e, c in self._terms], order=self._order, truncated=self._truncated)

    def _coeff_to_json(self, c):
        return [[scalar_to_json(v) for v in row] for row in np.asarray(c)]

    @classmethod
    def _coeff_from_json(cls, obj):
        return np.array([[scalar_from_json(v) for v in row] for row in obj])


def series_from_dict(obj):
    """Rebuild a series from :py:meth:`FracSeries.to_dict` output.

    Args:
        obj (dict): serialized series.

    Returns:
        FracSeries or MatrixSeries.
    """
    order = _exponent_from_json(obj.get('order', 'inf'))
    if obj['type'] == 'MatrixSeries':
        terms = [(_exponent_from_json(e), MatrixSeries._coeff_from_json(m)) for e, m in obj['terms']]
        return MatrixSeries(terms, order=order, truncated=obj.get('truncated', False))
    if obj['type'] != 'FracSeries':
        raise ValueError(f"Unknown series type: {obj['type']}")
    terms = [(_exponent_from_json(e), FracSeries._coeff_from_json(c)) for e, c in obj['terms']]
    return FracSeries(terms, order=order, truncated=obj.get('truncated', False))


# %% arithmetic
def series_add(a, b):
    """Exponent-wise sum; truncation order is the smaller of the two."""
    return a + b


def series_mul(a, b):
    """Cauchy product with exponent addition, truncated at the smaller order."""
    return a*b


def series_shift(s, delta):
    r"""Multiplication by :math:`t^\delta`."""
    return s.map_terms(lambda e, c: (e + delta, c), shift=delta)


def series_eval(s, t, full_output=False):
    r"""Evaluate :math:`\sum_i c_i t^{\gamma_i}`.

    Args:
        s (FracSeries): series.
        t (float): non-negative evaluation point.
        full_output (bool, optional): if True, also return the magnitude of the
            highest stored term, the truncation error estimate of a
            truncated series.

    Returns:
        value, or ``(value, error_estimate)`` if full_output is True.

    Raises:
        DomainError: if t is negative, or if t is zero and some exponent is
            negative.
    """
    if t < 0:
        raise DomainError(f'Series are evaluated at t >= 0, got t={t}.')
    if t == 0 and s.valuation < 0:
        raise DomainError('Cannot evaluate a series with negative exponents at t=0.')
    value = 0
    last = 0.0
    for e, c in s.terms:
        if t == 0:
            term = c if e == 0 else 0*c
        elif _is_exact(e) and _is_exact(t):
            term = c*Fraction(t)**e if Fraction(e).denominator == 1 else c*float(t)**float(e)
        else:
            term = c*float(t)**float(e)
        value = value + term
        last = float(np.max(_abs_array(term)))
    if full_output:
        return value, (last if s.truncated else 0.0)
    return value


def series_allclose(a, b, rel=1e-12, floor=1e-14, upto=None):
    """Coefficient-wise comparison contract used throughout the tests.

    Two coefficients match if their difference is at most
    ``max(rel*max(|a_i|, |b_i|), floor)``.

    Args:
        a (FracSeries): series.
        b (FracSeries): series.
        rel (float, optional): relative tolerance.
        floor (float, optional): absolute floor.
        upto (float, optional): only exponents up to this value are compared.
            Defaults to the smaller truncation order.

    Returns:
        bool
    """
    if upto is None:
        upto = min(a.order, b.order)
    for e, d in (a - b).terms:
        if _exceeds(e, upto):
            continue
        ca = _abs_array(a.coefficient(e))
        cb = _abs_array(b.coefficient(e))
        bound = np.maximum(rel*np.maximum(ca, cb), floor)
        if np.any(_abs_array(d) > bound):
            return False
    return True


# %% termwise operators
def _check_integrable(s, name):
    for e, _ in s.terms:
        if e <= -1:
            raise DomainError(f'{name} requires exponents > -1, found t^{e}.')


def rl_integral(s, alpha):
    r"""Riemann-Liouville integral of order alpha.

    .. math:: t^\gamma \mapsto \frac{\Gamma(\gamma+1)}{\Gamma(\gamma+\alpha+1)} t^{\gamma+\alpha}

    Args:
        s (FracSeries): integrand.
        alpha (float): positive order.

    Returns:
        FracSeries

    Raises:
        DomainError: if alpha <= 0 or an exponent is <= -1.
    """
    if alpha <= 0:
        raise DomainError(f'Integral order must be positive, got {alpha}.')
    _check_integrable(s, 'rl_integral')
    return s.map_terms(lambda e, c: (e + alpha, c*gamma_ratio(e + 1, e + alpha + 1)), shift=alpha)


def rl_derivative(s, mu):
    r"""Riemann-Liouville derivative of order mu in (0, 1].

    .. math:: t^\gamma \mapsto \frac{\Gamma(\gamma+1)}{\Gamma(\gamma-\mu+1)} t^{\gamma-\mu}

    In particular :math:`\partial_t^\mu 1 = t^{-\mu}/\Gamma(1-\mu)`. For
    ``mu=1`` it is the ordinary derivative.

    Raises:
        DomainError: if mu is outside (0, 1] or an exponent sits on a Gamma pole.
    """
    if not 0 < mu <= 1:
        raise DomainError(f'Derivative order must lie in (0, 1], got {mu}.')
    for e, _ in s.terms:
        if is_pole(e + 1):
            raise DomainError(f'rl_derivative is undefined on t^{e}.')
    return s.map_terms(lambda e, c: (e - mu, c*gamma_ratio(e + 1, e - mu + 1)), shift=-mu)


def derivative(s):
    r"""Ordinary derivative :math:`t^\gamma \mapsto \gamma t^{\gamma-1}`."""
    return s.map_terms(lambda e, c: (e - 1, e*c), shift=-1)


def laguerre_derivative(s):
    r"""Laguerre derivative :math:`{}_l\partial_t = \partial_t t \partial_t`.

    .. math:: t^\gamma \mapsto \gamma^2 t^{\gamma-1}

    Example:
        >>> print(laguerre_derivative(FracSeries({3: 1})))
        FracSeries(9*t^2)
    """
    return s.map_terms(lambda e, c: (e - 1, e*e*c), shift=-1)


def laguerre_antiderivative(s):
    r"""Inverse of the Laguerre derivative vanishing at the origin.

    .. math:: Y(t) = \int_0^t \frac{dt_1}{t_1} \int_0^{t_1} f(t_2)\,dt_2,
        \qquad t^\gamma \mapsto \frac{t^{\gamma+1}}{(\gamma+1)^2}

    Raises:
        DomainError: if some exponent is <= -1.
    """
    _check_integrable(s, 'laguerre_antiderivative')

    def rule(e, c):
        return e + 1, c*(Fraction(1)/(e + 1)**2 if _is_exact(e) else 1/(e + 1)**2)
    return s.map_terms(rule, shift=1)


def laguerre_fractional_derivative(s, alpha):
    r"""Fractional Laguerre derivative :math:`\partial_t^\alpha t^\alpha \partial_t^\alpha`.

    Computed by composing :func:`rl_derivative`, multiplication by
    :math:`t^\alpha` and :func:`rl_derivative`. On :math:`t^\gamma` this is

    .. math:: \left[\frac{\Gamma(\gamma+1)}{\Gamma(\gamma-\alpha+1)}\right]^2 t^{\gamma-\alpha}.

    Note:
        A constant is not annihilated for alpha < 1: the literal composition
        gives :math:`t^{-\alpha}/\Gamma(1-\alpha)^2`.
    """
    if not 0 < alpha <= 1:
        raise DomainError(f'Derivative order must lie in (0, 1], got {alpha}.')
    return rl_derivative(series_shift(rl_derivative(s, alpha), alpha), alpha)


# %% builders
def _power(a, r):
    return 1 if r == 0 else a**r


def exp_series(a=1, order=10):
    r"""Truncated :math:`e^{at} = \sum_n a^n t^n/n!`, exact for rational a."""
    n_max = int(math.floor(order))
    return FracSeries([(n, _power(a, n)*Fraction(1, math.factorial(n))) for n in range(n_max + 1)],
                      order=order, truncated=True)


def cos_series(order=10):
    r"""Truncated :math:`\cos t = \sum_k (-1)^k t^{2k}/(2k)!`, exact."""
    k_max = int(math.floor(order))//2
    return FracSeries([(2*k, Fraction((-1)**k, math.factorial(2*k))) for k in range(k_max + 1)],
                      order=order, truncated=True)


def laguerre_exp_series(a=1, order=10, power=1):
    r"""Truncated :math:`{}_le(a t^p) = \sum_r a^r t^{pr}/(r!)^2`."""
    r_max = int(math.floor(order/power)) if power > 0 else 0
    return FracSeries([(power*r, _power(a, r)*Fraction(1, math.factorial(r)**2)) for r in range(r_max + 1)],
                      order=order, truncated=True)


def mittag_leffler_series(mu, a=1, order=10, beta=1):
    r"""Truncated :math:`E_{\mu,\beta}(a t^\mu) = \sum_r a^r t^{\mu r}/\Gamma(\mu r+\beta)`."""
    r_max = int(math.floor(order/mu + EXPONENT_TOL))
    return FracSeries([(mu*r, _power(a, r)*rgamma_exact(mu*r + beta)) for r in range(r_max + 1)],
                      order=order, truncated=True)
