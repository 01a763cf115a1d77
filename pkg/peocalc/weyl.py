#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Exact Weyl algebra over :math:`\\hat{x}` and :math:`\\partial_x`.

Elements are stored in normal order, :math:`\\sum c_{a,b}\\hat{x}^a\\partial_x^b`,
with Gaussian rational coefficients. Products are reordered with

.. math:: \\partial^b\\hat{x}^c = \\sum_k k!\\binom{b}{k}\\binom{c}{k}\\hat{x}^{c-k}\\partial^{b-k},

the consequence of :math:`[\\partial_x, \\hat{x}] = 1`. A
:class:`GradedOpSeries` is a truncated power series in a formal grading
parameter with Weyl algebra coefficients; it is used to check
disentanglement identities (Weyl rule, Zassenhaus, Crofton-Glaisher) exactly,
degree by degree. The Berry-type rule is checked numerically with
:class:`numpy.polynomial.Polynomial`.

Usage:

>>> d, x = WeylElement.d(), WeylElement.x()
>>> print(d*x)
x*d + 1
"""

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from numbers import Complex, Rational, Real

import numpy as np
from numpy.polynomial import Polynomial as NumPolynomial

from .errors import AlgebraSizeError, DiscrepancyWarning, DomainError

#: largest grading order accepted by :func:`graded_exp`
MAX_GRADE = 12
#: largest number of normal-ordered terms per coefficient in :func:`graded_exp`
MAX_TERMS = 500


# %% Gaussian rationals
@dataclass(frozen=True)
class GaussianRational:
    """Exact complex number with rational real and imaginary parts.

    Floats are converted exactly from their binary value.
    """
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    exact = True

    def __post_init__(self):
        object.__setattr__(self, 're', Fraction(self.re))
        object.__setattr__(self, 'im', Fraction(self.im))

    @classmethod
    def coerce(cls, value):
        """Convert a number to a GaussianRational.

        Returns:
            GaussianRational, or NotImplemented for unsupported types.
        """
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, Rational):
            return cls(Fraction(value))
        if isinstance(value, Real):
            return cls(Fraction(float(value)))
        if isinstance(value, Complex):
            value = complex(value)
            return cls(Fraction(value.real), Fraction(value.imag))
        return NotImplemented

    def __add__(self, other):
        other = GaussianRational.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        other = GaussianRational.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = GaussianRational.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.im == 0 and other.im == 0:
            return GaussianRational(self.re*other.re)
        return GaussianRational(self.re*other.re - self.im*other.im,
                                self.re*other.im + self.im*other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.im == 0:
            return GaussianRational(self.re/other.re, self.im/other.re)
        norm = other.re**2 + other.im**2
        return self*GaussianRational(other.re/norm, -other.im/norm)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other)/self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return GaussianRational(1)/self**(-n)
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result*base
            base = base*base
            n >>= 1
        return result

    def __eq__(self, other):
        other = GaussianRational.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __abs__(self):
        return math.hypot(self.re, self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __float__(self):
        if self.im != 0:
            raise TypeError(f'{self} is not real.')
        return float(self.re)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __repr__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f'{self.im}i'
        sign = '+' if self.im > 0 else '-'
        return f'({self.re}{sign}{abs(self.im)}i)'


I = GaussianRational(0, 1)
_ZERO = GaussianRational(0)
_ONE = GaussianRational(1)


def _gr(value):
    value = GaussianRational.coerce(value)
    if value is NotImplemented:
        raise TypeError(f'Cannot use {value!r} as an exact coefficient.')
    return value


def _falling(n, k):
    """n!/(n-k)!"""
    return math.perm(n, k)


# %% polynomials
class Polynomial:
    """Exact polynomial in x with Gaussian rational coefficients.

    Args:
        coeffs (list or dict): coefficients in increasing degree, or a
            ``{degree: coefficient}`` dictionary.
    """

    __slots__ = ('_c',)

    def __init__(self, coeffs=()):
        if not isinstance(coeffs, dict):
            coeffs = dict(enumerate(coeffs))
        self._c = {int(k): _gr(c) for k, c in coeffs.items() if _gr(c)}

    @classmethod
    def monomial(cls, k, coeff=1):
        return cls({k: coeff})

    @property
    def degree(self):
        return max(self._c) if self._c else -1

    def coeff(self, k):
        return self._c.get(k, _ZERO)

    def coefficients(self):
        """Coefficients in increasing degree."""
        return [self.coeff(k) for k in range(self.degree + 1)]

    def items(self):
        return self._c.items()

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._c == other._c

    __hash__ = None

    def __add__(self, other):
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, _ZERO) + v
        return Polynomial(c)

    def __neg__(self):
        return Polynomial({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            other = _gr(other)
            return Polynomial({k: v*other for k, v in self._c.items()})
        c = {}
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                c[k1 + k2] = c.get(k1 + k2, _ZERO) + v1*v2
        return Polynomial(c)

    __rmul__ = __mul__

    def __call__(self, x):
        return sum(complex(v)*x**k for k, v in self._c.items())

    def __repr__(self):
        if not self._c:
            return '0'
        return ' + '.join(f'{v}*x^{k}' for k, v in sorted(self._c.items()))


# %% Weyl algebra
class WeylElement:
    """Normal-ordered element :math:`\\sum c_{a,b}\\hat{x}^a\\partial_x^b`.

    Args:
        terms (dict, optional): ``{(x_pow, d_pow): coefficient}``.
    """

    __slots__ = ('_t',)

    def __init__(self, terms=None):
        self._t = {}
        for (a, b), c in (terms or {}).items():
            c = _gr(c)
            if c:
                self._t[(int(a), int(b))] = c

    @classmethod
    def x(cls, power=1):
        return cls({(power, 0): 1})

    @classmethod
    def d(cls, power=1):
        return cls({(0, power): 1})

    @classmethod
    def scalar(cls, c):
        return cls({(0, 0): c})

    @property
    def terms(self):
        return dict(self._t)

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self._t == other._t

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, WeylElement):
            other = WeylElement.scalar(other)
        t = dict(self._t)
        for k, v in other._t.items():
            t[k] = t.get(k, _ZERO) + v
        return WeylElement(t)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement({k: -v for k, v in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            other = _gr(other)
            return WeylElement({k: v*other for k, v in self._t.items()})
        return weyl_mul(self, other)

    def __rmul__(self, other):
        other = _gr(other)
        return WeylElement({k: other*v for k, v in self._t.items()})

    def __truediv__(self, other):
        other = _gr(other)
        return WeylElement({k: v/other for k, v in self._t.items()})

    def __pow__(self, n):
        result = WeylElement.scalar(1)
        for _ in range(n):
            result = weyl_mul(result, self)
        return result

    def __repr__(self):
        if not self._t:
            return '0'
        parts = []
        for (a, b), c in sorted(self._t.items(), reverse=True):
            mono = '*'.join(([f'x^{a}' if a > 1 else 'x'] if a else []) + ([f'd^{b}' if b > 1 else 'd'] if b else []))
            if not mono:
                parts.append(f'{c}')
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f'{c}*{mono}')
        return ' + '.join(parts)


def weyl_mul(a, b):
    """Normal-ordered product of two Weyl algebra elements.

    Example:
        >>> print(weyl_mul(WeylElement.d(2), WeylElement.x(2)))
        x^2*d^2 + 4*x*d + 2
    """
    out = {}
    for (a1, b1), c1 in a._t.items():
        for (a2, b2), c2 in b._t.items():
            c = c1*c2
            for k in range(min(b1, a2) + 1):
                key = (a1 + a2 - k, b1 + b2 - k)
                w = math.factorial(k)*math.comb(b1, k)*math.comb(a2, k)
                out[key] = out.get(key, _ZERO) + c*w
    return WeylElement(out)


def commutator(a, b):
    """Returns :math:`[a, b] = ab - ba`."""
    return weyl_mul(a, b) - weyl_mul(b, a)


def apply(op, p):
    """Action of an operator on a polynomial.

    :math:`\\hat{x}` multiplies and :math:`\\partial_x` differentiates.

    Args:
        op (WeylElement): operator.
        p (Polynomial): polynomial.

    Returns:
        Polynomial
    """
    out = {}
    for (a, b), c in op._t.items():
        for k, v in p.items():
            if k < b:
                continue
            n = k - b + a
            out[n] = out.get(n, _ZERO) + c*v*_falling(k, b)
    return Polynomial(out)


# %% graded series
class GradedOpSeries:
    """Truncated series :math:`\\sum_{k\\leq K} s^k W_k` with Weyl algebra coefficients.

    Args:
        coeffs (list): WeylElement per grading degree, starting at degree 0.
        order (int): truncation degree K.
    """

    __slots__ = ('coeffs', 'order')

    def __init__(self, coeffs, order):
        coeffs = list(coeffs)[:order + 1]
        coeffs += [WeylElement() for _ in range(order + 1 - len(coeffs))]
        self.coeffs = tuple(coeffs)
        self.order = order

    @classmethod
    def identity(cls, order):
        return cls([WeylElement.scalar(1)], order)

    @classmethod
    def from_element(cls, element, degree, order):
        """Series carrying a single element at a given degree."""
        if not isinstance(element, WeylElement):
            element = WeylElement.scalar(element)
        coeffs = [WeylElement() for _ in range(order + 1)]
        if degree <= order:
            coeffs[degree] = element
        return cls(coeffs, order)

    def __eq__(self, other):
        if not isinstance(other, GradedOpSeries):
            return NotImplemented
        k = min(self.order, other.order)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(k + 1))

    __hash__ = None

    def __add__(self, other):
        k = min(self.order, other.order)
        return GradedOpSeries([self.coeffs[i] + other.coeffs[i] for i in range(k + 1)], k)

    def __neg__(self):
        return GradedOpSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, GradedOpSeries):
            return GradedOpSeries([c*other for c in self.coeffs], self.order)
        k = min(self.order, other.order)
        out = []
        for n in range(k + 1):
            total = WeylElement()
            for i in range(n + 1):
                if self.coeffs[i] and other.coeffs[n - i]:
                    total = total + weyl_mul(self.coeffs[i], other.coeffs[n - i])
            out.append(total)
        return GradedOpSeries(out, k)

    def __rmul__(self, other):
        return GradedOpSeries([other*c for c in self.coeffs], self.order)

    def size(self):
        """Largest number of terms in a single coefficient."""
        return max(len(c) for c in self.coeffs)

    def apply(self, p):
        """Apply degree by degree to a polynomial.

        Returns:
            list of Polynomial, one per grading degree.
        """
        return [apply(c, p) for c in self.coeffs]


def graded_exp(arg, K=None):
    """Exponential of a graded series with vanishing degree-0 part.

    The sum :math:`\\sum_n \\text{arg}^n/n!` is exact through degree K.

    Args:
        arg (GradedOpSeries): exponent.
        K (int, optional): truncation degree. Defaults to ``arg.order``.

    Returns:
        GradedOpSeries

    Raises:
        DomainError: if the degree-0 coefficient of arg is not zero.
        AlgebraSizeError: if K exceeds :data:`MAX_GRADE` or a coefficient
            exceeds :data:`MAX_TERMS` terms.
    """
    K = arg.order if K is None else min(K, arg.order)
    if K > MAX_GRADE:
        raise AlgebraSizeError(f'Grading order {K} above the limit {MAX_GRADE}.')
    if arg.coeffs[0]:
        raise DomainError('Exponent of graded_exp must vanish at degree 0.')
    arg = GradedOpSeries(arg.coeffs, K)
    result = GradedOpSeries.identity(K)
    term = GradedOpSeries.identity(K)
    for n in range(1, K + 1):
        term = (term*arg)*Fraction(1, n)
        result = result + term
        if result.size() > MAX_TERMS or term.size() > MAX_TERMS:
            raise AlgebraSizeError(f'graded_exp coefficient exceeds {MAX_TERMS} terms.')
    return result


def graded_polynomial(f, Z):
    """Substitute a graded series into a polynomial, :math:`f(Z)`.

    Args:
        f (Polynomial): polynomial.
        Z (GradedOpSeries): argument.

    Returns:
        GradedOpSeries, by Horner's rule.
    """
    result = GradedOpSeries([], Z.order)
    for c in reversed(f.coefficients()):
        result = result*Z + GradedOpSeries.from_element(c, 0, Z.order)
    return result


def _exp_at(element, degree, K):
    return graded_exp(GradedOpSeries.from_element(element, degree, K), K)


def _product(*factors):
    result = factors[0]
    for f in factors[1:]:
        result = result*f
    return result


# %% Zassenhaus and disentanglement checks
def zassenhaus_coeff(X, Y, n, K=None, oriented='right'):
    r"""Zassenhaus coefficient :math:`C_n(X, Y)` or :math:`\hat{C}_n(X, Y)`.

    Right-oriented form:

    .. math:: e^{\lambda(X+Y)} = e^{\lambda X}e^{\lambda Y}e^{\lambda^2C_2}e^{\lambda^3C_3}\cdots

    :math:`C_n` is the :math:`\lambda^n` coefficient of
    :math:`e^{-\lambda^{n-1}C_{n-1}}\cdots e^{-\lambda^2C_2}e^{-\lambda Y}e^{-\lambda X}e^{\lambda(X+Y)}`.
    The left-oriented form
    :math:`e^{\lambda(X+Y)} = \cdots e^{\lambda^3\hat{C}_3}e^{\lambda^2\hat{C}_2}e^{\lambda Y}e^{\lambda X}`
    is obtained by peeling the factors from the right.

    Args:
        X (WeylElement): first operator.
        Y (WeylElement): second operator.
        n (int): index, at least 2.
        K (int, optional): grading order, at least n. Defaults to n.
        oriented (str, optional): ``'right'`` or ``'left'``.

    Returns:
        WeylElement
    """
    if n < 2:
        raise ValueError(f'Zassenhaus coefficients start at n=2, got {n}.')
    K = n if K is None else K
    if K < n:
        raise ValueError(f'Grading order {K} below the requested index {n}.')
    if oriented not in ('right', 'left'):
        raise ValueError(f"oriented must be 'right' or 'left', got {oriented!r}.")

    total = _exp_at(X + Y, 1, K)
    found = []
    for k in range(2, n + 1):
        if oriented == 'right':
            factors = [_exp_at(-c, j, K) for j, c in reversed(list(enumerate(found, start=2)))]
            factors += [_exp_at(-Y, 1, K), _exp_at(-X, 1, K), total]
        else:
            factors = [total, _exp_at(-X, 1, K), _exp_at(-Y, 1, K)]
            factors += [_exp_at(-c, j, K) for j, c in enumerate(found, start=2)]
        found.append(_product(*factors).coeffs[k])
    return found[-1]


def commrel(kappa, lam):
    r"""Commutators of :math:`\hat{A} = \lambda\partial_x^2` and :math:`\hat{B} = \kappa\hat{x}`.

    Returns:
        tuple ``([A, B], [A, [A, B]], [B, [A, B]])``, equal to
        :math:`(2\kappa\lambda\partial_x, 0, -2\kappa^2\lambda)`.
    """
    A = lam*WeylElement.d(2)
    B = kappa*WeylElement.x()
    AB = commutator(A, B)
    return AB, commutator(A, AB), commutator(B, AB)


def weyl_rule_check(alpha, beta, K=6):
    r"""Weyl disentanglement of :math:`X = -\alpha\hat{x}`, :math:`Y = \beta\partial_x`.

    Compares :math:`e^{s(X+Y)}` with :math:`e^{-\frac{s^2}{2}[X,Y]}e^{sX}e^{sY}`
    exactly through degree K.

    Returns:
        bool
    """
    X = -alpha*WeylElement.x()
    Y = beta*WeylElement.d()
    lhs = _exp_at(X + Y, 1, K)
    rhs = _product(_exp_at(-commutator(X, Y)/2, 2, K), _exp_at(X, 1, K), _exp_at(Y, 1, K))
    return lhs == rhs


def zassenhaus_chain_sides(kappa, lam, K=6, form='normal'):
    r"""Both sides of the disentanglement of :math:`e^{\hat{A}+\hat{B}}`.

    With :math:`\hat{A} = \lambda\partial_x^2` and :math:`\hat{B} = \kappa\hat{x}`
    graded at degree 1, the forms are

    * ``'left'``: :math:`e^{\frac{1}{6}([A,[A,B]]+2[B,[A,B]])}e^{\frac{1}{2}[A,B]}e^{B}e^{A}`
    * ``'crofton'``: :math:`e^{-\frac{2}{3}\kappa^2\lambda}e^{\kappa\lambda\partial_x}e^{\kappa\hat{x}}e^{\lambda\partial_x^2}`
    * ``'normal'``: :math:`e^{\frac{1}{3}\kappa^2\lambda}e^{\kappa\hat{x}}e^{\kappa\lambda\partial_x}e^{\lambda\partial_x^2}`

    Returns:
        tuple ``(lhs, rhs)`` of GradedOpSeries.
    """
    A = lam*WeylElement.d(2)
    B = kappa*WeylElement.x()
    lhs = _exp_at(A + B, 1, K)
    kappa = _gr(kappa)
    lam = _gr(lam)
    if form == 'left':
        AB, AAB, BAB = commrel(kappa, lam)
        rhs = _product(_exp_at((AAB + 2*BAB)/6, 3, K), _exp_at(AB/2, 2, K), _exp_at(B, 1, K), _exp_at(A, 1, K))
    elif form == 'crofton':
        rhs = _product(_exp_at(WeylElement.scalar(-Fraction(2, 3)*kappa**2*lam), 3, K),
                       _exp_at(kappa*lam*WeylElement.d(), 2, K),
                       _exp_at(B, 1, K), _exp_at(A, 1, K))
    elif form == 'normal':
        rhs = _product(_exp_at(WeylElement.scalar(Fraction(1, 3)*kappa**2*lam), 3, K),
                       _exp_at(B, 1, K),
                       _exp_at(kappa*lam*WeylElement.d(), 2, K),
                       _exp_at(A, 1, K))
    else:
        raise ValueError(f"form must be 'left', 'crofton' or 'normal', got {form!r}.")
    return lhs, rhs


def zassenhaus_chain_check(kappa, lam, K=6, form='normal'):
    """Returns True if :func:`zassenhaus_chain_sides` agree exactly through degree K."""
    lhs, rhs = zassenhaus_chain_sides(kappa, lam, K, form)
    return lhs == rhs


def crofton_glaisher_sides(m, f, K):
    r"""Both sides of :math:`e^{s\partial_x^m}f(\hat{x}) = f(\hat{x}+ms\partial_x^{m-1})e^{s\partial_x^m}`.

    Returns:
        tuple ``(lhs, rhs)`` of GradedOpSeries.
    """
    if m < 1:
        raise ValueError(f'm must be a positive integer, got {m}.')
    shift = _exp_at(WeylElement.d(m), 1, K)
    f_x = graded_polynomial(f, GradedOpSeries.from_element(WeylElement.x(), 0, K))
    Z = GradedOpSeries([WeylElement.x(), m*WeylElement.d(m - 1)], K)
    return shift*f_x, graded_polynomial(f, Z)*shift


def crofton_glaisher_check(m, f, p, K):
    """Returns True if both Crofton-Glaisher sides agree on p through degree K.

    Args:
        m (int): positive integer.
        f (Polynomial): polynomial argument.
        p (Polynomial): test polynomial.
        K (int): grading order.

    Returns:
        bool
    """
    lhs, rhs = crofton_glaisher_sides(m, f, K)
    return lhs.apply(p) == rhs.apply(p)


# %% Berry-type rule (floating point)
def _exp_poly(beta, degree):
    """Taylor polynomial of exp(beta*x)."""
    return NumPolynomial([beta**k/math.factorial(k) for k in range(degree + 1)])


def _exp_operator(step, p, n_terms):
    """Sum of step^n(p)/n! for n < n_terms."""
    total = NumPolynomial([0.0])
    term = p
    for n in range(n_terms):
        total = total + term
        term = step(term)/(n + 1)
    return total


def _coefficient_gap(p, q, degree):
    a = np.zeros(degree + 1)
    b = np.zeros(degree + 1)
    pc = p.coef[:degree + 1]
    qc = q.coef[:degree + 1]
    a[:len(pc)] = pc
    b[:len(qc)] = qc
    return float(np.max(np.abs(a - b)))


def _berry_sides(alpha, beta, p, N):
    x = NumPolynomial([0.0, 1.0])
    T = p.degree() + N
    lhs = _exp_operator(lambda q: alpha*q.deriv(2) + beta*x*q, p, N)
    berry = math.exp(alpha*beta**2/3)*_exp_operator(lambda q: alpha*q.deriv(2) - alpha*beta*q.deriv(1),
                                                     _exp_poly(beta, T)*p, T + 2)
    shifted = p(NumPolynomial([-alpha*beta, 1.0]))
    zassenhaus = math.exp(-2*alpha*beta**2/3)*_exp_operator(lambda q: alpha*q.deriv(2),
                                                            _exp_poly(beta, T)*shifted, T + 2)
    return lhs, berry, zassenhaus


def berry_rule_check(alpha, beta, deg=6, N=40, tol=None):
    r"""Numeric check of the Berry-type rule for :math:`\hat{X} = \alpha\partial_x^2`, :math:`\hat{Y} = \beta\hat{x}`.

    .. math:: e^{\alpha\partial_x^2+\beta x}p = e^{\frac{1}{3}\alpha\beta^2-\alpha\beta\partial_x+\alpha\partial_x^2}e^{\beta x}p

    Each side is applied to :math:`p = x^k` for :math:`k \leq` ``deg``; the
    left exponential is summed to N terms and :math:`e^{\beta x}` is
    truncated at degree ``deg + N``. Coefficients up to degree
    ``deg + N//4`` are compared. Intended for :math:`|\alpha|, |\beta| \leq 0.2`
    and :math:`N \geq 30`.

    Args:
        alpha (float): coefficient of the second derivative.
        beta (float): coefficient of x.
        deg (int, optional): largest monomial degree.
        N (int, optional): number of terms.
        tol (float, optional): if given, a residual above it raises a
            :class:`DiscrepancyWarning`.

    Returns:
        float, largest coefficient discrepancy.
    """
    alpha = float(alpha)
    beta = float(beta)
    residual = 0.0
    for k in range(deg + 1):
        p = NumPolynomial([0.0]*k + [1.0])
        lhs, berry, _ = _berry_sides(alpha, beta, p, N)
        residual = max(residual, _coefficient_gap(lhs, berry, k + N//4))
    if tol is not None and residual > tol:
        warnings.warn(f'Berry rule residual {residual:.3g} above {tol:.3g}.', DiscrepancyWarning)
    return residual


def berry_zassenhaus_agreement(alpha, beta, deg=6, N=40):
    r"""Compare the Berry-type rule with the Zassenhaus route.

    The Zassenhaus route reads
    :math:`e^{\hat{X}}e^{\hat{Y}}e^{-\frac{1}{2}[\hat{X},\hat{Y}]}e^{\frac{1}{3}[\hat{Y},[\hat{X},\hat{Y}]]+\frac{1}{6}[\hat{X},[\hat{X},\hat{Y}]]}`,
    here :math:`e^{\alpha\partial_x^2}e^{\beta x}e^{-\alpha\beta\partial_x}e^{-\frac{2}{3}\alpha\beta^2}`.

    Returns:
        float, largest coefficient discrepancy over monomials of degree <= deg.
    """
    alpha = float(alpha)
    beta = float(beta)
    residual = 0.0
    for k in range(deg + 1):
        p = NumPolynomial([0.0]*k + [1.0])
        _, berry, zassenhaus = _berry_sides(alpha, beta, p, N)
        residual = max(residual, _coefficient_gap(berry, zassenhaus, k + N//4))
    return residual
