#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Pseudo-evolution solvers.

A pseudo-evolution problem replaces :math:`\\partial_t` in a Cauchy problem by a
generalized time derivative :math:`D_t` with eigenfunction :math:`E`,

.. math:: D_t F(x, t) = \\alpha\\hat{O}_x F(x, t), \\qquad F(x, 0) = f(x),

and is solved by the operator :math:`E(\\alpha t\\hat{O}_x)` acting on the
initial condition. :class:`EigenKernel` collects what a solver needs to
know about :math:`D_t` and :math:`E`, so that each problem is written once
for the ordinary, Laguerre and Riemann-Liouville (Mittag-Leffler) cases.

Solutions that depend on x and t are returned as :class:`BivariateSeries`
(a polynomial in x with :class:`~peocalc.series_core.FracSeries` coefficients),
and every solver has a residual companion that substitutes the solution
back into its equation term by term.
"""

import cmath
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from numpy.lib.scimath import sqrt as csqrt

from .errors import ConditioningError, DiscrepancyWarning, DomainError, TruncationWarning
from .series_core import (FracSeries, MatrixSeries, derivative, exp_series, laguerre_derivative,
                          laguerre_exp_series, mittag_leffler_series, recip_gamma, rgamma_exact,
                          rl_derivative, series_eval, series_from_dict)
from .special_functions import DEFAULT_CONFIG, hermite3, laguerre_e_nm, laguerre_exp, mittag_leffler, sum_terms
from .umbral import UmbralSum, UmbralTerm, VariableAllocator
from .weyl import (I, GaussianRational, GradedOpSeries, Polynomial, WeylElement, apply, graded_exp,
                   graded_polynomial)

#: relative eigenvalue separation required by the Cayley-Hamilton reduction
CONDITIONING_TOL = 1e-8
#: default number of terms of the direct matrix series
MATRIX_SERIES_TERMS = 60


def _gr(value):
    return GaussianRational.coerce(value)


# %% kernels
@dataclass(frozen=True)
class EigenKernel:
    """Generalized time derivative and its eigenfunction.

    ``kind`` is one of ``'exp'`` (:math:`\\partial_t`, :math:`e^x`),
    ``'laguerre'`` (:math:`{}_l\\partial_t`, :math:`{}_le(x)`) or
    ``'mittag-leffler'`` (:math:`\\partial_t^\\mu`, :math:`E_{\\mu,1}(x)`).

    The eigenfunction evaluated at :math:`a t^{p}` is the series
    :math:`\\sum_n w(n) a^n t^{\\gamma(n)}` with weight ``weight(n)`` and
    exponent ``exponent(n)``.
    """
    kind: str = 'laguerre'
    mu: float = 1

    def __post_init__(self):
        if self.kind not in ('exp', 'laguerre', 'mittag-leffler'):
            raise ValueError(f'Unknown kernel kind {self.kind!r}.')
        if self.kind == 'mittag-leffler' and not 0 < self.mu < 1:
            raise DomainError(f'Mittag-Leffler kernel needs mu in (0, 1), got {self.mu}.')

    @classmethod
    def exp(cls):
        return cls('exp')

    @classmethod
    def laguerre(cls):
        return cls('laguerre')

    @classmethod
    def mittag_leffler(cls, mu):
        return cls('mittag-leffler', mu)

    def weight(self, n):
        """1/n!, 1/(n!)^2 or 1/Gamma(mu*n + 1)."""
        if self.kind == 'exp':
            return Fraction(1, math.factorial(n))
        if self.kind == 'laguerre':
            return Fraction(1, math.factorial(n)**2)
        return rgamma_exact(self.mu*n + 1)

    def exponent(self, n):
        return self.mu*n if self.kind == 'mittag-leffler' else n

    def scalar(self, x, cfg=DEFAULT_CONFIG):
        """Eigenfunction value."""
        if self.kind == 'exp':
            return cmath.exp(x) if isinstance(x, complex) else math.exp(x)
        if self.kind == 'laguerre':
            return laguerre_exp(x, cfg)
        return mittag_leffler(self.mu, 1, x, cfg)

    def series(self, a=1, order=10):
        """Eigenfunction of ``a*t`` (``a*t**mu`` for Mittag-Leffler) as a FracSeries."""
        if self.kind == 'exp':
            return exp_series(a, order)
        if self.kind == 'laguerre':
            return laguerre_exp_series(a, order)
        return mittag_leffler_series(self.mu, a, order)

    def time_derivative(self, s):
        """Apply the generalized time derivative to a series."""
        if self.kind == 'exp':
            return derivative(s)
        if self.kind == 'laguerre':
            return laguerre_derivative(s)
        return rl_derivative(s, self.mu)

    def source(self):
        r"""Image of the constant 1, the inhomogeneous term of the eigen-relation.

        Zero for ``'exp'`` and ``'laguerre'``; :math:`t^{-\mu}/\Gamma(1-\mu)` otherwise.
        """
        return self.time_derivative(FracSeries({0: 1}))


EXP = EigenKernel.exp()
LAGUERRE = EigenKernel.laguerre()


# %% bivariate series
class BivariateSeries:
    """Polynomial in x whose coefficients are FracSeries in t.

    Args:
        components (dict, optional): ``{x_degree: FracSeries}``.
    """

    __slots__ = ('_c',)

    def __init__(self, components=None):
        self._c = {int(k): s for k, s in (components or {}).items() if s}

    @classmethod
    def from_polynomial(cls, p, series=None):
        """Returns ``p(x)*series(t)``; series defaults to 1."""
        series = FracSeries({0: 1}) if series is None else series
        return cls({k: series.scale(c) for k, c in p.items()})

    @property
    def components(self):
        return dict(self._c)

    @property
    def x_degree(self):
        return max(self._c) if self._c else -1

    @property
    def t_order(self):
        """Smallest truncation order of the components."""
        return min((s.order for s in self._c.values()), default=math.inf)

    def component(self, k):
        return self._c.get(k, FracSeries())

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return self._c.keys() == other._c.keys() and all(self._c[k] == other._c[k] for k in self._c)

    __hash__ = None

    def __add__(self, other):
        keys = set(self._c) | set(other._c)
        return BivariateSeries({k: self.component(k) + other.component(k) for k in keys})

    def __neg__(self):
        return BivariateSeries({k: -s for k, s in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return BivariateSeries({k: s.scale(c) for k, s in self._c.items()})

    def t_map(self, func):
        """Apply a series operator to every x component."""
        return BivariateSeries({k: func(s) for k, s in self._c.items()})

    def x_apply(self, op):
        """Apply a Weyl algebra operator in x.

        Args:
            op (WeylElement): operator.

        Returns:
            BivariateSeries
        """
        out = {}
        for (a, b), c in op.terms.items():
            for k, s in self._c.items():
                if k < b:
                    continue
                n = k - b + a
                term = s.scale(c*math.perm(k, b))
                out[n] = out[n] + term if n in out else term
        return BivariateSeries(out)

    def truncate(self, order):
        return BivariateSeries({k: s.truncate(order) for k, s in self._c.items()})

    def eval(self, x, t):
        """Value at ``(x, t)``, complex."""
        return sum(complex(series_eval(s, t))*x**k for k, s in self._c.items())

    def max_abs(self):
        """Largest coefficient magnitude (0 for the empty series)."""
        return max((abs(complex(c)) for s in self._c.values() for _, c in s.terms), default=0.0)

    def __repr__(self):
        if not self._c:
            return 'BivariateSeries(0)'
        return 'BivariateSeries(' + ' + '.join(f'x^{k}*[{s}]' for k, s in sorted(self._c.items())) + ')'

    def to_dict(self):
        """JSON-ready dictionary."""
        return {'type': 'BivariateSeries',
                'components': {str(k): s.to_dict() for k, s in sorted(self._c.items())}}

    @classmethod
    def from_dict(cls, obj):
        if obj.get('type') != 'BivariateSeries':
            raise ValueError(f"Expected a BivariateSeries, got {obj.get('type')!r}.")
        return cls({int(k): series_from_dict(s) for k, s in obj['components'].items()})


# %% transport
def solve_transport(f, alpha, N, kernel=LAGUERRE):
    r"""Solve :math:`D_t F = \alpha\partial_x F`, :math:`F(x, 0) = f(x)`.

    .. math:: F(x, t) = \sum_{n\leq N} w(n)\,\alpha^n t^{\gamma(n)} f^{(n)}(x)

    For the exponential kernel this is the Taylor expansion of
    :math:`f(x+\alpha t)`; for the Laguerre kernel the weights are
    :math:`1/(n!)^2`.

    Args:
        f (Polynomial): initial condition.
        alpha (number): drift coefficient.
        N (int): number of terms. The result is exact for ``N >= deg f``.
        kernel (EigenKernel, optional): time derivative.

    Returns:
        BivariateSeries
    """
    alpha = _gr(alpha)
    order = kernel.exponent(N)
    truncated = N < f.degree
    out = {}
    p = f
    for n in range(N + 1):
        if not p.items():
            break
        c = alpha**n*kernel.weight(n)
        for k, v in p.items():
            out.setdefault(k, []).append((kernel.exponent(n), c*v))
        p = apply(WeylElement.d(), p)
    return BivariateSeries({k: FracSeries(terms, order=order, truncated=truncated) for k, terms in out.items()})


def solve_laguerre_transport(f, alpha, N):
    r"""Laguerre transport, :math:`F(x,t) = \hat{\mathbb{I}}(v f(x+\alpha v t))`.

    Example:
        >>> F = solve_laguerre_transport(Polynomial([0, 0, 1]), 1, 2)
        >>> F.eval(1, 1)
        (3.5+0j)
    """
    return solve_transport(f, alpha, N, LAGUERRE)


def transport_residual(F, alpha, kernel=LAGUERRE, f=None):
    r"""Residual :math:`D_t F - \alpha\partial_x F - D_t(1) f`.

    Args:
        F (BivariateSeries): candidate solution.
        alpha (number): drift coefficient.
        kernel (EigenKernel, optional): time derivative.
        f (Polynomial, optional): initial condition, needed by kernels with a
            source term.

    Returns:
        BivariateSeries, zero through the truncation order for a solution.
    """
    order = F.t_order - kernel.exponent(1)
    residual = F.t_map(kernel.time_derivative) - F.x_apply(_gr(alpha)*WeylElement.d())
    source = kernel.source()
    if source:
        if f is None:
            raise ValueError('The initial condition is required for a kernel with a source term.')
        residual = residual - BivariateSeries.from_polynomial(f, source)
    return residual.truncate(order)


# %% drift
def solve_laguerre_drift(alpha, beta, x, t, cfg=DEFAULT_CONFIG, form='single'):
    r"""Laguerre drift problem with :math:`f(x) = 1`.

    .. math:: F(x,t) = \hat{\mathbb{I}}\left(v e^{-\frac{(vt)^2}{2}\alpha\beta} e^{-vt\alpha x}\right)
        = \sum_{n\geq 0}\frac{(-\alpha t x)^n}{n!}\,{}_le_n^{(2)}\left(-\frac{\alpha\beta t^2}{2}\right)

    :param form: ``'single'`` (sum over n of :math:`{}_le_n^{(2)}`), ``'double'``
        (double series summed along :math:`n+2r`) or ``'printed'``, the closed
        form without the x-dependence and with :math:`{}_le_0^{(2)}`, which raises a
        :class:`DiscrepancyWarning`
    :return: complex value
    """
    a = -alpha*t*x
    y = -alpha*beta*t**2/2
    if form == 'single':
        def terms():
            power = 1
            n = 0
            while True:
                yield power*laguerre_e_nm(n, 2, y, cfg)
                n += 1
                power = power*a/n
        return complex(sum_terms(terms(), cfg, 'solve_laguerre_drift')[0])
    if form == 'double':
        def terms():
            k = 0
            while True:
                total = 0
                for r in range(k//2 + 1):
                    n = k - 2*r
                    total += a**n*y**r/(math.factorial(n)*math.factorial(r))
                yield total/math.factorial(k)
                k += 1
        return complex(sum_terms(terms(), cfg, 'solve_laguerre_drift')[0])
    if form == 'printed':
        warnings.warn('Drift closed form without x-dependence differs from the umbral solution.',
                      DiscrepancyWarning)
        return complex(cmath.exp(-alpha*t)*laguerre_e_nm(0, 2, y, cfg))
    raise ValueError(f"form must be 'single', 'double' or 'printed', got {form!r}.")


def drift_umbral_image(alpha, beta, x, t, n_max=40):
    r"""Umbral double sum of the drift solution.

    Terms :math:`\frac{(-\alpha t x)^n}{n!}\frac{(-\alpha\beta t^2/2)^r}{r!}v^{n+2r+1}`
    for :math:`n, r < n_{max}`.

    Returns:
        UmbralSum
    """
    v = VariableAllocator().v()
    a = -alpha*t*x
    y = -alpha*beta*t**2/2
    return UmbralSum(UmbralTerm(a**n/math.factorial(n)*y**r/math.factorial(r), v_exps={v: n + 2*r + 1})
                     for n in range(n_max) for r in range(n_max))


# %% Schrödinger type problems
def schrodinger_operator(alpha, beta):
    r"""Returns :math:`\alpha\hat{x} + \frac{\beta}{2}\partial_x^2`."""
    return _gr(alpha)*WeylElement.x() + (_gr(beta)/2)*WeylElement.d(2)


def schrodinger_hermite_polynomials(alpha, beta, N, sign=1):
    r"""Exact :math:`h_n(x) = H_n^{(3)}(s\alpha x, s\alpha^2\beta/6)` for n <= N, with s = sign.

    Returns:
        list of Polynomial
    """
    a = sign*_gr(alpha)
    y = sign*_gr(alpha)**2*_gr(beta)/6
    polys = []
    for n in range(N + 1):
        coeffs = {}
        for r in range(n//3 + 1):
            k = n - 3*r
            coeffs[k] = math.factorial(n)//(math.factorial(k)*math.factorial(r))*a**k*y**r
        polys.append(Polynomial(coeffs))
    return polys


def hermite_recurrence_check(alpha, beta, N=12, sign=1):
    r"""Exact check of :math:`s(\alpha\hat{x} + \frac{\beta}{2}\partial_x^2)h_n = h_{n+1}`.

    Returns:
        bool
    """
    op = sign*schrodinger_operator(alpha, beta)
    h = schrodinger_hermite_polynomials(alpha, beta, N + 1, sign)
    return all(apply(op, h[n]) == h[n + 1] for n in range(N + 1))


def solve_laguerre_schrodinger(alpha, beta, x, t, N=40):
    r"""Laguerre Schrödinger problem with :math:`\varphi(x) = 1`.

    .. math:: \Psi(x,t) = \sum_{n\leq N}\frac{(\mathbf{i}t)^n}{(n!)^2}H_n^{(3)}\left(\alpha x,\frac{\alpha^2\beta}{6}\right)
    """
    y = alpha**2*beta/6
    return sum((1j*t)**n/math.factorial(n)**2*hermite3(n, alpha*x, y) for n in range(N + 1))


def _operational_coefficients(f, alpha, beta, N, sign, shift_degree=2):
    """Coefficients P_n of w^n in exp(s w^3 a^2 b/6) exp(s w a x) f(x + (ab/2) w^k + s w b d) 1."""
    alpha = _gr(alpha)
    beta = _gr(beta)
    K = N
    cubic = graded_exp(GradedOpSeries.from_element(sign*alpha**2*beta/6, 3, K), K)
    linear = graded_exp(GradedOpSeries.from_element(sign*alpha*WeylElement.x(), 1, K), K)
    Z = (GradedOpSeries.from_element(WeylElement.x(), 0, K)
         + GradedOpSeries.from_element(sign*beta*WeylElement.d(), 1, K)
         + GradedOpSeries.from_element(alpha*beta/2, shift_degree, K))
    return (cubic*linear*graded_polynomial(f, Z)).apply(Polynomial([1]))


def _recurrence_coefficients(f, alpha, beta, N, sign):
    op = sign*schrodinger_operator(alpha, beta)
    out = []
    h = f
    for n in range(N + 1):
        out.append(h*Fraction(1, math.factorial(n)))
        h = apply(op, h)
    return out


def _assemble(polys, weight, exponent, N):
    out = {}
    for n, p in enumerate(polys):
        c = weight(n)
        for k, v in p.items():
            out.setdefault(k, []).append((exponent(n), c*v))
    return BivariateSeries({k: FracSeries(terms, order=exponent(N), truncated=True) for k, terms in out.items()})


def solve_laguerre_schrodinger_general(phi, alpha, beta, N, method='operational'):
    r"""Laguerre Schrödinger problem :math:`\mathbf{i}\,{}_l\partial_t\Psi = \hat{O}_x\Psi` for polynomial :math:`\varphi`.

    With :math:`\hat{O}_x = -(\alpha\hat{x} + \frac{\beta}{2}\partial_x^2)`,

    .. math:: \Psi(x,t) = \hat{\mathbb{I}}\left(e^{\frac{\alpha^2\beta}{6}(\mathbf{i}vt)^3}e^{\alpha\hat{x}(\mathbf{i}vt)}
        \varphi\left(\hat{x}+\frac{\alpha\beta}{2}(\mathbf{i}vt)^2+(\mathbf{i}vt)\beta\partial_x\right)1\right)

    Args:
        phi (Polynomial): initial condition.
        alpha (number): potential strength.
        beta (number): kinetic coefficient.
        N (int): truncation order in t.
        method (str, optional): ``'operational'`` expands the operator
            product above in the Weyl algebra (N <= 12); ``'recurrence'``
            applies :math:`\alpha\hat{x} + \frac{\beta}{2}\partial_x^2` repeatedly.

    Returns:
        BivariateSeries
    """
    if method == 'operational':
        polys = _operational_coefficients(phi, alpha, beta, N, 1)
    elif method == 'recurrence':
        polys = _recurrence_coefficients(phi, alpha, beta, N, 1)
    else:
        raise ValueError(f"method must be 'operational' or 'recurrence', got {method!r}.")
    return _assemble(polys, lambda n: I**n*Fraction(1, math.factorial(n)), lambda n: n, N)


def laguerre_schrodinger_residual(F, alpha, beta):
    r"""Residual :math:`\mathbf{i}\,{}_l\partial_t F - \hat{O}_x F`, through order N-1."""
    residual = F.t_map(laguerre_derivative).scale(I) + F.x_apply(schrodinger_operator(alpha, beta))
    return residual.truncate(F.t_order - 1)


def fractional_schrodinger(alpha, beta, mu, x, t, N=40):
    r"""Fractional Schrödinger problem with :math:`f(x) = 1`.

    .. math:: F(x,t) = \sum_{r\leq N}\frac{t^{\mu r}}{\Gamma(\mu r+1)}H^{(3)}_r\left(-\alpha x,-\frac{\alpha^2\beta}{6}\right)
    """
    y = -alpha**2*beta/6
    return sum(t**(mu*r)*recip_gamma(mu*r + 1)*hermite3(r, -alpha*x, y) for r in range(N + 1))


def fractional_schrodinger_series(alpha, beta, mu, N):
    """Series form of :func:`fractional_schrodinger`.

    Returns:
        BivariateSeries
    """
    polys = schrodinger_hermite_polynomials(alpha, beta, N, sign=-1)
    return _assemble(polys, lambda n: rgamma_exact(mu*n + 1), lambda n: mu*n, N)


def solve_fractional_schrodinger_general(f, alpha, beta, mu, N, variant='derived', method='operational'):
    r"""Fractional Schrödinger problem for polynomial f.

    .. math:: \partial_t^\mu F = \hat{O}_x F + \frac{t^{-\mu}}{\Gamma(1-\mu)}f(x),
        \qquad \hat{O}_x = -\left(\alpha\hat{x}+\frac{\beta}{2}\partial_x^2\right)

    The ``'derived'`` variant shifts the argument of f by
    :math:`\frac{\alpha\beta}{2}w^2 - \beta w\partial_x` with :math:`w = (vt)^\mu`.
    The ``'printed'`` variant uses the first power :math:`\frac{\alpha\beta}{2}w`
    and raises a :class:`DiscrepancyWarning`; both agree for constant f.

    Returns:
        BivariateSeries
    """
    if variant == 'derived':
        shift_degree = 2
    elif variant == 'printed':
        warnings.warn('Printed operational form shifts f by (alpha*beta/2)(vt)^mu, not its square.',
                      DiscrepancyWarning)
        shift_degree = 1
        method = 'operational'
    else:
        raise ValueError(f"variant must be 'derived' or 'printed', got {variant!r}.")
    if method == 'operational':
        polys = _operational_coefficients(f, alpha, beta, N, -1, shift_degree)
    elif method == 'recurrence':
        polys = _recurrence_coefficients(f, alpha, beta, N, -1)
    else:
        raise ValueError(f"method must be 'operational' or 'recurrence', got {method!r}.")
    return _assemble(polys, lambda n: math.factorial(n)*rgamma_exact(mu*n + 1), lambda n: mu*n, N)


def fractional_schrodinger_residual(F, alpha, beta, mu, f=None):
    r"""Residual :math:`\partial_t^\mu F - \hat{O}_x F - t^{-\mu}f/\Gamma(1-\mu)`, through order :math:`\mu(N-1)`."""
    f = Polynomial([1]) if f is None else f
    source = BivariateSeries.from_polynomial(f, rl_derivative(FracSeries({0: 1}), mu))
    residual = F.t_map(lambda s: rl_derivative(s, mu)) + F.x_apply(schrodinger_operator(alpha, beta)) - source
    return residual.truncate(F.t_order - mu)


# %% matrices
@dataclass(frozen=True, eq=False)
class Matrix2:
    """2x2 complex matrix with its eigenvalues.

    Args:
        entries (array_like): 2x2 matrix.
    """
    entries: np.ndarray

    def __post_init__(self):
        entries = np.asarray(self.entries)
        if entries.shape != (2, 2):
            raise DomainError(f'Matrix2 needs a 2x2 matrix, got shape {entries.shape}.')
        object.__setattr__(self, 'entries', entries)

    def __array__(self, dtype=None, copy=None):
        return self.entries if dtype is None else self.entries.astype(dtype)

    @property
    def trace(self):
        return self.entries[0, 0] + self.entries[1, 1]

    @property
    def det(self):
        m = self.entries
        return m[0, 0]*m[1, 1] - m[0, 1]*m[1, 0]

    @property
    def eigenvalues(self):
        """Returns ``(lambda_plus, lambda_minus)``."""
        half = self.trace/2
        root = csqrt(half**2 - self.det)
        return half + root, half - root

    @property
    def norm(self):
        return float(np.linalg.norm(self.entries))


def _as_matrix2(M):
    return M if isinstance(M, Matrix2) else Matrix2(M)


def matrix_kernel_function(kernel, M, t, cfg=DEFAULT_CONFIG):
    r"""Eigenfunction of :math:`\hat{M}t` through Cayley-Hamilton.

    .. math:: E(\hat{M}t) = \frac{E(\lambda_+\tau)-E(\lambda_-\tau)}{\lambda_+-\lambda_-}\hat{M}
        + \frac{\lambda_+E(\lambda_-\tau)-\lambda_-E(\lambda_+\tau)}{\lambda_+-\lambda_-}\hat{1}

    with :math:`\tau = t` (:math:`t^\mu` for Mittag-Leffler).

    Args:
        kernel (EigenKernel): eigenfunction.
        M (Matrix2 or array_like): 2x2 matrix.
        t (float): time.
        cfg (SeriesEvalConfig, optional): scalar summation policy.

    Returns:
        Matrix2

    Raises:
        ConditioningError: if :math:`|\lambda_+-\lambda_-| < 10^{-8}\|M\|`.
    """
    M = _as_matrix2(M)
    lp, lm = M.eigenvalues
    gap = abs(lp - lm)
    if gap == 0 or gap < CONDITIONING_TOL*M.norm:
        raise ConditioningError(f'Eigenvalues {lp} and {lm} too close for Cayley-Hamilton.')
    tau = t**kernel.exponent(1)
    ep = complex(kernel.scalar(complex(lp*tau), cfg))
    em = complex(kernel.scalar(complex(lm*tau), cfg))
    a1 = (ep - em)/(lp - lm)
    a0 = (lp*em - lm*ep)/(lp - lm)
    return Matrix2(np.real_if_close(a1*M.entries + a0*np.eye(2), tol=1000))


def matrix_laguerre_exp(M, t, cfg=DEFAULT_CONFIG):
    r""":math:`{}_le(\hat{M}t)` for a 2x2 matrix with distinct eigenvalues."""
    return matrix_kernel_function(LAGUERRE, M, t, cfg)


def matrix_kernel_series(kernel, M, t, n_terms=MATRIX_SERIES_TERMS):
    r"""Direct series :math:`\sum_{n<N} w(n)(\hat{M}\tau)^n` for square matrices of any size.

    A :class:`TruncationWarning` is raised if the last term is not negligible.

    Returns:
        numpy.ndarray
    """
    M = np.asarray(M)
    A = M*t**kernel.exponent(1)
    power = np.eye(M.shape[0], dtype=np.result_type(A, float))
    total = np.zeros_like(power)
    term = power
    for n in range(n_terms):
        term = power*float(kernel.weight(n))
        total = total + term
        power = power @ A
    if np.linalg.norm(term) > 1e-15*max(np.linalg.norm(total), 1.0):
        warnings.warn(f'Matrix series not converged after {n_terms} terms.', TruncationWarning)
    return np.real_if_close(total, tol=1000)


def fractional_matrix_evolution(M, mu, t, Y0, cfg=DEFAULT_CONFIG, method='cayley-hamilton', tol=1e-10):
    r"""Solve :math:`\partial_t^\mu \underline{Y} = \hat{M}\underline{Y} + \frac{t^{-\mu}}{\Gamma(1-\mu)}\underline{Y}_0`.

    .. math:: \underline{Y}(t) = E_{\mu,1}(\hat{M}t^\mu)\underline{Y}_0

    The Cayley-Hamilton value is compared with the direct matrix series; a
    relative difference above ``tol`` raises a :class:`DiscrepancyWarning`.

    Args:
        M (Matrix2 or array_like): 2x2 matrix.
        mu (float): order in (0, 1).
        t (float): time.
        Y0 (array_like): initial vector.
        cfg (SeriesEvalConfig, optional): scalar summation policy.
        method (str, optional): ``'cayley-hamilton'`` or ``'series'``.
        tol (float, optional): cross-check tolerance.

    Returns:
        numpy.ndarray
    """
    kernel = EigenKernel.mittag_leffler(mu)
    Y0 = np.asarray(Y0)
    if t == 0:
        return Y0
    series = matrix_kernel_series(kernel, np.asarray(M), t) @ Y0
    if method == 'series':
        return series
    if method != 'cayley-hamilton':
        raise ValueError(f"method must be 'cayley-hamilton' or 'series', got {method!r}.")
    value = matrix_kernel_function(kernel, M, t, cfg).entries @ Y0
    if np.linalg.norm(value - series) > tol*max(np.linalg.norm(value), 1.0):
        warnings.warn('Cayley-Hamilton and direct series disagree.', DiscrepancyWarning)
    return value


def pseudo_eigenfunction_series(M, mu, Y0, order):
    r"""Column series :math:`\sum_r \hat{M}^r\underline{Y}_0 t^{\mu r}/\Gamma(\mu r+1)` up to ``order``.

    Returns:
        MatrixSeries with (n, 1) coefficients.
    """
    M = np.asarray(M)
    y = np.asarray(Y0).reshape(-1, 1)
    terms = []
    r = 0
    while mu*r <= order + 1e-12:
        terms.append((mu*r, y*rgamma_exact(mu*r + 1)))
        y = M @ y
        r += 1
    return MatrixSeries(terms, order=order, truncated=True)


def pseudo_eigenfunction_residual(M, mu, Y0, order):
    r"""Residual :math:`\partial_t^\mu S - \hat{M}S - t^{-\mu}\underline{Y}_0/\Gamma(1-\mu)`, through ``order - mu``."""
    S = pseudo_eigenfunction_series(M, mu, Y0, order)
    source = MatrixSeries({-mu: np.asarray(Y0).reshape(-1, 1)*recip_gamma(1 - mu)})
    return rl_derivative(S, mu) - MatrixSeries.constant(np.asarray(M))*S - source
