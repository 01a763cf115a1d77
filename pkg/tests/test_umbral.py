import math
from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from scipy import special

from peocalc.errors import ConvergenceError, DiscrepancyWarning, DomainError
from peocalc.special_functions import laguerre_exp, mittag_leffler
from peocalc.umbral import (UmbralSum, UmbralTerm, VariableAllocator, fio_eval, fio_eval_series,
                            hypergeometric_image, laguerre_binomial_image, laguerre_binomial_pow,
                            laguerre_exp_image, laguerre_semigroup_check, laguerre_semigroup_coefficients,
                            ml_binomial_image, ml_binomial_pow, ml_semigroup_coefficients,
                            ml_semigroup_comparison, mittag_leffler_image, pochhammer, tail_bound)


# %% monomials
def test_allocator_ids_are_distinct():
    alloc = VariableAllocator()
    ids = [alloc.u(), alloc.v(), alloc.u(), alloc.v()]
    assert len(set(ids)) == 4
    assert alloc.kinds[ids[0]] == 'u'
    assert alloc.kinds[ids[1]] == 'v'


def test_fio_eval_monomials():
    alloc = VariableAllocator()
    u, v = alloc.u(), alloc.v()
    assert fio_eval(UmbralTerm(1, {u: 3}, {v: 3})) == 1
    assert fio_eval(UmbralTerm(2, {u: 4})) == 12
    assert fio_eval(UmbralTerm(1, v_exps={v: 0})) == 0
    assert fio_eval(UmbralTerm(1, {u: 0.5})) == pytest.approx(math.sqrt(math.pi), rel=1e-14)


def test_pochhammer():
    assert pochhammer(3, 2) == 12
    assert pochhammer(1, 5) == 120
    assert pochhammer(0.5, 2) == pytest.approx(0.75, rel=1e-14)


def test_term_domain():
    with pytest.raises(DomainError):
        UmbralTerm(1, {0: 2}, {0: 1})
    with pytest.raises(DomainError):
        UmbralTerm(1, {0: -1})
    with pytest.raises(DomainError):
        UmbralTerm(1, {0: 0})


def test_term_product():
    alloc = VariableAllocator()
    u, v, w = alloc.u(), alloc.v(), alloc.v()
    t1 = UmbralTerm(2, {u: 1}, {v: 2})
    t2 = UmbralTerm(3, {u: 2})
    prod = t1*t2
    assert prod.coeff == 6
    assert prod.u_exps == {u: 3}
    assert prod.v_exps == {v: 2}
    assert fio_eval(prod) == 12
    # disjoint variables factorize
    t3 = UmbralTerm(1, v_exps={w: 3})
    assert fio_eval(t1*t3) == fio_eval(t1)*fio_eval(t3)
    assert (t1*5).coeff == 10


def _random_term(rng, alloc, real=False):
    def exponent(low):
        return float(rng.uniform(max(low, 0.2), 5)) if real else int(rng.integers(low, 7))
    u_exps = {alloc.u(): exponent(1) for _ in range(int(rng.integers(0, 3)))}
    v_exps = {alloc.v(): exponent(-2) for _ in range(int(rng.integers(0, 3)))}
    return UmbralTerm(Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 5))), u_exps, v_exps)


@pytest.mark.parametrize('seed', range(10))
def test_disjoint_monomials_factorize(seed):
    rng = np.random.default_rng(seed)
    alloc = VariableAllocator()
    t1, t2 = _random_term(rng, alloc), _random_term(rng, alloc)
    assert fio_eval(t1*t2) == fio_eval(t1)*fio_eval(t2)
    t3, t4 = _random_term(rng, alloc, real=True), _random_term(rng, alloc, real=True)
    assert fio_eval(t3*t4) == pytest.approx(fio_eval(t3)*fio_eval(t4), rel=1e-14)


@pytest.mark.parametrize('seed', range(10))
def test_reshaping_leaves_value_unchanged(seed):
    rng = np.random.default_rng(seed)
    alloc = VariableAllocator()
    term = _random_term(rng, alloc, real=True)
    for alpha in rng.uniform(-4.5, 6.5, size=5):
        alpha = float(alpha)
        if alpha <= 0 and abs(alpha - round(alpha)) < 0.05:
            continue
        reshaped = term*UmbralTerm(1, {alloc.u(): alpha}, {alloc.v(): alpha})
        assert fio_eval(reshaped) == pytest.approx(fio_eval(term), rel=1e-13, abs=1e-300)


def test_tail_bound():
    assert tail_bound([]) == 0.0
    assert tail_bound([1.0, 0.0]) == 0.0
    assert tail_bound([1.0, 1.0]) == math.inf
    assert tail_bound([1.0, 0.5, 0.25]) == pytest.approx(0.25)


# %% images
@pytest.mark.parametrize('x', [0.3, 1.0, -2.0, 5.0])
def test_laguerre_exp_image(x):
    assert fio_eval_series(laguerre_exp_image(x)) == pytest.approx(laguerre_exp(x), rel=1e-13)


def test_laguerre_exp_image_exact():
    value = fio_eval_series(laguerre_exp_image(Fraction(1, 2), n_terms=40))
    assert isinstance(value, Fraction)
    assert float(value) == pytest.approx(laguerre_exp(0.5), rel=1e-14)


def test_laguerre_exp_image_summability():
    with pytest.raises(ConvergenceError):
        fio_eval_series(laguerre_exp_image(50.0, n_terms=5))


def test_full_output():
    value, tail = fio_eval_series(laguerre_exp_image(1.0), full_output=True)
    assert tail < 1e-13
    assert value == pytest.approx(special.i0(2.0), rel=1e-13)


@pytest.mark.parametrize('alpha, beta, x', [(0.5, 1, 0.3), (1, 1, -1.0), (1.5, 2, 0.8)])
def test_mittag_leffler_image(alpha, beta, x):
    assert fio_eval_series(mittag_leffler_image(alpha, beta, x)) == \
        pytest.approx(mittag_leffler(alpha, beta, x), rel=1e-13)


def test_hypergeometric_image_log():
    # 2F1(1, 1; 2; z) = -log(1 - z)/z
    value = fio_eval_series(hypergeometric_image([1, 1], [2], 0.5))
    assert value == pytest.approx(2*math.log(2), rel=1e-14)


def test_hypergeometric_image_against_scipy():
    value = fio_eval_series(hypergeometric_image([0.5, 1.5], [2.5], 0.3))
    assert value == pytest.approx(special.hyp2f1(0.5, 1.5, 2.5, 0.3), rel=1e-12)


def test_hypergeometric_image_confluent():
    # 1F1(a; a; z) = exp(z)
    value = fio_eval_series(hypergeometric_image([1.5], [1.5], 0.7))
    assert value == pytest.approx(math.exp(0.7), rel=1e-13)


# %% binomial laws
def test_laguerre_binomial():
    assert laguerre_binomial_pow(2, 1, 1) == 6
    assert laguerre_binomial_pow(0, 3, 4) == 1
    assert laguerre_binomial_pow(3, 2, 0) == 8
    for n in range(6):
        assert fio_eval_series(laguerre_binomial_image(n, 2, 3)) == laguerre_binomial_pow(n, 2, 3)


def test_laguerre_binomial_is_symmetric():
    assert laguerre_binomial_pow(5, 2, 7) == laguerre_binomial_pow(5, 7, 2)


def test_ml_binomial_reduces_to_laguerre():
    for n in range(7):
        assert ml_binomial_pow(1, 1, n, 2, 3) == laguerre_binomial_pow(n, 2, 3)


def test_ml_binomial_image():
    for n in range(5):
        assert fio_eval_series(ml_binomial_image(0.5, 1, n, 0.2, 0.7)) == \
            pytest.approx(ml_binomial_pow(0.5, 1, n, 0.2, 0.7), rel=1e-13)


def test_ml_binomial_pole():
    with pytest.raises(DomainError):
        ml_binomial_pow(1, -1, 0, 1, 1)


# %% semigroup
@pytest.mark.parametrize('x, y', [(0.3, 0.5), (-1.0, 2.0), (1.5, 1.5)])
def test_laguerre_semigroup(x, y):
    assert laguerre_semigroup_check(x, y) <= 1e-13


def test_laguerre_semigroup_truncated_warns():
    with pytest.warns(DiscrepancyWarning):
        residual = laguerre_semigroup_check(0.3, 0.5, N=3, tol=1e-13)
    assert residual > 1e-13


@pytest.mark.parametrize('n', range(11))
def test_laguerre_semigroup_coefficients(n):
    product, composed = laguerre_semigroup_coefficients(n)
    assert product == composed


def test_laguerre_semigroup_coefficients_symbolic():
    x, y = sp.symbols('x y')
    n = 6
    lhs = sp.expand(sum(x**r/sp.factorial(r)**2 for r in range(n + 1))
                    * sum(y**k/sp.factorial(k)**2 for k in range(n + 1)))
    product, _ = laguerre_semigroup_coefficients(n)
    for r in range(n + 1):
        assert lhs.coeff(x, r).coeff(y, n - r) == sp.Rational(product[r].numerator, product[r].denominator)


@pytest.mark.parametrize('r, k', [(0, 0), (1, 2), (3, 3), (4, 1)])
def test_ml_semigroup_coefficients_exponential(r, k):
    product, composed = ml_semigroup_coefficients(1, 1, r, k)
    assert composed == math.comb(r + k, r)*product


@pytest.mark.parametrize('r, k', [(1, 1), (2, 3)])
def test_ml_semigroup_coefficients_fractional(r, k):
    product, composed = ml_semigroup_coefficients(0.5, 1, r, k)
    assert composed/product == pytest.approx(math.comb(r + k, r), rel=1e-13)


def test_ml_semigroup_comparison():
    alpha, beta, x, y, N = 0.5, 1, 0.2, 0.3, 60
    product, composed, discrepancy = ml_semigroup_comparison(alpha, beta, x, y, N=N)
    assert product == pytest.approx(mittag_leffler(alpha, beta, x)*mittag_leffler(alpha, beta, y), rel=1e-14)
    brute = math.fsum(math.comb(r + k, r)*x**r*y**k*special.rgamma(alpha*r + beta)*special.rgamma(alpha*k + beta)
                      for r in range(N + 1) for k in range(N + 1 - r))
    assert composed == pytest.approx(brute, rel=1e-12)
    assert discrepancy == pytest.approx(composed - product)
    assert discrepancy > 1e-3


def test_exhaustive_sum_skips_summability():
    alloc = VariableAllocator()
    v = alloc.v()
    s = UmbralSum([UmbralTerm(1, v_exps={v: 1}), UmbralTerm(1, v_exps={v: 1})], exhaustive=True)
    assert fio_eval_series(s, full_output=True) == (2, 0.0)
