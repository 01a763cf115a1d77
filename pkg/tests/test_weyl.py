import math
from fractions import Fraction

import numpy as np
import pytest

from peocalc.errors import AlgebraSizeError, DiscrepancyWarning, DomainError
from peocalc.weyl import (I, GaussianRational, GradedOpSeries, Polynomial, WeylElement, apply,
                          berry_rule_check, berry_zassenhaus_agreement, commrel, commutator,
                          crofton_glaisher_check, crofton_glaisher_sides, graded_exp, graded_polynomial,
                          weyl_mul, weyl_rule_check, zassenhaus_chain_check, zassenhaus_chain_sides,
                          zassenhaus_coeff)

x = WeylElement.x()
d = WeylElement.d()


# %% gaussian rationals
def test_gaussian_rational_arithmetic():
    assert I*I == -1
    z = GaussianRational(1, 2)
    assert z/z == 1
    assert z*z.conjugate() == 5
    assert I**-1 == -I
    assert z + Fraction(1, 2) == GaussianRational(Fraction(3, 2), 2)
    assert 1 - z == GaussianRational(0, -2)
    assert abs(GaussianRational(3, 4)) == 5.0


def test_gaussian_rational_conversions():
    assert complex(GaussianRational(Fraction(1, 2), 3)) == 0.5 + 3j
    assert GaussianRational.coerce(0.1).re == Fraction(0.1)
    assert GaussianRational.coerce(2 - 1j) == GaussianRational(2, -1)
    assert float(GaussianRational(Fraction(1, 4))) == 0.25
    with pytest.raises(TypeError):
        float(I)
    assert repr(GaussianRational(1, 2)) == '(1+2i)'
    assert repr(GaussianRational(0, -1)) == '-1i'


# %% normal ordering
def test_repr_normal_order():
    assert repr(d*x) == 'x*d + 1'
    assert repr(weyl_mul(WeylElement.d(2), WeylElement.x(2))) == 'x^2*d^2 + 4*x*d + 2'
    assert repr(WeylElement()) == '0'


def test_canonical_commutator():
    assert commutator(d, x) == WeylElement.scalar(1)
    assert commutator(x, d) == WeylElement.scalar(-1)
    assert commutator(WeylElement.d(2), x) == 2*d


def test_power_and_scalars():
    assert (x + d)**2 == WeylElement.x(2) + 2*x*d + WeylElement.d(2) + 1
    assert (3*x)/3 == x
    assert x + 1 == 1 + x
    assert not (x - x)


def _random_element(rng, max_terms=5, max_power=2):
    terms = {}
    for _ in range(int(rng.integers(1, max_terms + 1))):
        key = (int(rng.integers(0, max_power + 1)), int(rng.integers(0, max_power + 1)))
        terms[key] = GaussianRational(Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4))),
                                      int(rng.integers(-2, 3)))
    return WeylElement(terms)


@pytest.mark.parametrize('seed', range(10))
def test_associativity(seed):
    rng = np.random.default_rng(seed)
    a, b, c = (_random_element(rng) for _ in range(3))
    assert weyl_mul(weyl_mul(a, b), c) == weyl_mul(a, weyl_mul(b, c))


@pytest.mark.parametrize('seed', range(10))
def test_jacobi_identity(seed):
    rng = np.random.default_rng(seed)
    a, b, c = (_random_element(rng) for _ in range(3))
    jacobi = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b))
    assert not jacobi


def test_apply():
    p = Polynomial([1, 2, 0, 1])
    assert apply(d, p) == Polynomial([2, 0, 3])
    assert apply(x, p) == Polynomial([0, 1, 2, 0, 1])
    assert apply(x*d, Polynomial.monomial(4)) == Polynomial.monomial(4, 4)
    assert apply(WeylElement.d(5), p) == Polynomial()


@pytest.mark.parametrize('seed', range(10))
def test_apply_respects_products(seed):
    rng = np.random.default_rng(seed)
    a, b = _random_element(rng), _random_element(rng)
    product = a*b
    for k in range(9):
        p = Polynomial.monomial(k)
        assert apply(product, p) == apply(a, apply(b, p))


def test_polynomial():
    p = Polynomial({0: 1, 2: -1})
    assert p.degree == 2
    assert p.coefficients() == [1, 0, -1]
    assert p(2.0) == -3
    assert p*p == Polynomial([1, 0, -2, 0, 1])
    assert Polynomial().degree == -1


# %% graded series
def test_graded_exp_scalar():
    e = graded_exp(GradedOpSeries.from_element(1, 1, 5))
    for k in range(6):
        assert e.coeffs[k] == WeylElement.scalar(Fraction(1, math.factorial(k)))


def test_graded_exp_errors():
    with pytest.raises(AlgebraSizeError):
        graded_exp(GradedOpSeries.from_element(x, 1, 13))
    with pytest.raises(DomainError):
        graded_exp(GradedOpSeries.from_element(x, 0, 3))


def test_graded_exp_inverse():
    K = 5
    A = GradedOpSeries.from_element(x*d + WeylElement.d(2), 1, K)
    assert graded_exp(A)*graded_exp(-A) == GradedOpSeries.identity(K)


def test_graded_polynomial():
    Z = GradedOpSeries([x, d], 3)
    square = graded_polynomial(Polynomial([0, 0, 1]), Z)
    assert square.coeffs[0] == WeylElement.x(2)
    assert square.coeffs[1] == x*d + d*x
    assert square.coeffs[2] == WeylElement.d(2)


# %% zassenhaus
def test_zassenhaus_d2_x():
    X, Y = WeylElement.d(2), x
    c2 = zassenhaus_coeff(X, Y, 2)
    assert c2 == -d
    assert c2 == commutator(Y, X)/2
    c3 = zassenhaus_coeff(X, Y, 3)
    assert c3 == WeylElement.scalar(Fraction(-2, 3))
    assert c3 == commutator(c2, X + 2*Y)/3
    assert not zassenhaus_coeff(X, Y, 4)


def test_zassenhaus_x2_d():
    X, Y = WeylElement.x(2), d
    assert zassenhaus_coeff(X, Y, 2) == x
    assert zassenhaus_coeff(X, Y, 3) == WeylElement.scalar(Fraction(-2, 3))


def test_zassenhaus_left_form():
    X, Y = WeylElement.d(2), x
    assert zassenhaus_coeff(X, Y, 2, oriented='left') == -zassenhaus_coeff(X, Y, 2)
    assert zassenhaus_coeff(X, Y, 2, oriented='left') == commutator(X, Y)/2
    assert zassenhaus_coeff(X, Y, 3, oriented='left') == WeylElement.scalar(Fraction(-2, 3))


@pytest.mark.parametrize('seed', range(5))
def test_zassenhaus_orientations(seed):
    # left coefficients are -C_n(-X, -Y), so C_2 flips sign and C_3 does not
    rng = np.random.default_rng(seed)
    X, Y = _random_element(rng, 2), _random_element(rng, 2)
    assert zassenhaus_coeff(X, Y, 2, oriented='left') == -zassenhaus_coeff(X, Y, 2)
    assert zassenhaus_coeff(X, Y, 3, oriented='left') == zassenhaus_coeff(X, Y, 3)


def test_zassenhaus_arguments():
    with pytest.raises(ValueError):
        zassenhaus_coeff(x, d, 1)
    with pytest.raises(ValueError):
        zassenhaus_coeff(x, d, 3, K=2)
    with pytest.raises(ValueError):
        zassenhaus_coeff(x, d, 2, oriented='up')


def test_commrel():
    AB, AAB, BAB = commrel(2, 3)
    assert AB == 12*d
    assert not AAB
    assert BAB == WeylElement.scalar(-24)


@pytest.mark.parametrize('alpha, beta', [(1, 1), (2, -3), (Fraction(1, 2), I)])
def test_weyl_rule(alpha, beta):
    assert weyl_rule_check(alpha, beta)


@pytest.mark.parametrize('form', ['left', 'crofton', 'normal'])
@pytest.mark.parametrize('kappa, lam', [(1, 1), (2, -3), (Fraction(1, 2), Fraction(5, 3))])
def test_zassenhaus_chain(kappa, lam, form):
    assert zassenhaus_chain_check(kappa, lam, 6, form)


def test_plain_exponentials_do_not_disentangle():
    K = 4
    A, B = WeylElement.d(2), x
    lhs, _ = zassenhaus_chain_sides(1, 1, K)
    naive = graded_exp(GradedOpSeries.from_element(B, 1, K))*graded_exp(GradedOpSeries.from_element(A, 1, K))
    assert lhs != naive


def test_zassenhaus_chain_form():
    with pytest.raises(ValueError):
        zassenhaus_chain_sides(1, 1, 3, form='right')


# %% crofton-glaisher
@pytest.mark.parametrize('m', [1, 2, 3])
def test_crofton_glaisher(m):
    f = Polynomial([1, -2, 0, 0, 1])
    p = Polynomial([3, 0, 1, 1])
    assert crofton_glaisher_check(m, f, p, 5)
    lhs, rhs = crofton_glaisher_sides(m, f, 4)
    assert lhs == rhs


def test_crofton_glaisher_shift():
    # m=1 is the translation e^{s d} f(x) = f(x + s)
    lhs, _ = crofton_glaisher_sides(1, Polynomial.monomial(3), 3)
    graded = lhs.apply(Polynomial([1]))
    assert graded == [Polynomial.monomial(3), Polynomial.monomial(2, 3), Polynomial.monomial(1, 3),
                      Polynomial([1])]


def test_crofton_glaisher_hermite():
    n = 7
    lhs, _ = crofton_glaisher_sides(3, Polynomial.monomial(n), n//3)
    graded = lhs.apply(Polynomial([1]))
    for r in range(n//3 + 1):
        coeff = math.factorial(n)//(math.factorial(n - 3*r)*math.factorial(r))
        assert graded[r] == Polynomial.monomial(n - 3*r, coeff)


def test_crofton_glaisher_order():
    with pytest.raises(ValueError):
        crofton_glaisher_sides(0, Polynomial([1]), 2)


# %% berry rule
@pytest.mark.parametrize('alpha, beta', [(0.1, 0.1), (0.2, -0.15), (-0.1, 0.2)])
def test_berry_rule(alpha, beta):
    assert berry_rule_check(alpha, beta) <= 1e-10


def test_berry_zassenhaus_agreement():
    assert berry_zassenhaus_agreement(0.1, 0.1) <= 1e-10


def test_berry_rule_warns():
    with pytest.warns(DiscrepancyWarning):
        berry_rule_check(0.1, 0.1, deg=2, N=3, tol=1e-30)


@pytest.mark.parametrize('alpha, beta', [(0, 0.2), (0, -0.15), (0.2, 0), (-0.1, 0)])
def test_berry_rule_trivial_cases(alpha, beta):
    assert berry_rule_check(alpha, beta) <= 1e-13
