#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

from fractions import Fraction

import pytest

from hkrcheck.complexes.polynomial import Polynomial, PolynomialMatrix


def x(i, n=2):
    return Polynomial.variable(n, i)


def test_arithmetic_cancels_terms():
    p = x(0) + x(1)
    q = x(0) - x(1)
    assert p * q == x(0) * x(0) - x(1) * x(1)
    assert (p - p).is_zero()
    assert p.scale(0).is_zero()
    assert (p * 2).coefficient((1, 0)) == 2
    assert (Fraction(1, 2) * p).coefficient((0, 1)) == Fraction(1, 2)


def test_degrees_and_homogeneity():
    p = x(0) * x(1) + x(1) * x(1)
    assert p.degree() == 2
    assert p.homogeneous_degree() == 2
    assert Polynomial.zero(2).homogeneous_degree() is None
    mixed = p + x(0)
    assert not mixed.is_homogeneous()
    with pytest.raises(ValueError):
        mixed.homogeneous_degree()


def test_linear_form_and_substitution():
    form = Polynomial.linear([1, "-1/2"])
    assert form.coefficient((1, 0)) == 1
    assert form.coefficient((0, 1)) == Fraction(-1, 2)
    u = Polynomial.variable(1, 0)
    # x -> u, y -> 2u
    restricted = form.substitute([u, u.scale(2)])
    assert restricted.is_zero()
    square = (x(0) * x(1)).substitute([u, u.scale(3)])
    assert square == (u * u).scale(3)


def test_constant_substitution_needs_a_ring():
    constant = Polynomial.constant(0, 5)
    with pytest.raises(ValueError):
        constant.substitute([])
    assert constant.substitute([], target_nvars=2) == Polynomial.constant(2, 5)


def test_rejects_mismatched_rings():
    with pytest.raises(ValueError):
        x(0, 2) + x(0, 3)
    with pytest.raises(ValueError):
        Polynomial(2, {(1,): 1})
    with pytest.raises(ValueError):
        Polynomial.variable(2, 2)


def test_polynomial_matrix_product():
    a = PolynomialMatrix.from_rows(2, [[x(0), x(1)]])
    b = PolynomialMatrix.from_rows(2, [[x(1)], [-x(0)]])
    assert (a @ b).is_zero()
    assert a.transpose().shape == (2, 1)
    assert list(a.nonzero_entries()) == [(0, 0, x(0)), (0, 1, x(1))]
    with pytest.raises(ValueError):
        a @ a
