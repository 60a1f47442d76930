from fractions import Fraction

import pytest
import sympy

from algebra.exactfield import eta
from algebra.invariants import (
    Poly3, PowSeries, act_on_poly, closed_form_series, diagonal_subgroup, in_span, is_invariant,
    molien_series, monomial_count, monomials, reynolds, reynolds_basis,
)
from algebra.linalg import MatrixF
from algebra.winger import conic_q, winger_sextic

PRECISION = 30


def test_monomials():
    assert monomial_count(6) == 28
    assert len(monomials(6)) == 28
    assert monomials(1) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_poly_arithmetic():
    x, y, z = (Poly3.variable(i) for i in range(3))
    f = (x + y) ** 2
    assert f == x * x + (x * y).scale(2) + y * y
    assert f.degree == 2
    assert f.derivative(0) == (x + y).scale(2)
    assert f((1, 2, 5)) == 9
    assert (x - x).is_zero()


def test_act_on_poly_is_precomposition():
    swap = MatrixF.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    x, y = Poly3.variable(0), Poly3.variable(1)
    assert act_on_poly(swap, x * x * y) == y * y * x
    assert act_on_poly(swap, conic_q()) == conic_q()


def test_closed_form_matches_sympy():
    t = sympy.Symbol("t")
    expr = (1 + t ** 15) / ((1 - t ** 2) * (1 - t ** 6) * (1 - t ** 10))
    poly = sympy.series(expr, t, 0, PRECISION + 1).removeO()
    expected = [int(poly.coeff(t, k)) for k in range(PRECISION + 1)]
    assert closed_form_series(PRECISION).as_ints() == expected


def test_power_series_division():
    one_minus_t = PowSeries.from_polynomial([1, -1], 5)
    geometric = PowSeries.from_polynomial([1], 5) / one_minus_t
    assert geometric.as_ints() == [1] * 6
    assert (geometric * one_minus_t).as_ints() == [1, 0, 0, 0, 0, 0]
    assert PowSeries([Fraction(1, 2)]).is_integral() is False


def test_molien_series_of_the_group(group):
    series = molien_series(list(group), PRECISION)
    assert series == closed_form_series(PRECISION)
    coeffs = series.as_ints()
    assert coeffs[:7] == [1, 0, 1, 0, 1, 0, 2]
    assert all(coeffs[k] == 0 for k in range(1, 15, 2))
    assert coeffs[15] == 1


def test_molien_of_a_cyclic_group():
    rotation = MatrixF.diagonal([eta(1), eta(4), 1])
    cyclic = [rotation ** k for k in range(5)]
    # invariants of z0 -> eta z0, z1 -> eta^4 z1: z0 z1, z2 and powers; degree 1 has only z2
    assert molien_series(cyclic, 3).as_ints() == [1, 1, 2, 2]


@pytest.mark.parametrize("degree", [0, 1, 2, 3, 4, 6, 8, 10, 12, 15])
def test_reynolds_dimensions_match_molien(group, degree):
    coeffs = closed_form_series(15).as_ints()
    assert len(reynolds_basis(list(group), degree)) == coeffs[degree]


def test_invariant_generators(group):
    matrices = list(group)
    q, f = conic_q(), winger_sextic()
    assert is_invariant(matrices, q)
    assert is_invariant(matrices, f)
    quadrics = reynolds_basis(matrices, 2)
    assert len(quadrics) == 1 and quadrics[0].proportional_to(q)
    sextics = reynolds_basis(matrices, 6)
    assert in_span(q ** 3, sextics, 6) and in_span(f, sextics, 6)
    assert not in_span(Poly3.variable(0) ** 6, sextics, 6)


def test_reynolds_is_a_projection(group):
    matrices = list(group)
    assert reynolds(matrices, conic_q()) == conic_q()
    images = [reynolds(matrices, Poly3({e: 1})) for e in monomials(2)]
    assert any(images)
    for image in images:
        assert image.is_zero() or image.proportional_to(conic_q())
        assert reynolds(matrices, image) == image
    assert reynolds(matrices, Poly3.variable(0)).is_zero()


def test_diagonal_subgroup_is_cyclic_of_order_five(group):
    assert len(diagonal_subgroup(list(group))) == 5
