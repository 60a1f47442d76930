import random

import pytest
import sympy

from algebra.discriminant import DISCRIMINANT_DEGREE, MacaulayLayout, PencilDiscriminant, integer_det
from algebra.invariants import monomials


@pytest.mark.parametrize("size", [1, 2, 3, 5, 8])
def test_integer_det_matches_sympy(size):
    rng = random.Random(size)
    rows = [[rng.randint(-9, 9) for _ in range(size)] for _ in range(size)]
    assert integer_det(rows) == sympy.Matrix(rows).det()


def test_integer_det_needs_pivoting():
    assert integer_det([[0, 1], [1, 0]]) == -1
    assert integer_det([[0, 0], [1, 2]]) == 0
    assert integer_det([]) == 1


def test_macaulay_layout_for_quintic_gradients():
    layout = MacaulayLayout(5)
    assert layout.total == 13
    assert layout.size == len(monomials(13)) == 105
    assert len(layout.rows) == layout.size
    assert 0 < len(layout.non_reduced) < layout.size


def test_discriminant_degree():
    assert DISCRIMINANT_DEGREE == 3 * 5 ** 2


def test_resultant_vanishes_at_a_singular_member(pencil):
    engine = PencilDiscriminant(pencil, random.Random(7))
    engine.change_coordinates()
    value = engine.evaluate(-1)
    assert value is None or value == 0


def test_resultant_is_nonzero_at_a_smooth_member(pencil):
    engine = PencilDiscriminant(pencil, random.Random(7))
    engine.change_coordinates()
    value = engine.evaluate(2)
    assert value is None or value != 0
