import random

import pytest
import sympy

from algebra.exactfield import eta
from algebra.linalg import MatrixF, UniPoly, charpoly, det, kernel, rank


def _random_integer_matrix(rng, size):
    return [[rng.randint(-5, 5) for _ in range(size)] for _ in range(size)]


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_det_matches_sympy(seed):
    rows = _random_integer_matrix(random.Random(seed), 4)
    assert det(MatrixF.from_rows(rows)) == int(sympy.Matrix(rows).det())


def test_charpoly_matches_sympy():
    rows = _random_integer_matrix(random.Random(7), 3)
    x = sympy.Symbol("x")
    expected = [int(c) for c in reversed(sympy.Matrix(rows).charpoly(x).all_coeffs())]
    assert charpoly(MatrixF.from_rows(rows)) == UniPoly(expected)


def test_cayley_hamilton_over_cyclotomics():
    m = MatrixF.from_rows([[eta(1), 1, 0], [0, eta(2), 1], [1, 0, eta(3)]])
    assert charpoly(m).evaluate_matrix(m).is_zero()


def test_kernel_and_rank():
    m = MatrixF.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rank(m) == 2
    basis = kernel(m)
    assert len(basis) == 1
    assert all(c == 0 for c in m.apply(basis[0]))


def test_identity_and_powers():
    rotation = MatrixF.diagonal([eta(1), eta(4), 1])
    assert (rotation ** 5).is_identity()
    assert not (rotation ** 2).is_identity()
    assert rotation.trace() == eta(1) + eta(4) + 1


def test_shape_mismatch():
    with pytest.raises(ValueError):
        MatrixF.identity(3) * MatrixF.identity(2)


def _random_cyclo_matrix(rng, rows, cols):
    return MatrixF(rows, cols, [rng.randint(-3, 3) + rng.randint(-2, 2) * eta(rng.randint(1, 4))
                                for _ in range(rows * cols)])


@pytest.mark.parametrize("seed", [1, 2, 3, 4])
def test_det_is_multiplicative(seed):
    rng = random.Random(seed)
    a, b = _random_cyclo_matrix(rng, 3, 3), _random_cyclo_matrix(rng, 3, 3)
    assert det(a * b) == det(a) * det(b)


@pytest.mark.parametrize("seed, rows, cols", [(1, 2, 4), (2, 3, 5), (3, 4, 3), (4, 3, 3), (5, 5, 4)])
def test_rank_nullity_on_random_matrices(seed, rows, cols):
    rng = random.Random(seed)
    m = _random_cyclo_matrix(rng, rows, cols)
    if rows > 1:
        # repeat a scaled row so some matrices are rank deficient
        m = MatrixF(rows, cols, list(m.row(0)) + [2 * x for x in m.row(0)] + list(m.entries[2 * cols:]))
    basis = kernel(m)
    assert len(basis) + rank(m) == m.cols
    assert all(all(c == 0 for c in m.apply(v)) for v in basis)
