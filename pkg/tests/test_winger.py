from fractions import Fraction
from itertools import combinations

import pytest

from algebra.exactfield import ConstructionError, CycloNum, eta
from algebra.invariants import act_on_poly
from algebra.linalg import MatrixF, det
from algebra.winger import (
    EVERY, INFINITY, LineForm, ProjPoint, WingerPencil, conic_q, fixed_point, format_lambda, gram_matrix,
    group_invariance, lines_product, no_three_concurrent, preserves_form, singular_lambda, six_lines,
    solve_line_permutation, winger_sextic,
)


def test_six_lines_multiply_to_f():
    lines = six_lines()
    assert len(set(lines)) == 6
    assert no_three_concurrent(lines)
    assert lines_product(lines).proportional_to(winger_sextic())
    assert winger_sextic().degree == 6


def test_line_and_point_normalization():
    assert LineForm((0, 2, 4)) == LineForm((0, 1, 2))
    assert ProjPoint((2, 4, 2)) == ProjPoint((1, 2, 1))
    with pytest.raises(ValueError):
        ProjPoint((0, 0, 0))
    with pytest.raises(ValueError):
        LineForm((0, 0, 0))


def test_identity_permutation_gives_identity():
    m = solve_line_permutation(six_lines(), range(6))
    assert m is not None and m.is_identity()


def test_group_reconstruction(group):
    assert len(group) == 60
    assert group.verify_closure()
    assert group.class_sizes() == [1, 12, 12, 15, 20]
    assert group.is_homomorphism()
    assert group.identified_row() in ("I", "I'")
    assert group.find(MatrixF.diagonal([eta(1), eta(4), 1])) is not None


def test_group_preserves_the_form(group):
    assert all(preserves_form(m) for m in group)
    a = gram_matrix()
    assert all(m.transpose() * a * m == a for m in group)
    assert all(det(m) == 1 for m in group)


def test_q_and_f_are_invariant(group):
    assert group_invariance(group, conic_q()) == []
    assert group_invariance(group, winger_sextic()) == []


def test_corrupted_entry_is_detected(group):
    bad = group.with_corrupted_entry(element=7)
    assert not bad.verify_closure()
    assert group_invariance(bad, conic_q()) == [7]


def test_irregular_orbits(orbits):
    assert {size: len(points) for size, points in orbits.items()} == {6: 6, 10: 10, 15: 15, 12: 12}
    assert ProjPoint((0, 0, 1)) in orbits[6]
    assert ProjPoint((1, 0, 0)) in orbits[12]
    q = conic_q()
    assert all(q(p.coords).is_zero() for p in orbits[12])
    assert not any(q(p.coords).is_zero() for size in (6, 10, 15) for p in orbits[size])


@pytest.mark.parametrize("size,order", [(6, 10), (10, 6), (15, 4), (12, 5)])
def test_stabilizer_orders(group, orbits, size, order):
    assert {len(group.stabilizer(p)) for p in orbits[size]} == {order}


def test_gradients_at_the_apex(pencil):
    apex = ProjPoint((0, 0, 1))
    assert [d(apex.coords) for d in pencil.q_cubed.gradient()] == [0, 0, 6]
    assert [d(apex.coords) for d in pencil.f.gradient()] == [0, 0, 6]
    assert pencil.singular_lambda(apex) == -1


@pytest.mark.parametrize("size,expected", [(6, "-1"), (10, "27/5"), (15, INFINITY)])
def test_singular_lambda_is_constant_on_orbits(pencil, orbits, size, expected):
    assert {format_lambda(pencil.singular_lambda(p)) for p in orbits[size]} == {expected}


def test_base_points_lie_on_three_k(pencil, orbits):
    # grad Q^3 vanishes on K, grad F does not at a smooth point of one line
    assert {format_lambda(pencil.singular_lambda(p)) for p in orbits[12]} == {"0"}


@pytest.mark.parametrize("size,lam", [(6, Fraction(-1)), (10, Fraction(27, 5)), (15, INFINITY)])
def test_nodes(pencil, orbits, size, lam):
    assert all(pencil.is_singular_at(lam, p) for p in orbits[size])
    assert all(pencil.node_check(lam, p) for p in orbits[size])


def test_triple_conic_has_no_nodes(pencil, orbits):
    assert not any(pencil.node_check(0, p) for p in orbits[12])


def test_fifteen_orbit_is_the_line_crossings(orbits):
    crossings = {a.meet(b) for a, b in combinations(six_lines(), 2)}
    assert crossings == set(orbits[15])


def test_base_locus_lies_on_every_member(pencil, orbits, rng):
    for _ in range(5):
        lam = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
        member = pencil.member(lam)
        assert all(member(p.coords).is_zero() for p in orbits[12])


def test_random_members_are_smooth_on_orbits(pencil, orbits, rng):
    for _ in range(10):
        lam = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
        if lam in (0, -1, Fraction(27, 5)):
            continue
        for points in orbits.values():
            assert not any(pencil.is_singular_at(lam, p) for p in points)


def test_member_invariance(group, pencil):
    member = pencil.member(Fraction(7, 3))
    assert all(act_on_poly(m, member) == member for m in group)


def test_every_member_singular_sentinel():
    pencil = WingerPencil(conic_q(), conic_q() ** 3)
    # both gradients vanish on K
    assert pencil.singular_lambda(ProjPoint((1, 0, 0))) == EVERY


def test_singular_lambda_rejects_the_zero_point():
    class Zero:
        coords = (CycloNum.zero(),) * 3

    with pytest.raises(ValueError):
        singular_lambda(Zero())


def test_fixed_point_needs_a_simple_eigenvalue():
    with pytest.raises(ConstructionError):
        fixed_point(MatrixF.identity(3))
    assert fixed_point(MatrixF.diagonal([eta(1), eta(4), 1])) == ProjPoint((0, 0, 1))
