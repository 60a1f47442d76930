import random

import pytest
from sympy.combinatorics.named_groups import AlternatingGroup

from algebra.perm import (
    Perm, alternating_group, are_conjugate, closure, conjugacy_classes, coset_action, format_perm, left_cosets,
    multiply, orbit, symmetric_group,
)


def test_parse_forms_agree():
    assert Perm.parse("(12)(35)") == Perm.parse("(1 2)(3 5)") == Perm.from_cycles([(1, 2), (3, 5)], 5)
    assert Perm.parse("()").is_identity()
    with pytest.raises(ValueError):
        Perm.parse("(1 1 2)")
    with pytest.raises(ValueError):
        Perm.parse("12")


def test_composition_is_right_to_left():
    g, h = Perm.parse("(12)"), Perm.parse("(23)")
    # h first: 1 -> 1 -> 2
    assert (g * h)(1) == 2
    assert multiply(g, h, "rtl") == g * h
    assert multiply(g, h, "ltr") == h * g
    with pytest.raises(ValueError):
        multiply(g, h, "sideways")


def test_orders_and_signs():
    assert Perm.parse("(12345)").order() == 5
    assert Perm.parse("(12)(34)").order() == 2
    assert Perm.parse("(12)").sign() == -1
    assert Perm.parse("(123)").cycle_type() == (3, 1, 1)
    assert format_perm(Perm.parse("(15432)"), compact=True) == "(15432)"


def test_alternating_group_classes_match_sympy():
    ours = sorted(len(c) for c in conjugacy_classes(alternating_group()))
    theirs = sorted(len(c) for c in AlternatingGroup(5).conjugacy_classes())
    assert ours == theirs == [1, 12, 12, 15, 20]
    assert alternating_group().verify_group()
    assert symmetric_group().order == 120


def test_closures():
    assert closure([Perm.parse("(12345)")]).order == 5
    assert closure([Perm.parse("(123)"), Perm.parse("(12)(45)")]).order == 6
    assert closure([Perm.parse("(12345)"), Perm.parse("(12)(34)")]).order == 60


def test_order_five_classes_split_in_a5():
    a, b = Perm.parse("(12345)"), Perm.parse("(12354)")
    assert not are_conjugate(alternating_group(), a, b)
    assert are_conjugate(symmetric_group(), a, b)


@pytest.mark.parametrize("generator,degree", [("(12345)", 12), ("(123)", 20), ("(12)(34)", 30)])
def test_coset_actions(generator, degree):
    a5 = alternating_group()
    subgroup = closure([Perm.parse(generator)])
    assert len(left_cosets(a5, subgroup)) == degree
    action = coset_action(a5, subgroup)
    assert {p.degree for p in action.values()} == {degree}
    assert len(set(action.values())) == 60


def test_orbit_of_points():
    gens = [Perm.parse("(12345)")]
    assert sorted(orbit([1], lambda g, x: g(x), gens)) == [1, 2, 3, 4, 5]


@pytest.mark.parametrize("seed", range(8))
def test_closure_order_divides_sixty(seed):
    rng = random.Random(seed)
    elements = list(alternating_group())
    gens = rng.sample(elements, rng.randint(1, 3))
    subgroup = closure(gens)
    assert 60 % subgroup.order == 0
    assert subgroup.is_subgroup_of(alternating_group())
