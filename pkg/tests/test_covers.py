import random

import pytest

from algebra.covers import (
    MEMBER_BY_NODES, OrbSignature, Quaternion, alpha_value, binary_icosahedral_checks,
    binary_icosahedral_elements, degeneration_report, derived_subgroup, generating_set,
    homology_character_check, regular_cover_genus, signature_solutions,
)


@pytest.mark.parametrize("order, expected", [(1, 0), (2, 30), (3, 40), (5, 48)])
def test_alpha_value(order, expected):
    assert alpha_value(order) == expected


@pytest.mark.parametrize("order", [4, 6, 0])
def test_alpha_value_rejects_non_cyclic_orders(order):
    with pytest.raises(ValueError):
        alpha_value(order)


def test_only_genus_ten_signature():
    assert signature_solutions() == [OrbSignature(0, (5, 2, 2, 2))]
    assert str(signature_solutions()[0]) == "(0;5,2,2,2)"


def test_bounded_search_agrees():
    assert signature_solutions(max_points=5) == signature_solutions()


def test_invalid_signature():
    with pytest.raises(ValueError):
        OrbSignature(-1, (2,))
    with pytest.raises(ValueError):
        OrbSignature(0, (1, 2))


@pytest.mark.parametrize("n, orders, genus", [
    (60, (5, 2, 2, 2), 10),
    (3, (3,) * 12, 10),
    (10, (5, 2, 2), 0),
    (60, (5, 2, 5), 4),
    (60, (2, 3, 5), 0),
])
def test_regular_cover_genus(n, orders, genus):
    assert regular_cover_genus(n, orders) == genus


def test_regular_cover_genus_rejects_bad_orders():
    with pytest.raises(ValueError):
        regular_cover_genus(60, (7, 2, 2))
    with pytest.raises(ValueError):
        regular_cover_genus(60, (5, 2))


@pytest.mark.parametrize("r, triple", [(2, (15, 6, 0)), (3, (10, 1, 0)), (5, (6, 1, 4))])
def test_degeneration_reports(tuple_classes, r, triple):
    reports = [degeneration_report(c.rep) for c in tuple_classes if c.r == r]
    assert reports
    for report in reports:
        assert report.n == r
        assert report.as_triple() == triple
        assert report.arithmetic_genus == 10
        assert report.nodes * report.node_stabilizer_order == 60
        assert report.nodes in MEMBER_BY_NODES


def test_homology_character():
    check = homology_character_check()
    assert check.passed
    assert check.decomposition == {"I": 1, "I'": 1, "V": 1}
    assert check.equals_sym_cube


def test_binary_icosahedral():
    report = binary_icosahedral_checks()
    assert report.order == 120
    assert report.center_order == 2
    assert report.abelianization_order == 1
    assert report.passed


def test_icosians_are_perfect_in_any_order():
    elements = binary_icosahedral_elements()
    shuffled = list(elements)
    random.Random(5).shuffle(shuffled)
    assert generating_set(shuffled) == generating_set(elements)
    assert len(derived_subgroup(shuffled)) == 120


def test_derived_subgroup_of_smaller_groups():
    one, i = Quaternion(1, 0, 0, 0), Quaternion(0, 1, 0, 0)
    quaternion_group = [Quaternion(*[s if k == pos else 0 for k in range(4)]) for pos in range(4) for s in (1, -1)]
    assert derived_subgroup(quaternion_group) == {one, -one}
    assert derived_subgroup([one, i, -one, -i]) == {one}
