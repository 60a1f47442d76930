import pytest

from algebra.characters import (
    ClassFunction, a5_classes, a5_table, chi_e, class_swap_by, column_orthogonality, decompose,
    degree_sum_of_squares, induced_character, inner_product, outer_twist, restrict_to_a5, restricted_sign,
    s5_classes, signed_orbit_character, sym_cube, symmetric_three, trivial_character,
)
from algebra.exactfield import golden_ratio
from algebra.perm import alternating_group


def test_class_sizes():
    assert a5_classes().sizes == (1, 15, 20, 12, 12)
    assert sum(s5_classes().sizes) == 120
    assert a5_classes().centralizer_orders() == [60, 4, 3, 5, 5]


def test_table_is_orthonormal():
    table = a5_table()
    assert list(table) == ["trivial", "I", "I'", "V", "W"]
    assert column_orthogonality(table)
    assert degree_sum_of_squares(table) == 60
    for a in table.values():
        for b in table.values():
            assert inner_product(a, b) == (1 if a is b else 0)


def test_icosahedral_rows_use_the_golden_ratio():
    table = a5_table()
    values = set(table["I"].values[3:]) | set(table["I'"].values[3:])
    assert golden_ratio() in values
    assert 1 - golden_ratio() in values


def test_sym_cube():
    table = a5_table()
    cube = sym_cube(table["I"])
    assert cube.to_strings() == ["10", "-2", "1", "0", "0"]
    assert cube == sym_cube(table["I'"])
    assert decompose(cube) == {"I": 1, "I'": 1, "V": 1}


def test_restriction_of_e():
    restricted = restrict_to_a5(chi_e())
    assert restricted.to_strings() == ["6", "-2", "0", "1", "1"]
    assert decompose(restricted) == {"I": 1, "I'": 1}


def test_induced_sign_of_s3():
    chi = induced_character(symmetric_three(), restricted_sign((1, 2, 3)))
    assert chi.to_strings() == ["10", "-2", "1", "0", "0"]
    assert chi == signed_orbit_character()
    assert decompose(chi + chi.conjugate()) == {"I": 2, "I'": 2, "V": 2}


def test_induced_trivial_from_whole_group():
    assert induced_character(alternating_group(), lambda g: 1) == trivial_character()


def test_outer_twist_swaps_i_and_i_prime():
    table = a5_table()
    assert class_swap_by("(12)") == [0, 1, 2, 4, 3]
    assert outer_twist(table["I"]) == table["I'"]
    assert outer_twist(table["V"]) == table["V"]


def test_decompose_rejects_non_characters():
    with pytest.raises(ValueError):
        decompose(ClassFunction("A5", [1, 0, 0, 0, 0]))
    with pytest.raises(ValueError):
        decompose(chi_e())
