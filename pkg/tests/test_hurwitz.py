import random

import pytest

from algebra.hurwitz import (
    PURE, WEIGHTED, GenTuple, TupleClass, braid_orbits, displayed_move_one, displayed_move_two,
    enumerate_tuple_classes, enumerate_tuples, factorization_side_condition, hurwitz_move,
    involution_factorizations, move_one_as_word, move_two_as_word, order_sets, outer_swap, pair_is_free,
    pair_orbits, partition_by_g1_class, same_partition, split_by, validate_table_row,
)
from algebra.perm import Perm, format_perm
from utils import load_reference_tables


@pytest.fixture(scope="module")
def references():
    return load_reference_tables()


def test_order_sets():
    assert order_sets() == {2: 15, 3: 20, 5: 24}


def test_pair_orbits(references):
    orbits = pair_orbits([e["pair"] for e in references["pairs"]])
    assert len(orbits) == 6
    assert all(len(o) == 60 for o in orbits)
    assert sorted(o.r for o in orbits) == [2, 2, 3, 3, 5, 5]
    assert sorted(o.matched for o in orbits) == list(range(6))
    assert all(pair_is_free(o.rep) for o in orbits)


@pytest.mark.parametrize("text", ["(12)(34)", "(123)", "(12345)"])
def test_involution_factorizations(text):
    h = Perm.parse(text)
    pairs = involution_factorizations(h)
    assert len(pairs) == h.order()
    assert factorization_side_condition(h, pairs)


def test_involution_factorizations_reject_identity():
    with pytest.raises(ValueError):
        involution_factorizations(Perm.identity(5))


def test_twenty_classes(tuple_classes):
    assert len(tuple_classes) == 20
    assert split_by(tuple_classes, "r") == {2: 4, 3: 6, 5: 10}
    assert sorted(split_by(tuple_classes, "g1_class").values()) == [10, 10]
    assert all(c.rep.is_valid() for c in tuple_classes)
    assert len(enumerate_tuples()) == 20 * 60


def test_enumeration_does_not_depend_on_order(tuple_classes):
    shuffled = enumerate_tuple_classes(rng=random.Random(99))
    assert shuffled == tuple_classes


def test_other_convention_gives_the_same_counts():
    classes = enumerate_tuple_classes("ltr")
    assert len(classes) == 20
    assert split_by(classes, "r") == {2: 4, 3: 6, 5: 10}


def test_table_rows_validate(references, tuple_classes):
    rows = references["tuples"]
    results = [validate_table_row(row, tuple_classes) for row in rows]
    assert all(ok for ok, _ in results)
    assert {how for _, how in results} <= {"as-is", "inverted"}


def test_table_rows_fail_with_a_wrong_r(references, tuple_classes):
    row = dict(references["tuples"][0], r=5)
    assert validate_table_row(row, tuple_classes) == (False, "none")


def test_hurwitz_move_inverse_and_product(tuple_classes):
    for c in tuple_classes:
        t = c.rep
        for k in (1, 2, 3):
            moved = hurwitz_move(k, t)
            assert moved.product().is_identity()
            assert hurwitz_move(k, moved, inverse=True) == t
            assert moved.generates()
    with pytest.raises(ValueError):
        hurwitz_move(4, tuple_classes[0].rep)


def test_displayed_moves_are_braid_words(tuple_classes):
    for c in tuple_classes:
        assert displayed_move_one(c.rep) == move_one_as_word(c.rep)
        assert displayed_move_two(c.rep) == move_two_as_word(c.rep)


def test_published_type_changing_examples(references):
    for example in references["move_examples"]:
        t = GenTuple.parse(example["tuple"])
        image = displayed_move_two(t)
        assert [format_perm(image[0], compact=True), format_perm(image[1], compact=True)] == example["image_head"]
        assert format_perm(image.mul(image[0], image[1]), compact=True) == example["head_product"]
        assert image.r_value() != t.r_value()


@pytest.mark.parametrize("generator_set", [PURE, WEIGHTED])
def test_braid_orbits(tuple_classes, generator_set):
    orbits = braid_orbits(tuple_classes, generator_set)
    assert [len(o) for o in orbits] == [10, 10]
    assert same_partition(orbits, partition_by_g1_class(tuple_classes))
    assert all({c.r for c in orbit} == {2, 3, 5} for orbit in orbits)


def test_outer_swap_exchanges_blocks(tuple_classes):
    first, second = partition_by_g1_class(tuple_classes)
    assert {outer_swap(c) for c in first} == set(second)


def test_tuple_class_is_conjugation_invariant(tuple_classes):
    t = tuple_classes[3].rep
    assert TupleClass.of(t.conjugate(Perm.parse("(13)(24)"))) == tuple_classes[3]


def test_rows_normalize_by_inversion_not_reversal(references):
    for row in references["tuples"]:
        t = GenTuple.parse(row["tuple"])
        assert not t.reversed().is_valid()
        assert t.is_valid() or t.inverted().is_valid()
        assert t.inverted().r_value() == t.r_value()
