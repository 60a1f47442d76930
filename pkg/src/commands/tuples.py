"""
Generating tuple and braid orbit commands for the Winger verifier.
"""
import random

from algebra.hurwitz import (
    PURE, WEIGHTED, GenTuple, TupleClass, braid_orbits, displayed_move_one, displayed_move_two,
    enumerate_tuple_classes, factorization_side_condition, involution_factorizations, move_one_as_word,
    move_two_as_word, order_sets, outer_swap, pair_is_free, pair_orbits, partition_by_g1_class,
    same_partition, split_by, validate_table_row,
)
from algebra.perm import COMPOSITION_CONVENTION, Perm, format_perm


def _split_witness(classes):
    return {"count": len(classes), "by_r": split_by(classes, "r"), "by_g1_class": split_by(classes, "g1_class")}


def setup_tuples_commands(registry):
    """Set up tuple enumeration and mapping-class claims."""

    @registry.claim("order-sets", "A5 has 24 elements of order 5, 15 of order 2 and 20 of order 3", "tuples")
    def order_sets_claim(ctx):
        counts = order_sets()
        return counts == {2: 15, 3: 20, 5: 24}, counts

    @registry.claim("pair-orbits", "six free orbits of (order 5, order 2) pairs, each containing one listed "
                    "pair, with ord(g1 g2) in {2, 3, 5} twice each", "tuples")
    def pair_orbits_claim(ctx):
        references = ctx.references["pairs"]
        orbits = pair_orbits([e["pair"] for e in references], ctx.convention)
        matched = sorted(o.matched for o in orbits if o.matched is not None)
        free = all(len(o) == 60 and pair_is_free(o.rep) for o in orbits)
        r_values = sorted(o.r for o in orbits)
        stated = all(references[o.matched]["r"] == o.r for o in orbits if o.matched is not None)
        passed = len(orbits) == 6 and free and matched == list(range(6)) and r_values == [2, 2, 3, 3, 5, 5]
        return passed and stated, {"orbits": len(orbits), "sizes": [len(o) for o in orbits],
                                   "r_values": r_values, "matched_rows": matched, "free": free}

    @registry.claim("involution-factorizations", "h of order r has r factorizations into two involutions: "
                    "commuting for r = 2, one free <h>-orbit for r = 3, 5", "tuples")
    def involution_factorizations_claim(ctx):
        witness = {}
        passed = True
        for text in ("(12)(34)", "(123)", "(12345)"):
            h = Perm.parse(text)
            pairs = involution_factorizations(h, ctx.convention)
            side = factorization_side_condition(h, pairs)
            witness[text] = {"count": len(pairs), "side_condition": side}
            passed = passed and len(pairs) == h.order() and side
        return passed, witness

    @registry.claim("tuple-classes-20", "A5(5,2,2,2) has 20 classes, split 4/6/10 by ord(g1 g2) and "
                    "10/10 by the class of g1", "tuples")
    def tuple_classes_20(ctx):
        classes = ctx.tuple_classes
        witness = _split_witness(classes)
        passed = (witness["count"] == 20 and witness["by_r"] == {2: 4, 3: 6, 5: 10}
                  and sorted(witness["by_g1_class"].values()) == [10, 10])
        return passed, witness

    @registry.claim("tuple-table-rows", "each published tuple row is a valid class with its stated r", "tuples")
    def table_rows(ctx):
        classes = ctx.tuple_classes
        rows = ctx.references["tuples"]
        results = [validate_table_row(row, classes, ctx.convention) for row in rows]
        matched = {TupleClass.of(_normalized(row, how, ctx.convention)) for row, (ok, how) in zip(rows, results) if ok}
        passed = all(ok for ok, _ in results) and len(matched) == len(rows)
        return passed, {"rows": len(rows), "normalizations": [how for _, how in results],
                        "distinct_classes": len(matched)}

    @registry.claim("braid-orbits", "pure and weighted moves each give two orbits of size 10, equal to "
                    "the g1-class partition, with every r value in each orbit", "tuples")
    def braid_orbits_claim(ctx):
        classes = ctx.tuple_classes
        by_g1 = partition_by_g1_class(classes)
        witness = {}
        passed = True
        for generator_set in (PURE, WEIGHTED):
            orbits = braid_orbits(classes, generator_set)
            mixed = all({c.r for c in orbit} == {2, 3, 5} for orbit in orbits)
            coincide = same_partition(orbits, by_g1)
            witness[generator_set] = {"sizes": [len(o) for o in orbits], "matches_g1_partition": coincide,
                                      "all_r_in_each_orbit": mixed}
            passed = passed and [len(o) for o in orbits] == [10, 10] and coincide and mixed
        witness["cover_degrees"] = {"pure_orbit": len(by_g1[0]) if by_g1 else 0, "all_tuples": len(classes)}
        return passed, witness

    @registry.claim("displayed-moves", "both displayed tuple transformations are braid words up to "
                    "conjugation and reproduce the published type-changing examples", "tuples")
    def displayed_moves(ctx):
        classes = ctx.tuple_classes
        first = all(displayed_move_one(c.rep) == move_one_as_word(c.rep) for c in classes)
        second = all(displayed_move_two(c.rep) == move_two_as_word(c.rep) for c in classes)
        preserved = all(displayed_move_two(c.rep).product().is_identity() for c in classes)
        examples = []
        for example in ctx.references["move_examples"]:
            t = GenTuple.parse(example["tuple"], COMPOSITION_CONVENTION)
            image = displayed_move_two(t)
            head = [format_perm(image[0], compact=True), format_perm(image[1], compact=True)]
            head_product = format_perm(image.mul(image[0], image[1]), compact=True)
            examples.append({"image": image.to_strings(), "head_product": head_product,
                             "r_before": t.r_value(), "r_after": image.r_value(),
                             "ok": head == example["image_head"] and head_product == example["head_product"]})
        passed = first and second and preserved and all(e["ok"] for e in examples)
        return passed, {"move_one_is_word": first, "move_two_is_word": second,
                        "product_preserved": preserved, "examples": examples}

    @registry.claim("outer-swap", "conjugating by (12) swaps the two g1-class blocks of tuple classes",
                    "tuples")
    def outer_swap_claim(ctx):
        classes = ctx.tuple_classes
        blocks = partition_by_g1_class(classes)
        if len(blocks) != 2:
            return False, {"blocks": len(blocks)}
        image = {outer_swap(c) for c in blocks[0]}
        passed = image == set(blocks[1]) and all(outer_swap(c).r == c.r for c in classes)
        return passed, {"block_sizes": [len(b) for b in blocks], "swapped": image == set(blocks[1])}

    @registry.claim("enumeration-stable", "canonical classes do not depend on the enumeration order",
                    "tuples")
    def enumeration_stable(ctx):
        shuffled = enumerate_tuple_classes(ctx.convention, random.Random(ctx.settings["random_seed"] + 1))
        same = [c.rep.key() for c in shuffled] == [c.rep.key() for c in ctx.tuple_classes]
        return same, {"classes": len(shuffled), "identical": same}

    @registry.claim("convention-independence", "class counts and splits agree under both composition "
                    "conventions", "tuples")
    def convention_independence(ctx):
        witness = {}
        for convention in ("rtl", "ltr"):
            classes = ctx.tuple_classes if convention == ctx.convention else enumerate_tuple_classes(convention)
            witness[convention] = _split_witness(classes)
        return witness["rtl"] == witness["ltr"], witness


def _normalized(row, how, convention):
    t = GenTuple.parse(row["tuple"], convention)
    return t if how == "as-is" else t.inverted()

