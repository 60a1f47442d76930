"""
Character table commands for the Winger verifier.
"""
from algebra.characters import (
    a5_classes, a5_table, chi_e, class_swap_by, column_orthogonality, decompose, degree_sum_of_squares,
    format_decomposition, outer_twist, restrict_to_a5, s5_classes, sym_cube, symmetric_three,
)
from algebra.perm import Perm, alternating_group, are_conjugate, closure, coset_action, symmetric_group

SYM_CUBE_VALUES = ["10", "-2", "1", "0", "0"]


def setup_characters_commands(registry):
    """Set up character-table claims."""

    @registry.claim("a5-class-sizes", "A5 has classes of sizes 1, 15, 20, 12, 12", "characters")
    def a5_class_sizes(ctx):
        structure = a5_classes()
        witness = dict(zip(structure.rep_strings, structure.sizes))
        passed = structure.sizes == (1, 15, 20, 12, 12) and all(60 % s == 0 for s in structure.sizes)
        return passed, witness

    @registry.claim("perm-closures", "closure and coset-action orders: 5, 60, 6 and degrees 1, 10, 20",
                    "characters")
    def perm_closures(ctx):
        a5 = alternating_group()
        cyclic = closure([Perm.parse("(12345)")])
        s3 = symmetric_three()
        three = closure([Perm.parse("(123)")])
        degrees = {}
        for name, subgroup in (("A5", a5), ("S3", s3), ("C3", three)):
            action = coset_action(a5, subgroup)
            image = set(action.values())
            assert len(image) * _kernel_size(action) == a5.order, f"image/kernel mismatch for {name}"
            degrees[name] = next(iter(image)).degree
        orders = {"C5": cyclic.order, "A5": a5.order, "S3": s3.order}
        passed = orders == {"C5": 5, "A5": 60, "S3": 6} and degrees == {"A5": 1, "S3": 10, "C3": 20}
        return passed, {"orders": orders, "coset_degrees": degrees}

    @registry.claim("s5-class-split", "(12345) and (12354) are conjugate in S5 but not in A5", "characters")
    def s5_class_split(ctx):
        a, b = Perm.parse("(12345)"), Perm.parse("(12354)")
        in_a5 = are_conjugate(alternating_group(), a, b)
        in_s5 = are_conjugate(symmetric_group(), a, b)
        return (not in_a5 and in_s5), {"conjugate_in_A5": in_a5, "conjugate_in_S5": in_s5,
                                       "S5_class_sizes": list(s5_classes().sizes)}

    @registry.claim("sym-cube-table", "orthogonal A5 table; Sym^3 I = Sym^3 I' = (10,-2,1,0,0) = V+I+I'; "
                    "E restricts to I+I'", "characters")
    def sym_cube_table(ctx):
        table = a5_table()
        assert column_orthogonality(table), "column orthogonality fails"
        assert degree_sum_of_squares(table) == 60, "degrees do not square-sum to 60"
        cube_i = sym_cube(table["I"])
        cube_i_prime = sym_cube(table["I'"])
        restricted = restrict_to_a5(chi_e())
        passed = (cube_i.to_strings() == SYM_CUBE_VALUES and cube_i == cube_i_prime
                  and decompose(cube_i) == {"I": 1, "I'": 1, "V": 1}
                  and restricted.to_strings() == ["6", "-2", "0", "1", "1"]
                  and decompose(restricted) == {"I": 1, "I'": 1})
        return passed, {
            "table": {label: chi.to_strings() for label, chi in table.items()},
            "sym_cube_I": cube_i.to_strings(),
            "sym_cube_I'": cube_i_prime.to_strings(),
            "decomposition": format_decomposition(decompose(cube_i)),
            "E_restricted": restricted.to_strings(),
            "E_decomposition": format_decomposition(decompose(restricted)),
        }

    @registry.claim("outer-automorphism", "an odd permutation swaps the two order-5 classes and I with I'",
                    "characters")
    def outer_automorphism(ctx):
        table = a5_table()
        swap = class_swap_by("(12)")
        passed = swap == [0, 1, 2, 4, 3] and outer_twist(table["I"]) == table["I'"]
        return passed, {"class_map": swap, "twisted_I": outer_twist(table["I"]).to_strings()}


def _kernel_size(action):
    return sum(1 for p in action.values() if p.is_identity())
