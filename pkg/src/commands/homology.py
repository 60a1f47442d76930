"""
Homology lattice commands for the Winger verifier.
"""
from algebra.characters import (
    a5_table, decompose, format_decomposition, induced_character, trivial_character,
)
from algebra.covers import homology_character_check
from algebra.perm import alternating_group


def setup_homology_commands(registry):
    """Set up homology character claims."""

    @registry.claim("homology-lattice", "the signed 20-element orbit gives (10,-2,1,0,0) = V+I+I' and "
                    "twice it is 2V+2I+2I'", "homology")
    def homology_lattice(ctx):
        check = homology_character_check()
        return check.passed, {"character": check.character.to_strings(),
                              "decomposition": format_decomposition(check.decomposition),
                              "doubled": format_decomposition(check.doubled),
                              "equals_sym_cube": check.equals_sym_cube}

    @registry.claim("induced-character", "inducing the trivial character of A5 gives the trivial character",
                    "homology")
    def induced_character_claim(ctx):
        a5 = alternating_group()
        induced = induced_character(a5, lambda g: 1)
        passed = induced == trivial_character() and decompose(induced) == {"trivial": 1}
        return passed, {"induced": induced.to_strings(), "trivial": a5_table()["trivial"].to_strings()}
