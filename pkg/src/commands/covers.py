"""
Riemann-Hurwitz commands for the Winger verifier.
"""
from itertools import combinations_with_replacement

from algebra.covers import CYCLIC_ORDERS, OrbSignature, alpha_value, regular_cover_genus, signature_solutions

GENUS_CASES = (
    (60, (5, 2, 2, 2), 10),
    (3, (3,) * 12, 10),
    (10, (5, 2, 2), 0),
    (60, (5, 2, 5), 4),
)


def setup_covers_commands(registry):
    """Set up signature and genus claims."""

    @registry.claim("alpha-values", "alpha = 60 - 60/|stab| gives 30, 40, 48 for stabilizers 2, 3, 5", "covers")
    def alpha_values(ctx):
        values = {order: alpha_value(order) for order in CYCLIC_ORDERS}
        return values == {2: 30, 3: 40, 5: 48} and alpha_value(1) == 0, values

    @registry.claim("signature-solutions", "the only genus-10 signature for A5 is (0;5,2,2,2)", "covers")
    def signature_solutions_claim(ctx):
        solutions = signature_solutions()
        passed = solutions == [OrbSignature(0, (5, 2, 2, 2))]
        return passed, {"solutions": [str(s) for s in solutions]}

    @registry.claim("signature-exhaustive", "brute force over g <= 1 and at most five branch orbits finds "
                    "the same signatures", "covers")
    def signature_exhaustive(ctx):
        found = []
        for g in (0, 1):
            for size in range(6):
                for orders in combinations_with_replacement(CYCLIC_ORDERS, size):
                    if 18 == 60 * (2 * g - 2) + sum(alpha_value(o) for o in orders):
                        found.append(OrbSignature(g, tuple(sorted(orders, reverse=True))))
        bounded = signature_solutions(max_points=5)
        passed = set(found) == set(signature_solutions()) == set(bounded)
        return passed, {"brute_force": sorted(str(s) for s in found)}

    @registry.claim("cover-genus-routes", "regular cover genera 10, 10, 0, 4 for the A5 curve, the triple cover of K, "
                    "line and genus-4 cases", "covers")
    def cover_genus_routes(ctx):
        computed = {f"{n}:{','.join(map(str, orders))}": regular_cover_genus(n, orders)
                    for n, orders, _ in GENUS_CASES}
        passed = list(computed.values()) == [expected for _, _, expected in GENUS_CASES]
        return passed, computed
