"""
Irregular orbit commands for the Winger verifier.
"""
from itertools import combinations

from algebra.perm import Perm, alternating_group, closure, coset_action
from algebra.winger import ProjPoint, six_lines

STABILIZER_ORDERS = {6: 10, 10: 6, 15: 4, 12: 5}
# Orbits on K and the cyclic stabilizer generators giving them.
CONIC_ORBITS = {12: "(12345)", 20: "(123)", 30: "(12)(34)"}


def setup_orbits_commands(registry):
    """Set up orbit and stabilizer claims."""

    @registry.claim("irregular-orbits", "orbits of sizes 6, 10, 15 off K and 12 on K, pairwise disjoint",
                    "orbits")
    def irregular_orbits_claim(ctx):
        orbits, q = ctx.orbits, ctx.pencil.q
        sizes = {size: len(points) for size, points in orbits.items()}
        point_sets = [set(points) for points in orbits.values()]
        disjoint = sum(len(s) for s in point_sets) == len(set().union(*point_sets))
        off_k = all(not q(p.coords).is_zero() for size in (6, 10, 15) for p in orbits[size])
        on_k = all(q(p.coords).is_zero() for p in orbits[12])
        apex = ProjPoint((0, 0, 1))
        apex_in_six = apex in orbits[6] and not q(apex.coords).is_zero()
        passed = sizes == {6: 6, 10: 10, 15: 15, 12: 12} and disjoint and off_k and on_k and apex_in_six
        return passed, {"sizes": sizes, "disjoint": disjoint, "off_conic": off_k, "on_conic": on_k,
                        "six_orbit": [p.to_strings() for p in orbits[6]]}

    @registry.claim("orbit-stabilizers", "points of the 6, 10, 15 and 12 orbits have stabilizers of order "
                    "10, 6, 4 and 5", "orbits")
    def orbit_stabilizers(ctx):
        group = ctx.group
        found = {}
        for size, points in ctx.orbits.items():
            found[size] = sorted({len(group.stabilizer(p)) for p in points})
        passed = all(found[size] == [order] for size, order in STABILIZER_ORDERS.items())
        passed = passed and all(size * order == 60 for size, order in STABILIZER_ORDERS.items())
        return passed, found

    @registry.claim("conic-orbit-sizes", "orbits on K of sizes 12, 20, 30 from stabilizers of order 5, 3, 2",
                    "orbits")
    def conic_orbit_sizes(ctx):
        a5 = alternating_group()
        found = {}
        for size, generator in CONIC_ORBITS.items():
            stabilizer = closure([Perm.parse(generator)])
            action = coset_action(a5, stabilizer)
            found[size] = {"stabilizer": stabilizer.order, "orbit": a5.order // stabilizer.order,
                           "action_degree": next(iter(action.values())).degree}
        passed = all(v["orbit"] == size and v["action_degree"] == size for size, v in found.items())
        return passed, found

    @registry.claim("base-locus-bezout", "K meets the six lines in 2 x 6 = 12 points, each on exactly one line",
                    "orbits")
    def base_locus_bezout(ctx):
        lines = six_lines()
        base = ctx.orbits[12]
        hits = [sum(1 for line in lines if line(p.coords).is_zero()) for p in base]
        passed = len(base) == 2 * len(lines) and hits == [1] * len(base)
        return passed, {"points": len(base), "lines_through_each": sorted(set(hits))}

    @registry.claim("line-stabilizers", "each line has a stabilizer of order 10 and meets the other five "
                    "in five distinct points", "orbits")
    def line_stabilizers(ctx):
        group = ctx.group
        lines = six_lines()
        orders = [len(group.line_stabilizer(i)) for i in range(len(lines))]
        meets = []
        for i, line in enumerate(lines):
            points = {line.meet(other) for j, other in enumerate(lines) if j != i}
            meets.append(len(points))
        crossings = {a.meet(b) for a, b in combinations(lines, 2)}
        fifteen = crossings == set(ctx.orbits[15])
        passed = orders == [10] * 6 and meets == [5] * 6 and fifteen
        return passed, {"stabilizer_orders": orders, "points_per_line": meets,
                        "crossings_are_fifteen_orbit": fifteen}
