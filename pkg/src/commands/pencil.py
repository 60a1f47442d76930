"""
Pencil and group reconstruction commands for the Winger verifier.
"""
from fractions import Fraction

import mpmath

from algebra.discriminant import deep_discriminant_check
from algebra.exactfield import cyclo_embed_str, golden_ratio, sqrt5
from algebra.linalg import MatrixF, UniPoly, charpoly, kernel
from algebra.winger import (
    INFINITY, WingerPencil, format_lambda, group_invariance, lines_product, no_three_concurrent,
    preserves_form, six_lines,
)

EXPECTED_LAMBDAS = {6: Fraction(-1), 10: Fraction(27, 5), 15: INFINITY}
SPECIAL_LAMBDAS = {Fraction(0), Fraction(-1), Fraction(27, 5)}


def orbit_lambdas(pencil, orbits):
    """singular_lambda over each of the 6-, 10- and 15-point orbits."""
    return {size: {format_lambda(pencil.singular_lambda(p)) for p in orbits[size]} for size in (6, 10, 15)}


def lambda_matches(pencil, orbits, size):
    values = orbit_lambdas(pencil, orbits)[size]
    return values == {format_lambda(EXPECTED_LAMBDAS[size])}, sorted(values)


def nodes_hold(pencil, orbits):
    results = {size: all(pencil.node_check(EXPECTED_LAMBDAS[size], p) for p in orbits[size])
               for size in (6, 10, 15)}
    triple_conic = any(pencil.node_check(0, p) for p in orbits[12])
    return all(results.values()) and not triple_conic, {"nodal": results, "triple_conic_node": triple_conic}


def base_locus_holds(pencil, orbits, lambdas):
    base = orbits[12]
    on_members = all(pencil.member(lam)(p.coords).is_zero() for lam in lambdas for p in base)
    on_k = all(pencil.q(p.coords).is_zero() for p in base)
    on_lines = all(pencil.f(p.coords).is_zero() for p in base)
    return on_members and on_k and on_lines, {"points": len(base), "on_every_member": on_members,
                                              "on_conic": on_k, "on_lines": on_lines}


def random_lambdas(rng, count, avoid=SPECIAL_LAMBDAS):
    out = []
    while len(out) < count:
        lam = Fraction(rng.randint(-60, 60), rng.randint(1, 12))
        if lam not in avoid and lam not in out:
            out.append(lam)
    return out


def setup_pencil_commands(registry):
    """Set up pencil, group and singular-member claims."""

    @registry.claim("group-reconstruction", "the six-line search yields 60 matrices forming A5 with "
                    "class sizes 1, 15, 20, 12, 12 and traces equal to chi_I or chi_I'", "pencil")
    def group_reconstruction(ctx):
        group = ctx.group
        closed = group.verify_closure()
        sizes = group.class_sizes()
        row = group.identified_row()
        order_five_traces = sorted(str(group[i].trace()) for i in group.indices_of_order(5))
        passed = (len(group) == 60 and closed and group.is_homomorphism()
                  and sizes == [1, 12, 12, 15, 20] and row is not None)
        return passed, {"elements": len(group), "closed": closed, "class_sizes": sizes,
                        "matches_row": row or "none",
                        "order_five_traces": {t: order_five_traces.count(t) for t in set(order_five_traces)}}

    @registry.claim("group-invariance", "Q and F are fixed by all 60 elements; M^T A M = A and det M = 1",
                    "pencil")
    def group_invariance_claim(ctx):
        group = ctx.group
        moved_q = group_invariance(group, ctx.pencil.q)
        moved_f = group_invariance(group, ctx.pencil.f)
        bad_form = [i for i, m in enumerate(group) if not preserves_form(m)]
        passed = not moved_q and not moved_f and not bad_form
        return passed, {"moves_Q": moved_q, "moves_F": moved_f, "breaks_form": bad_form,
                        "checked": len(group)}

    @registry.claim("linear-algebra-identities", "Cayley-Hamilton on the group; involutions have "
                    "charpoly (T-1)(T+1)^2; order-3 axes are lines", "pencil")
    def linear_algebra_identities(ctx):
        group = ctx.group
        cayley = all(charpoly(m).evaluate_matrix(m).is_zero() for m in group)
        involution = UniPoly.from_roots([1, -1, -1])
        involutions = all(charpoly(group[i]) == involution for i in group.indices_of_order(2))
        axes = all(len(kernel(group[i] - MatrixF.identity(3))) == 1 for i in group.indices_of_order(3))
        return cayley and involutions and axes, {"cayley_hamilton": cayley, "involution_charpoly": involutions,
                                                 "order_three_axes": axes}

    @registry.claim("six-lines", "six lines, no three concurrent, whose product is F", "pencil")
    def six_lines_claim(ctx):
        lines = six_lines()
        product = lines_product(lines)
        concurrent_free = no_three_concurrent(lines)
        passed = len(lines) == 6 and concurrent_free and product.proportional_to(ctx.pencil.f)
        return passed, {"lines": [l.coeffs for l in lines], "no_three_concurrent": concurrent_free,
                        "degree": product.degree}

    @registry.claim("lambda-six-orbit", "singular_lambda is -1 on the 6-point orbit", "pencil")
    def lambda_six_orbit(ctx):
        return lambda_matches(ctx.pencil, ctx.orbits, 6)

    @registry.claim("lambda-ten-orbit", "singular_lambda is 27/5 on the 10-point orbit", "pencil")
    def lambda_ten_orbit(ctx):
        return lambda_matches(ctx.pencil, ctx.orbits, 10)

    @registry.claim("lambda-fifteen-orbit", "singular_lambda is infinity on the 15-point orbit", "pencil")
    def lambda_fifteen_orbit(ctx):
        return lambda_matches(ctx.pencil, ctx.orbits, 15)

    @registry.claim("nodes", "the singular points at -1, 27/5 and infinity are nodes; 3K has none", "pencil")
    def nodes(ctx):
        return nodes_hold(ctx.pencil, ctx.orbits)

    @registry.claim("base-locus", "the 12-point orbit lies on K, on the six lines and on every member",
                    "pencil")
    def base_locus(ctx):
        lambdas = random_lambdas(ctx.rng, ctx.settings["lambda_samples"], avoid=set())
        return base_locus_holds(ctx.pencil, ctx.orbits, lambdas)

    @registry.claim("singular-members", "singular members at 0 (3K), -1 (6 nodes), 27/5 (10 nodes) and "
                    "infinity (six lines), with the 12-point base locus", "pencil")
    def singular_members(ctx):
        pencil, orbits = ctx.pencil, ctx.orbits
        lambdas = orbit_lambdas(pencil, orbits)
        ok_lambdas = all(lambdas[size] == {format_lambda(EXPECTED_LAMBDAS[size])} for size in (6, 10, 15))
        ok_nodes, _ = nodes_hold(pencil, orbits)
        ok_base, _ = base_locus_holds(pencil, orbits, [Fraction(7, 3), Fraction(-2), INFINITY])
        on_k = {format_lambda(pencil.singular_lambda(p)) for p in orbits[12]}
        return ok_lambdas and ok_nodes and ok_base, {
            "lambdas": {size: sorted(v) for size, v in lambdas.items()},
            "nodes": {"-1": len(orbits[6]), "27/5": len(orbits[10]), "infinity": len(orbits[15])},
            "base_points": len(orbits[12]),
            "base_point_lambda": sorted(on_k),
        }

    @registry.claim("member-invariance", "Q^3 + (7/3)F is fixed by every group element", "pencil")
    def member_invariance(ctx):
        moved = group_invariance(ctx.group, ctx.pencil.member(Fraction(7, 3)))
        return not moved, {"lambda": "7/3", "moved_by": moved, "checked": len(ctx.group)}

    @registry.claim("smoothness-samples", "random lambda outside {0, -1, 27/5} is singular at no "
                    "irregular-orbit point", "pencil")
    def smoothness_samples(ctx):
        lambdas = random_lambdas(ctx.rng, ctx.settings["smoothness_samples"])
        hits = []
        for lam in lambdas:
            for size in (6, 10, 15, 12):
                for p in ctx.orbits[size]:
                    value = ctx.pencil.singular_lambda(p)
                    if format_lambda(value) == format_lambda(lam):
                        hits.append((str(lam), size))
        return not hits, {"lambdas": [str(l) for l in lambdas], "singular_hits": hits}

    @registry.claim("fault-sensitivity", "a corrupted F coefficient or matrix entry is detected", "pencil")
    def fault_sensitivity(ctx):
        corrupted_f = ctx.corrupted_sextic()
        f_pencil = WingerPencil(ctx.pencil.q, corrupted_f)
        f_detected = (bool(group_invariance(ctx.group, corrupted_f))
                      or not lambda_matches(f_pencil, ctx.orbits, 6)[0]
                      or not lambda_matches(f_pencil, ctx.orbits, 10)[0])
        bad_group = ctx.group.with_corrupted_entry(ctx.corruptible_element())
        m_detected = (any(not preserves_form(m) for m in bad_group)
                      or bool(group_invariance(bad_group, ctx.pencil.q)))
        return f_detected and m_detected, {"F_corruption_detected": f_detected,
                                           "matrix_corruption_detected": m_detected}

    @registry.claim("golden-ratio-embedding", "numerical embeddings of sqrt 5 and the golden ratio",
                    "pencil")
    def golden_ratio_embedding(ctx):
        digits = ctx.settings["digits"]
        root = cyclo_embed_str(sqrt5(), digits)
        phi = cyclo_embed_str(golden_ratio(), digits)
        with mpmath.workdps(digits + 5):
            expected_root = mpmath.nstr(mpmath.sqrt(5), digits)
            expected_phi = mpmath.nstr((1 + mpmath.sqrt(5)) / 2, digits)
        passed = _real_part(root) == expected_root and _real_part(phi) == expected_phi
        return passed, {"sqrt5": root, "phi": phi, "digits": digits}

    @registry.claim("pencil-discriminant", "the Macaulay discriminant vanishes only at 0, -1, 27/5 and "
                    "infinity", "pencil", slow=True)
    def pencil_discriminant(ctx):
        report = deep_discriminant_check(ctx.pencil, ctx.settings["deep_points_start"], ctx.rng)
        return report.passed, {"degree": report.degree, "roots": report.roots, "infinity": report.infinity,
                               "factors": report.factors, "samples": report.samples}


def _real_part(text):
    """mpmath prints '(a + 0.0j)' for complex values; keep a."""
    text = text.strip("()")
    for sep in (" + ", " - "):
        if sep in text:
            return text.split(sep)[0]
    return text
