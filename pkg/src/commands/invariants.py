"""
Invariant theory commands for the Winger verifier.
"""
from algebra.invariants import (
    Poly3, closed_form_series, in_span, is_invariant, monomial_count, monomials, reynolds,
)


def setup_invariants_commands(registry):
    """Set up Molien and Reynolds claims."""

    @registry.claim("molien-series", "Molien series equals (1+T^15)/((1-T^2)(1-T^6)(1-T^10))", "invariants")
    def molien_series_claim(ctx):
        series = ctx.molien
        expected = closed_form_series(series.precision)
        coeffs = series.as_ints()
        odd_below_15 = [coeffs[k] for k in range(1, min(15, len(coeffs)), 2)]
        passed = (series == expected and coeffs[0] == 1 and coeffs[1] == 0 and coeffs[2] == 1
                  and coeffs[6] == 2 and not any(odd_below_15))
        return passed, {"degree": series.precision, "coefficients": coeffs}

    @registry.claim("reynolds-dimensions", "Reynolds invariant dimensions match Molien coefficients",
                    "invariants")
    def reynolds_dimensions(ctx):
        coeffs = ctx.molien.as_ints()
        dims = {d: len(ctx.reynolds_basis(d)) for d in ctx.settings["reynolds_degrees"]}
        mismatched = [d for d, dim in dims.items() if dim != coeffs[d]]
        return not mismatched, {"dimensions": dims, "mismatched": mismatched}

    @registry.claim("sextic-dimensions", "dim C[U]_6 = 28, so sextics form a P^27; two invariant sextics, "
                    "as the Molien T^6 coefficient says", "invariants")
    def sextic_dimensions(ctx):
        total = monomial_count(6)
        invariant = len(ctx.reynolds_basis(6))
        molien_six = ctx.molien.as_ints()[6]
        passed = total == 28 and invariant == 2 == molien_six
        return passed, {"sextics": total, "projective": total - 1, "invariant": invariant, "molien_t6": molien_six}

    @registry.claim("invariant-generators", "degree-2 invariants are spanned by Q; degree 6 by Q^3 and F",
                    "invariants")
    def invariant_generators(ctx):
        quadrics = ctx.reynolds_basis(2)
        sextics = ctx.reynolds_basis(6)
        q, f = ctx.pencil.q, ctx.pencil.f
        passed = (len(quadrics) == 1 and quadrics[0].proportional_to(q)
                  and in_span(q ** 3, sextics, 6) and in_span(f, sextics, 6)
                  and not f.proportional_to(q ** 3))
        return passed, {"quadric": str(quadrics[0]) if quadrics else "none",
                        "sextic_basis": [str(b) for b in sextics]}

    @registry.claim("reynolds-projection", "group averaging is idempotent and lands in the invariants",
                    "invariants")
    def reynolds_projection(ctx):
        group = list(ctx.group)
        images = {}
        passed = True
        for e in monomials(2):
            image = reynolds(group, Poly3({e: 1}))
            images[str(Poly3({e: 1}))] = str(image)
            if image:
                passed = passed and reynolds(group, image) == image and is_invariant(group, image)
                passed = passed and image.proportional_to(ctx.pencil.q)
        passed = passed and any(v != "0" for v in images.values())
        return passed, images

    @registry.claim("molien-reynolds-agreement", "Molien closed form, T^2 and T^6 coefficients, Reynolds "
                    "dimensions and dim C[U]_6 = 28 all agree", "invariants")
    def molien_reynolds_agreement(ctx):
        ok_series, series_witness = molien_series_claim(ctx)
        ok_dims, dims_witness = reynolds_dimensions(ctx)
        ok_sextics, sextic_witness = sextic_dimensions(ctx)
        return ok_series and ok_dims and ok_sextics, {
            "coefficients": series_witness["coefficients"][:16],
            "dimensions": dims_witness["dimensions"],
            "sextics": sextic_witness["sextics"],
        }
