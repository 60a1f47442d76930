"""
Binary icosahedral commands for the Winger verifier.
"""
from algebra.covers import binary_icosahedral_checks


def setup_binary_commands(registry):
    """Set up the binary icosahedral claim."""

    @registry.claim("binary-icosahedral", "120 unit icosians close under multiplication with center of "
                    "order 2, trivial abelianization and A5 as quotient", "binary")
    def binary_icosahedral(ctx):
        report = binary_icosahedral_checks()
        return report.passed, {"order": report.order, "closed": report.closed, "units": report.all_units,
                               "center": report.center_order, "abelianization": report.abelianization_order,
                               "quotient_class_sizes": report.quotient_class_sizes}
