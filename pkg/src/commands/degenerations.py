"""
Degeneration commands for the Winger verifier.
"""
from algebra.covers import GROUP_ORDER, MEMBER_BY_NODES, degeneration_report
from algebra.winger import format_lambda

# (nodes, components, component genus) for each coalesced order n.
EXPECTED_REPORTS = {2: (15, 6, 0), 3: (10, 1, 0), 5: (6, 1, 4)}


def _reports(classes):
    return [(c, degeneration_report(c.rep)) for c in classes]


def setup_degenerations_commands(registry):
    """Set up degeneration claims."""

    @registry.claim("degeneration-reports", "every tuple class degenerates to 6 lines, a 10-nodal or a "
                    "6-nodal curve of arithmetic genus 10", "degenerations")
    def degeneration_reports(ctx):
        reports = _reports(ctx.tuple_classes)
        kinds = {}
        for _, report in reports:
            kinds.setdefault(report.n, set()).add(report.as_triple())
        genus_ten = all(report.arithmetic_genus == 10 for _, report in reports)
        expected = all(kinds.get(n) == {triple} for n, triple in EXPECTED_REPORTS.items())
        passed = len(reports) == 20 and genus_ten and expected and set(kinds) == set(EXPECTED_REPORTS)
        return passed, {"types": {n: sorted(v) for n, v in sorted(kinds.items())},
                        "arithmetic_genus_10": genus_ten, "classes": len(reports)}

    @registry.claim("node-stabilizers", "nodes times the node stabilizer order 2n is 60 in every report",
                    "degenerations")
    def node_stabilizers(ctx):
        reports = [report for _, report in _reports(ctx.tuple_classes)]
        products = sorted({report.nodes * report.node_stabilizer_order for report in reports})
        return products == [GROUP_ORDER], {"products": products}

    @registry.claim("member-correspondence", "node counts 15, 10, 6 match the singular members at "
                    "infinity, 27/5 and -1", "degenerations")
    def member_correspondence(ctx):
        seen = {}
        for _, report in _reports(ctx.tuple_classes):
            seen.setdefault(report.nodes, 0)
            seen[report.nodes] += 1
        lambdas = {nodes: MEMBER_BY_NODES[nodes] for nodes in seen}
        orbit_lambda = {len(ctx.orbits[size]): format_lambda(ctx.pencil.singular_lambda(ctx.orbits[size][0]))
                        for size in (15, 10, 6)}
        passed = set(seen) == set(MEMBER_BY_NODES) and all(orbit_lambda[n] == lam for n, lam in lambdas.items())
        return passed, {"classes_per_node_count": dict(sorted(seen.items())), "member": lambdas}
