"""
Commands package for the Winger verifier.

Each module registers its claims on a ClaimRegistry through a
setup_<name>_commands(registry) function.
"""
import time

from utils import ClaimRecord, ClaimReport, format_millis, log

SUBCOMMANDS = ("characters", "invariants", "pencil", "tuples", "orbits",
               "covers", "degenerations", "homology", "binary")

# Acceptance criterion number -> the claim that decides it.
ACCEPTANCE_CLAIMS = {
    1: "group-reconstruction",
    2: "group-invariance",
    3: "singular-members",
    4: "molien-reynolds-agreement",
    5: "sym-cube-table",
    6: "homology-lattice",
    7: "tuple-classes-20",
    8: "braid-orbits",
    9: "signature-solutions",
    10: "degeneration-reports",
    11: "binary-icosahedral",
    12: "fault-sensitivity",
    13: "pencil-discriminant",
}


class Claim:
    def __init__(self, claim_id, description, group, func, slow=False):
        self.id = claim_id
        self.description = description
        self.group = group
        self.func = func
        self.slow = slow


class ClaimRegistry:
    """Holds claim functions; a claim returns (passed, witness) given the verifier context."""

    def __init__(self):
        self.claims = []

    def claim(self, claim_id, description, group, slow=False):
        if group not in SUBCOMMANDS:
            raise ValueError(f"unknown claim group {group!r}")

        def decorator(func):
            if any(c.id == claim_id for c in self.claims):
                raise ValueError(f"claim {claim_id} registered twice")
            self.claims.append(Claim(claim_id, description, group, func, slow))
            return func

        return decorator

    def ids(self):
        return [c.id for c in self.claims]

    def select(self, subcommand):
        if subcommand == "all":
            groups = SUBCOMMANDS
        elif subcommand in SUBCOMMANDS:
            groups = (subcommand,)
        else:
            raise ValueError(f"unknown subcommand {subcommand!r}")
        return [c for g in groups for c in self.claims if c.group == g]

    def run(self, ctx, subcommand, deep=False, record_timings=False):
        """Run the selected claims; AssertionError inside a claim marks it failed."""
        report = ClaimReport(ctx.convention)
        for claim in self.select(subcommand):
            if claim.slow and not deep:
                report.add(ClaimRecord(claim.id, claim.description, "skipped", "run with --deep",
                                       group=claim.group))
                continue
            log(f"Checking {claim.id}...")
            started = time.perf_counter()
            try:
                passed, witness = claim.func(ctx)
                status = "pass" if passed else "fail"
            except AssertionError as e:
                status, witness = "fail", f"assertion failed: {e}"
            elapsed = format_millis(time.perf_counter() - started, record_timings)
            if status == "pass" and witness in (None, "", [], {}):
                status, witness = "fail", "no witness produced"
            report.add(ClaimRecord(claim.id, claim.description, status, witness, elapsed, claim.group))
            log(f"{claim.id}: {status}", "✅" if status == "pass" else "❌")
        return report


from .characters import setup_characters_commands
from .invariants import setup_invariants_commands
from .pencil import setup_pencil_commands
from .tuples import setup_tuples_commands
from .orbits import setup_orbits_commands
from .covers import setup_covers_commands
from .degenerations import setup_degenerations_commands
from .homology import setup_homology_commands
from .binary import setup_binary_commands


def setup_all_commands(registry):
    """Set up all command modules."""
    setup_characters_commands(registry)
    setup_invariants_commands(registry)
    setup_pencil_commands(registry)
    setup_tuples_commands(registry)
    setup_orbits_commands(registry)
    setup_covers_commands(registry)
    setup_degenerations_commands(registry)
    setup_homology_commands(registry)
    setup_binary_commands(registry)


def build_registry():
    registry = ClaimRegistry()
    setup_all_commands(registry)
    return registry


__all__ = ['SUBCOMMANDS', 'ACCEPTANCE_CLAIMS', 'Claim', 'ClaimRegistry', 'setup_all_commands', 'build_registry']
