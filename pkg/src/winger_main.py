"""
Winger Verifier - Main entry point.
Reconstructs the icosahedral plane representation and the Winger pencil in exact
arithmetic and checks the claims about them, printing a claim table.
"""
import argparse
import random
import sys
import time
import traceback
from functools import cached_property

from algebra.exactfield import ConstructionError, eta
from algebra.hurwitz import enumerate_tuple_classes
from algebra.invariants import Poly3, molien_series, reynolds_basis
from algebra.linalg import MatrixF
from algebra.perm import COMPOSITION_CONVENTION
from algebra.winger import WingerPencil, conic_q, irregular_orbits, reconstruct_group, winger_sextic
from commands import SUBCOMMANDS, build_registry
from utils import (
    error, format_duration, get_settings, load_reference_tables, log, process_stats, render_report,
    save_report, set_quiet, warn,
)

FAULTS = ("F", "matrix")

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class VerifierContext:
    """Shared, lazily built objects the claims read from."""

    def __init__(self, settings, convention=COMPOSITION_CONVENTION):
        self.settings = settings
        self.convention = convention
        self.fault = settings.get("fault")
        if self.fault not in (None,) + FAULTS:
            raise ValueError(f"unknown fault {self.fault!r}; expected one of {', '.join(FAULTS)}")
        self._reynolds = {}

    @cached_property
    def rng(self):
        return random.Random(self.settings["random_seed"])

    @cached_property
    def references(self):
        return load_reference_tables()

    @cached_property
    def group(self):
        group = reconstruct_group()
        if self.fault == "matrix":
            warn("Injecting a corrupted matrix entry")
            return group.with_corrupted_entry(self.corruptible_element())
        return group

    @cached_property
    def pencil(self):
        if self.fault == "F":
            warn("Injecting a corrupted coefficient of F")
            return WingerPencil(conic_q(), self.corrupted_sextic())
        return WingerPencil()

    @cached_property
    def orbits(self):
        return irregular_orbits(self.group)

    @cached_property
    def molien(self):
        try:
            return molien_series(list(self.group), self.settings["molien_degree"])
        except ValueError as e:
            raise AssertionError(f"Molien series: {e}")

    def reynolds_basis(self, degree):
        if degree not in self._reynolds:
            try:
                self._reynolds[degree] = reynolds_basis(list(self.group), degree)
            except ValueError as e:
                raise AssertionError(f"Reynolds basis in degree {degree}: {e}")
        return self._reynolds[degree]

    @cached_property
    def tuple_classes(self):
        return enumerate_tuple_classes(self.convention)

    def corrupted_sextic(self):
        """F with 1 added to the coefficient of its lex-largest monomial."""
        f = winger_sextic()
        return f + Poly3({max(f.terms): 1})

    def corruptible_element(self):
        """First element that is not used to build orbits or the isomorphism."""
        group = reconstruct_group()
        rotation = group.find(MatrixF.diagonal([eta(1), eta(4), 1]))
        avoid = {group.identity_index(), rotation, *group.generators}
        avoid |= {group.indices_of_order(r)[0] for r in (2, 3, 5)}
        return next(i for i in range(len(group)) if i not in avoid)


def build_parser():
    parser = argparse.ArgumentParser(prog="winger-verifier",
                                     description="Exact verification of the Winger pencil and its A5 data.")
    parser.add_argument("subcommand", choices=SUBCOMMANDS + ("all",), help="claim group to run")
    parser.add_argument("--json", metavar="PATH", help="write the claim report as JSON")
    parser.add_argument("--deep", action="store_true", help="run slow claims (Macaulay discriminant)")
    parser.add_argument("--convention", choices=("rtl", "ltr"), default=COMPOSITION_CONVENTION,
                        help="composition convention for tuple products")
    parser.add_argument("--digits", type=int, help="digits for numerical embeddings")
    parser.add_argument("--seed", type=int, help="random seed for sampled lambdas")
    parser.add_argument("--timings", action="store_true", help="record per-claim milliseconds")
    parser.add_argument("--quiet", action="store_true", help="silence progress lines")
    parser.add_argument("--inject", choices=FAULTS, help="corrupt F or one matrix entry")
    return parser


def build_settings(args):
    return get_settings({
        "digits": args.digits,
        "random_seed": args.seed,
        "record_timings": True if args.timings else None,
        "quiet": True if args.quiet else None,
        "fault": args.inject,
        "report_path": args.json,
    })


def run(ctx, args):
    """Run the selected claims and return the report."""
    settings = ctx.settings
    registry = build_registry()
    started = time.perf_counter()
    report = registry.run(ctx, args.subcommand, deep=args.deep, record_timings=settings["record_timings"])
    stats = process_stats()
    log(f"Finished in {format_duration(time.perf_counter() - started)}; "
        f"Python {stats['python']}, {stats['rss_mb']} MB resident", "📊")
    if settings["record_timings"]:
        report.metadata = stats
    return report


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    settings = build_settings(args)
    set_quiet(settings["quiet"])
    try:
        ctx = VerifierContext(settings, args.convention)
    except ValueError as e:
        error(str(e))
        return EXIT_USAGE
    try:
        report = run(ctx, args)
    except ConstructionError as e:
        error(f"Construction failed: {e}")
        traceback.print_exc(file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as e:
        error(f"Internal error: {e}")
        traceback.print_exc(file=sys.stderr)
        return EXIT_INTERNAL
    print(render_report(report))
    if settings["report_path"]:
        save_report(report, settings["report_path"])
        log(f"Report written to {settings['report_path']}", "✅")
    return report.exit_code()


if __name__ == "__main__":
    sys.exit(main())
