"""
Command-line interface for towertk.

    towertk check --tower z2 --check cond5 --max-degree 2
    towertk table --tower hecke0 --op product --degree 1,1
    towertk golden

Reports go to stdout (or --output) as canonical JSON or CSV; logs and the
rich summary table go to stderr so the report bytes never depend on them.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from . import __version__
from .errors import DegreeOverflowError, TowerError, UsageError
from .golden import check_golden
from .hecke import HeckeTower, eta, nu, projective_basis
from .hopf import check_AsAs, check_antipode, check_bialgebra, check_duality, structure_table
from .report import CheckReport, ReportWriter, label_str
from .symmetric import SymmetricTower, character_table, check_antipode_signs
from .tower import (GROUPS, Tower, check_condition3, check_condition5, check_conditions12,
                    check_pairing, load_tower, pairing_matrix, tower_names)

logger = logging.getLogger(__name__)

CHECKS = ("cond12", "cond3", "cond5", "cond5prime", "bialgebra", "duality", "antipode", "pairing")
TABLE_OPS = ("product", "coproduct", "antipode", "pairing", "characters", "module-bases")
DEFAULT_MAX_DEGREE = 3

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def parse_degrees(text: str) -> Tuple[int, ...]:
    try:
        degrees = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"Degrees must be comma-separated integers: {text!r}")
    if any(d < 0 for d in degrees):
        raise UsageError(f"Degrees must be nonnegative: {text!r}")
    return degrees


def run_check(tower: Tower, check: str, group: str, N: int, route: Optional[str] = None,
              identities: Optional[List[str]] = None) -> CheckReport:
    """Run one named suite on a tower up to total degree N."""
    if check not in CHECKS:
        raise UsageError(f"Unknown check {check!r}; choose from {', '.join(CHECKS)}")
    if group not in GROUPS:
        raise UsageError(f"Unknown group {group!r}")
    if N < 0:
        raise UsageError("--max-degree must be nonnegative")
    tower.config.require_degree(tower.name, N)

    if check == "cond12":
        return check_conditions12(tower, N)
    if check == "cond3":
        report = CheckReport("cond3", {"tower": tower.name, "max_degree": N})
        for total in range(2, N + 1):
            for m in range(1, total):
                report.extend(check_condition3(tower, m, total - m))
        return report
    if check == "cond5":
        return check_condition5(tower, group, N, route)
    if check == "cond5prime":
        return check_AsAs(tower.hopf_data(group, N), N)
    if check == "bialgebra":
        return check_bialgebra(tower.hopf_data(group, N), N, identities)
    if check == "duality":
        tensor_degree = min(N, tower.config.condition5_module_degree.get(tower.name, 0))
        P = pairing_matrix(tower, N, tensor_degree=tensor_degree)
        return check_duality(tower.hopf_data("g0", N), tower.hopf_data("k0", N), P, N)
    if check == "antipode":
        H = tower.hopf_data(group, N)
        report = check_antipode(H, N)
        if isinstance(tower, SymmetricTower):
            report.extend(check_antipode_signs(H, N))
        return report
    return check_pairing(tower, N)


def build_table(tower: Tower, op: str, degrees: Sequence[int], group: str = "g0",
                composition: Optional[str] = None) -> Tuple[List[str], List[List[Any]]]:
    """Header and rows of one table in canonical order."""
    if op in ("pairing", "characters") and len(degrees) != 1:
        raise UsageError(f"--op {op} takes 1 degree, got {len(degrees)}")
    if op in ("product", "coproduct", "antipode"):
        expected = 2 if op == "product" else 1
        if len(degrees) != expected:
            raise UsageError(f"--op {op} takes {expected} degree(s), got {len(degrees)}")
        tower.config.require_degree(tower.name, sum(degrees))
        H = tower.hopf_data(group, max(sum(degrees), 0))
        rows = structure_table(H, op, degrees)
        return ["a", "b", "value"], rows
    if op == "pairing":
        (n,) = degrees
        tower.config.require_degree(tower.name, n)
        P = pairing_matrix(tower, n)
        labels = P.k_basis[n]
        header = ["P\\M"] + [label_str(m) for m in P.g_basis[n]]
        return header, [[p] + row for p, row in zip(labels, P.values[n])]
    if op == "characters":
        if not isinstance(tower, SymmetricTower):
            raise UsageError("--op characters is only available for the sym tower")
        (n,) = degrees
        tower.config.require_degree(tower.name, n)
        table = character_table(n)
        classes = list(next(iter(table.values())))
        return (["lambda\\mu"] + [label_str(mu) for mu in classes],
                [[lam] + [row[mu] for mu in classes] for lam, row in table.items()])
    if op == "module-bases":
        if not isinstance(tower, HeckeTower):
            raise UsageError("--op module-bases is only available for the hecke0 tower")
        if composition is None:
            raise UsageError("--op module-bases needs --composition")
        I = tower.parse_label(composition)
        tower.config.require_degree(tower.name, I.weight, module_level=True)
        rows: List[List[Any]] = [["eta", I, eta(I)], ["nu", I, nu(I)]]
        rows.extend(["basis", I, x] for x in projective_basis(I))
        return ["element", "composition", "value"], rows
    raise UsageError(f"Unknown table {op!r}; choose from {', '.join(TABLE_OPS)}")


def print_summary(console: Console, report: CheckReport) -> None:
    table = Table(title=f"{report.check}: {report.status}")
    table.add_column("identity", style="cyan")
    table.add_column("checked", justify="right")
    table.add_column("failed", justify="right")
    for row in report.summary():
        style = "red" if row["failed"] else "green"
        table.add_row(row["identity"], str(row["checked"]), f"[{style}]{row['failed']}[/{style}]")
    console.print(table)
    failure = report.witness
    if failure is not None:
        console.print(f"[red]Witness[/red] {failure.identity} at "
                      f"{failure.to_dict()['inputs']}: {failure.lhs} != {failure.rhs}")


def error_report(args: argparse.Namespace, error: TowerError) -> CheckReport:
    """A failed report whose single cell carries an internal error."""
    request = {key: value for key, value in sorted(vars(args).items())
               if key not in ("output", "format", "verbose", "timing", "quiet")
               and value is not None}
    report = CheckReport(getattr(args, "check", None) or args.command, request)
    report.record("error", {"type": type(error).__name__}, str(error), None, equal=False)
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="towertk",
                                     description="towertk - towers of algebras and their Hopf data")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", metavar="PATH", help="Write the report to PATH")
    common.add_argument("-f", "--format", choices=["json", "csv"], default="json",
                        help="Report format")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    common.add_argument("--timing", action="store_true",
                        help="Record real elapsed time (reports are then not byte-stable)")
    common.add_argument("-q", "--quiet", action="store_true", help="No summary table")

    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", parents=[common], help="Run an axiom or identity suite")
    check.add_argument("--tower", required=True, choices=tower_names())
    check.add_argument("--check", required=True, choices=CHECKS)
    check.add_argument("--group", choices=GROUPS, default="g0")
    check.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    check.add_argument("--route", choices=["module", "character", "hopf"],
                       help="Computation route for cond5")
    check.add_argument("--identities", help="Comma-separated bialgebra identities to check")

    table = sub.add_parser("table", parents=[common], help="Dump a structure-constant table")
    table.add_argument("--tower", required=True, choices=tower_names())
    table.add_argument("--op", required=True, choices=TABLE_OPS)
    table.add_argument("--group", choices=GROUPS, default="g0")
    table.add_argument("--degree", default="1", help="Degree, or 'm,n' for products")
    table.add_argument("--composition", help="Composition for --op module-bases, e.g. 2,1")

    golden = sub.add_parser("golden", parents=[common], help="Recompute the worked examples")
    golden.add_argument("--names", help="Comma-separated example names")
    return parser


def setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main CLI entry point; returns the process exit code."""
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)
    console = Console(stderr=True)
    writer = ReportWriter(args.output, args.format, args.timing)

    try:
        report: Optional[CheckReport] = None
        if args.command == "check":
            tower = load_tower(args.tower)
            identities = args.identities.split(",") if args.identities else None
            report = run_check(tower, args.check, args.group, args.max_degree,
                               args.route, identities)
            text = writer.render_report(report)
        elif args.command == "table":
            tower = load_tower(args.tower)
            degrees = parse_degrees(args.degree)
            header, rows = build_table(tower, args.op, degrees, args.group, args.composition)
            request: Dict[str, Any] = {"tower": tower.name, "op": args.op, "degree": args.degree,
                                       "group": args.group}
            if args.composition:
                request["composition"] = args.composition
            text = writer.render_table(request, header, rows)
        else:
            names = args.names.split(",") if args.names else None
            report = check_golden(names)
            text = writer.render_report(report)
        writer.save(text, stream=sys.stdout)
    except (UsageError, DegreeOverflowError) as e:
        console.print(f"[red]Error: {e}[/red]")
        return EXIT_USAGE
    except OSError as e:
        console.print(f"[red]Cannot write report: {e}[/red]")
        return EXIT_IO
    except TowerError as e:
        logger.error(f"{type(e).__name__}: {e}")
        report = error_report(args, e)
        try:
            writer.save(writer.render_report(report), stream=sys.stdout)
        except OSError as io_error:
            console.print(f"[red]Cannot write report: {io_error}[/red]")
            return EXIT_IO
        if not args.quiet:
            print_summary(console, report)
        return EXIT_FAIL

    if report is None:
        return EXIT_PASS
    if not args.quiet:
        print_summary(console, report)
    return EXIT_PASS if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
