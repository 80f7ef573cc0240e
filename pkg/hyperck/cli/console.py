"""
Console helpers: logging setup and human-readable summaries on stderr.

JSON results go to stdout or --output; everything here writes to stderr.
"""

from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from hyperck.models.reports import (
    AlgebraInfo,
    CheckReport,
    KernelReport,
    VerificationReport,
)

console = Console(stderr=True)


def configure_logging(verbose: bool = False) -> None:
    """Route hyperck loggers through a RichHandler on stderr; --verbose enables DEBUG."""
    handler = RichHandler(console=console, show_time=False, show_path=False)
    handler.setFormatter(logging.Formatter("%(message)s"))
    root = logging.getLogger("hyperck")
    root.handlers = [handler]
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)
    root.propagate = False


def _verdict(passed: bool) -> str:
    return "[green]pass[/green]" if passed else "[red]FAIL[/red]"


def print_algebra_info(info: AlgebraInfo) -> None:
    console.print(f"\n[bold]{info.algebra}[/bold]  dim {info.dim}")
    squares = ", ".join(f"{label}^2={value}" for label, value in info.generator_squares.items())
    console.print(f"  generators: {squares}")
    if info.setting is not None:
        failed = [c.name for c in info.basis_conditions if not c.holds]
        console.print(f"  setting {info.setting}: p={info.p}, q={info.q}")
        console.print(f"  basis conditions: {len(info.basis_conditions) - len(failed)} of "
                      f"{len(info.basis_conditions)} hold")


def print_check(report: CheckReport) -> None:
    console.print(f"\n{report.kind} in {report.setting}: {_verdict(report.passed)}")
    if not report.passed:
        console.print(f"  residual: {report.residual}")


def print_kernel(report: KernelReport) -> None:
    console.print(f"\n{report.kernel} kernel of order {report.k} in {report.setting}")
    console.print(f"  ({report.numerator}) |x|^-{report.exponent}")
    for check in report.checks:
        console.print(f"  {check.name}: {_verdict(check.passed)}")


def print_verification(report: VerificationReport) -> None:
    """Table of law results, one row per (law, setting)."""
    title = f"verify-theorems (seed {report.seed}, {report.trials} trials, degree {report.degree})"
    table = Table(title=title)
    table.add_column("suite")
    table.add_column("law")
    table.add_column("setting")
    table.add_column("trials", justify="right")
    table.add_column("failures", justify="right")
    table.add_column("result")
    for r in report.results:
        table.add_row(r.suite, r.law, r.setting, str(r.trials), str(len(r.failures)), _verdict(r.passed))
    console.print(table)
    failed = report.failed_laws
    if failed:
        console.print(f"[red]{len(failed)} law(s) failed[/red]")
        for name in failed:
            console.print(f"  - {name}")
    else:
        console.print(f"[green]All {len(report.results)} laws passed[/green]")
