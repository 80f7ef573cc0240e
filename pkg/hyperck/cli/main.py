"""
Command-line interface for hyperck.

Usage:
    hyperck algebra-info --setting octonion,m=7,p=4
    hyperck ck-extend --setting clifford:n=3 --input samples/seed_x0_squared.json
    hyperck gck-extend --setting clifford:n=2 --input seed.json --output out.json
    hyperck hgck-extend --setting clifford:n=3 --input a0.json --input-a1 a1.json
    hyperck fueter-sce --setting clifford:n=3 --input samples/stem_ck_x0_squared.json
    hyperck fueter-poly --setting clifford:n=3,m=3,p=2 --k 1,1,0
    hyperck kernel --setting clifford:n=3 --k 2 --check-dirac-power 2 [--slice]
    hyperck check --setting clifford:n=3 --kind monogenic --input f.json
    hyperck verify-theorems --suite diagrams --q 3,5 --degree 5 --trials 50 --seed 42

JSON results go to stdout (or --output); summaries and logs go to stderr.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Callable
from pathlib import Path
from typing import Any, Optional

import click
from pydantic import BaseModel

from hyperck import __version__
from hyperck.algebra.element import AlgebraElement, mul
from hyperck.cli.console import (
    configure_logging,
    console,
    print_algebra_info,
    print_check,
    print_kernel,
    print_verification,
)
from hyperck.errors import HyperckError, PayloadError
from hyperck.extensions.ck import ck_extend
from hyperck.extensions.fueter import fueter_polynomial
from hyperck.extensions.gck import gck_stem, hgck_stem
from hyperck.fueter_sce.diagrams import fueter_sce_map
from hyperck.kernels.cauchy import poly_kernel, slice_poly_kernel
from hyperck.kernels.kelvin import KelvinFunction, kelvin_dirac_power
from hyperck.models.config import CheckKind, Operation, RunConfig, SettingSpec, Suite
from hyperck.models.payloads import (
    ExtensionResult,
    ambient_from_payload,
    poly_to_payload,
    stem_from_payload,
    stem_to_payload,
)
from hyperck.models.reports import (
    AlgebraInfo,
    BasisConditionModel,
    CheckReport,
    IdentityCheck,
    KernelReport,
)
from hyperck.operators.dirac import dirac, laplacian
from hyperck.operators.stem_ops import cr_residual
from hyperck.poly.assoc import AssocTree
from hyperck.stem.pair import StemPair, extract, materialize
from hyperck.verify.suites import run_verification

logger = logging.getLogger(__name__)

DEFAULT_SETTING = "clifford:n=3,m=3,p=0"


# I/O helpers

def _load_json(path: Optional[Path]) -> Any:
    if path is None:
        raise PayloadError("--input is required")
    with open(path) as f:
        return json.load(f)


def _emit(model: BaseModel, output_path: Optional[Path]) -> None:
    output_json = model.model_dump_json(indent=2)
    if output_path:
        with open(output_path, "w") as f:
            f.write(output_json + "\n")
        console.print(f"\nResults saved to {output_path}")
    else:
        click.echo(output_json)


def _ambient_names(nvars: int) -> list[str]:
    return [f"x{i}" for i in range(nvars)]


def _extension_result(operation: Operation, S: StemPair) -> ExtensionResult:
    f = materialize(S)
    return ExtensionResult(
        operation=operation.value,
        setting=S.setting.name,
        stem=stem_to_payload(S),
        function=poly_to_payload(f, _ambient_names(f.nvars)),
    )


def _is_stem_payload(data: Any) -> bool:
    return isinstance(data, dict) and "G1" in data


def _guarded(handler: Callable[[RunConfig], int], config: RunConfig) -> int:
    """Run a handler; errors become `Error: ...` on stderr, unexpected ones with their type."""
    try:
        return handler(config)
    except json.JSONDecodeError as e:
        click.echo(f"Error: Invalid JSON in {config.input_path}: {e}", err=True)
        return 1
    except HyperckError as e:
        click.echo(f"Error: {e}", err=True)
        return 1
    except Exception as e:
        logger.debug("%s failed", handler.__name__, exc_info=True)
        click.echo(f"Error: {type(e).__name__}: {e}", err=True)
        return 1


# Command handlers

def cmd_algebra_info(config: RunConfig) -> int:
    """Describe the algebra and the hypercomplex setting."""
    setting = config.setting.to_setting()
    algebra = setting.algebra
    squares = {}
    for i in range(1, algebra.n + 1):
        unit = AlgebraElement.basis(algebra, algebra.generator_index(i))
        squares[algebra.blade_labels[algebra.generator_index(i)]] = str(mul(unit, unit).real_part)
    info = AlgebraInfo(
        algebra=algebra.name,
        dim=algebra.dim,
        labels=list(algebra.blade_labels),
        generator_squares=squares,
        setting=setting.name,
        p=setting.p,
        q=setting.q,
        basis_conditions=[
            BasisConditionModel(name=c.name, holds=c.holds) for c in setting.basis_conditions()
        ],
    )
    _emit(info, config.output_path)
    print_algebra_info(info)
    return 0


def cmd_extend(config: RunConfig) -> int:
    """CK, GCK or HGCK extension of a seed polynomial in x_0..x_p."""
    setting = config.setting.to_setting()
    seed = ambient_from_payload(setting, _load_json(config.input_path), seed=True)
    if config.operation is Operation.CK_EXTEND:
        S = ck_extend(seed)
    elif config.operation is Operation.GCK_EXTEND:
        S = gck_stem(seed)
    else:
        if config.second_input_path is not None:
            with open(config.second_input_path) as f:
                a1 = ambient_from_payload(setting, json.load(f), seed=True)
        else:
            a1 = seed.zero_like()
        S = hgck_stem(seed, a1)  # type: ignore[arg-type]
    result = _extension_result(config.operation, S)
    _emit(result, config.output_path)
    console.print(f"\n{config.operation.value} in {setting.name}: {len(result.function.terms)} terms")
    return 0


def cmd_fueter_sce(config: RunConfig) -> int:
    """Fueter-Sce image of a stem (or of the CK extension of a seed)."""
    setting = config.setting.to_setting()
    data = _load_json(config.input_path)
    if config.stem_input or _is_stem_payload(data):
        S = stem_from_payload(setting, data)
    else:
        S = ck_extend(ambient_from_payload(setting, data, seed=True))
    result = _extension_result(Operation.FUETER_SCE, fueter_sce_map(S))
    _emit(result, config.output_path)
    console.print(f"\nFueter-Sce image in {setting.name}: {len(result.function.terms)} terms")
    return 0


def cmd_fueter_poly(config: RunConfig) -> int:
    """Fueter polynomial P_k."""
    setting = config.setting.to_setting()
    k = config.multi_index or [0] * (setting.p + 1)
    degree = sum(k)
    tree = AssocTree.right_comb(degree) if config.right_comb and degree > 0 else None
    P = fueter_polynomial(setting, k, tree=tree)
    result = ExtensionResult(
        operation=Operation.FUETER_POLY.value,
        setting=setting.name,
        stem=stem_to_payload(extract(P)),
        function=poly_to_payload(P, _ambient_names(P.nvars)),
    )
    _emit(result, config.output_path)
    console.print(f"\nP_{tuple(k)} in {setting.name}: {len(result.function.terms)} terms")
    return 0


def cmd_kernel(config: RunConfig) -> int:
    """Poly-monogenic (or slice) kernel of order k, with Dirac-power lowering checks."""
    setting = config.setting.to_setting()
    k = config.kernel_order

    def family(order: int) -> KelvinFunction:
        return slice_poly_kernel(setting, order) if config.slice_kernel else poly_kernel(setting, order)

    if config.slice_kernel:
        names = [f"x{i}" for i in range(setting.p + 1)] + ["r"]
    else:
        names = _ambient_names(setting.nvars)
    K = family(k)
    checks = []
    for n in range(1, config.dirac_power + 1):
        expected = family(k - n) if n < k else K.scale(0)
        for right in (False, True):
            lhs = kelvin_dirac_power(K, n, right=right)
            side = f"E[{k}] D^{n}" if right else f"D^{n} E[{k}]"
            checks.append(
                IdentityCheck(
                    name=side,
                    passed=lhs == expected,
                    lhs=lhs.format(names),
                    rhs=expected.format(names),
                    description=f"lowers the order to {max(k - n, 0)}",
                )
            )
    report = KernelReport(
        setting=setting.name,
        kernel="slice" if config.slice_kernel else "poly",
        k=k,
        numerator=K.numerator.format(names),
        exponent=K.s,
        checks=checks,
    )
    _emit(report, config.output_path)
    print_kernel(report)
    return 0 if report.passed else 1


def cmd_check(config: RunConfig) -> int:
    """Residual of D f, Delta f or the Cauchy-Riemann system; exit 1 when nonzero."""
    setting = config.setting.to_setting()
    kind = config.check_kind or CheckKind.MONOGENIC
    data = _load_json(config.input_path)
    stem: Optional[StemPair] = None
    if config.stem_input or _is_stem_payload(data):
        stem = stem_from_payload(setting, data)
        f = materialize(stem)
    else:
        f = ambient_from_payload(setting, data)
    if kind is CheckKind.GPS_REGULAR:
        residual_stem = cr_residual(stem if stem is not None else extract(f))
        passed = residual_stem.is_zero()
        residual = residual_stem.format()
        payload = stem_to_payload(residual_stem).model_dump()
    else:
        residual_poly = dirac(f) if kind is CheckKind.MONOGENIC else laplacian(f)
        passed = residual_poly.is_zero()
        residual = residual_poly.format(_ambient_names(f.nvars))
        payload = poly_to_payload(residual_poly, _ambient_names(f.nvars)).model_dump()
    report = CheckReport(
        kind=kind.value, setting=setting.name, passed=passed, residual=residual, residual_payload=payload
    )
    _emit(report, config.output_path)
    print_check(report)
    return 0 if passed else 1


def cmd_verify(config: RunConfig) -> int:
    """Run the randomized law suites; exit 0 iff every law passed."""
    with console.status("Running law suites...") as status:
        report = run_verification(config, progress=lambda label: status.update(f"Running {label}"))
    _emit(report, config.output_path)
    print_verification(report)
    return 0 if report.passed else 1


# Click wiring

def _int_list(ctx: click.Context, param: click.Parameter, value: Optional[str]) -> list[int]:
    if value is None or value.strip() == "":
        return []
    try:
        return [int(x) for x in value.split(",")]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}") from None


def _dispatch(ctx: click.Context, handler: Callable[[RunConfig], int], setting: str, **fields: Any) -> None:
    """Build the RunConfig and run the handler; configuration errors exit 1."""
    try:
        config = RunConfig(setting=SettingSpec.parse(setting), **fields)
    except ValueError as e:
        click.echo(f"Error: {e}", err=True)
        ctx.exit(1)
    ctx.exit(_guarded(handler, config))


setting_option = click.option(
    "--setting", "-s", default=DEFAULT_SETTING, show_default=True,
    help="Algebra and split, e.g. clifford:n=5,m=5,p=2 or octonion,m=7,p=4",
)
input_option = click.option(
    "--input", "-i", "input_path", type=click.Path(path_type=Path), default=None, help="JSON input file"
)
output_option = click.option(
    "--output", "-o", "output_path", type=click.Path(path_type=Path), default=None,
    help="Path to save JSON output (prints to stdout if not specified)",
)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="hyperck")
@click.option("--verbose", "-v", is_flag=True, help="Debug logging on stderr")
def cli(verbose: bool) -> None:
    """Exact generalized partial-slice monogenic function theory on polynomials."""
    configure_logging(verbose)


@cli.command("algebra-info")
@setting_option
@output_option
@click.pass_context
def algebra_info(ctx: click.Context, setting: str, output_path: Optional[Path]) -> None:
    """Dimension, basis labels, generator squares and basis conditions."""
    _dispatch(ctx, cmd_algebra_info, setting, operation=Operation.ALGEBRA_INFO, output_path=output_path)


def _extension_command(operation: Operation, summary: str) -> None:
    @setting_option
    @input_option
    @output_option
    @click.pass_context
    def command(
        ctx: click.Context, setting: str, input_path: Optional[Path], output_path: Optional[Path]
    ) -> None:
        _dispatch(
            ctx, cmd_extend, setting,
            operation=operation, input_path=input_path, output_path=output_path,
        )

    command.__doc__ = summary
    cli.command(operation.value)(command)


_extension_command(Operation.CK_EXTEND, "CK extension of a seed polynomial in x_0..x_p.")
_extension_command(Operation.GCK_EXTEND, "Generalized CK extension (monogenic) of a seed.")


@cli.command("hgck-extend")
@setting_option
@input_option
@click.option("--input-a1", "second_input_path", type=click.Path(path_type=Path), default=None,
              help="Second seed A1 (zero when omitted)")
@output_option
@click.pass_context
def hgck_extend_command(
    ctx: click.Context,
    setting: str,
    input_path: Optional[Path],
    second_input_path: Optional[Path],
    output_path: Optional[Path],
) -> None:
    """Harmonic generalized CK extension HGCK[A0, A1]."""
    _dispatch(
        ctx, cmd_extend, setting,
        operation=Operation.HGCK_EXTEND,
        input_path=input_path,
        second_input_path=second_input_path,
        output_path=output_path,
    )


@cli.command("fueter-sce")
@setting_option
@input_option
@click.option("--stem", "stem_input", is_flag=True, help="Input is a stem payload")
@output_option
@click.pass_context
def fueter_sce_command(
    ctx: click.Context,
    setting: str,
    input_path: Optional[Path],
    stem_input: bool,
    output_path: Optional[Path],
) -> None:
    """Fueter-Sce map on a GPS-regular stem (odd q)."""
    _dispatch(
        ctx, cmd_fueter_sce, setting,
        operation=Operation.FUETER_SCE, input_path=input_path, stem_input=stem_input, output_path=output_path,
    )


@cli.command("fueter-poly")
@setting_option
@click.option("--k", "multi_index", callback=_int_list, default=None, help="Multi-index, e.g. 1,1,0")
@click.option("--right-comb", is_flag=True, help="Associate products along right combs")
@output_option
@click.pass_context
def fueter_poly_command(
    ctx: click.Context, setting: str, multi_index: list[int], right_comb: bool, output_path: Optional[Path]
) -> None:
    """Fueter polynomial P_k."""
    _dispatch(
        ctx, cmd_fueter_poly, setting,
        operation=Operation.FUETER_POLY,
        multi_index=multi_index,
        right_comb=right_comb,
        output_path=output_path,
    )


@cli.command("kernel")
@setting_option
@click.option("--k", "kernel_order", type=int, default=1, show_default=True, help="Kernel order")
@click.option("--check-dirac-power", "dirac_power", type=int, default=0, show_default=True,
              help="Check D^n for n = 1..N")
@click.option("--slice", "slice_kernel", is_flag=True, help="Slice kernel family")
@output_option
@click.pass_context
def kernel_command(
    ctx: click.Context,
    setting: str,
    kernel_order: int,
    dirac_power: int,
    slice_kernel: bool,
    output_path: Optional[Path],
) -> None:
    """Poly-monogenic kernel E^[k] and its Dirac powers."""
    _dispatch(
        ctx, cmd_kernel, setting,
        operation=Operation.KERNEL,
        kernel_order=kernel_order,
        dirac_power=dirac_power,
        slice_kernel=slice_kernel,
        output_path=output_path,
    )


@cli.command("check")
@setting_option
@click.option("--kind", "check_kind", type=click.Choice([k.value for k in CheckKind]),
              default=CheckKind.MONOGENIC.value, show_default=True)
@input_option
@click.option("--stem", "stem_input", is_flag=True, help="Input is a stem payload")
@output_option
@click.pass_context
def check_command(
    ctx: click.Context,
    setting: str,
    check_kind: str,
    input_path: Optional[Path],
    stem_input: bool,
    output_path: Optional[Path],
) -> None:
    """Check monogenicity, harmonicity or GPS-regularity."""
    _dispatch(
        ctx, cmd_check, setting,
        operation=Operation.CHECK,
        check_kind=CheckKind(check_kind),
        input_path=input_path,
        stem_input=stem_input,
        output_path=output_path,
    )


@cli.command("verify-theorems")
@setting_option
@click.option("--suite", "suites", type=click.Choice([s.value for s in Suite]), multiple=True,
              help="Suite to run (repeatable); all when omitted")
@click.option("--q", "q_values", callback=_int_list, default=None, help="q values, e.g. 3,5")
@click.option("--degree", type=int, default=4, show_default=True, help="Degree bound of random polynomials")
@click.option("--trials", type=int, default=20, show_default=True, help="Trials per law")
@click.option("--seed", type=int, default=0, show_default=True, help="Base seed")
@output_option
@click.pass_context
def verify_command(
    ctx: click.Context,
    setting: str,
    suites: tuple[str, ...],
    q_values: list[int],
    degree: int,
    trials: int,
    seed: int,
    output_path: Optional[Path],
) -> None:
    """Randomized verification of the algebraic laws and theorems."""
    _dispatch(
        ctx, cmd_verify, setting,
        operation=Operation.VERIFY,
        suites=[Suite(s) for s in suites] or [Suite.ALL],
        q_values=q_values,
        degree=degree,
        trials=trials,
        seed=seed,
        output_path=output_path,
    )


def main() -> None:
    """Console script entrypoint wrapper."""
    cli()


if __name__ == "__main__":
    main()
