"""
hardy-verify Command Line

Batch frontend over the library: weight sweeps, inequality and identity
reports, optimality probes, Copson lemma grids and the Γ_p diagnostics.
Every command writes a CSV (or JSON) report and exits with

    0  all asserted claims held
    1  a claim inside its proven range failed (the check is named)
    2  malformed flags, unreadable files or out-of-range parameters
"""

import functools
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, Mapping, Optional, Sequence

import click
from pydantic import ValidationError

from ..config import settings
from ..copson.lemmas import lemma_grid
from ..copson.reports import copson_identity, copson_report, improved_copson_report
from ..core.errors import AssertionViolation, InputError
from ..core.log_config import configure_logging
from ..core.rules import UNIT
from ..gamma_space.dual import dual_bound
from ..gamma_space.inclusion import InclusionKind, inclusion_diagnostic
from ..gamma_space.norm import gamma_norm
from ..gamma_space.operators import (
    basis_expansion_error,
    parallelogram_defect,
    parallelogram_witness,
)
from ..inequalities.classical import classical_hardy_report, copson_general_report
from ..inequalities.hardy import hardy_identity, hardy_report, weighted_hardy_report
from ..inequalities.report import InequalityReport
from ..optimality.probes import assert_probes, remainder_sweep
from ..weights.families import FAMILY_BUILDERS, build_family
from ..weights.stability import stability_report
from .io import (
    WRITERS,
    load_config,
    load_sequence,
    load_table,
    parse_grid,
    parse_int_list,
    parse_range,
    parse_rule,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2


@dataclass(frozen=True)
class RunOutcome:
    """Exit code of one invocation and where its report went."""

    exit_code: int
    report_path: Optional[Path] = None


class VerificationFailed(click.ClickException):
    exit_code = EXIT_VIOLATION


class BadInput(click.ClickException):
    exit_code = EXIT_INPUT


def _describe_validation(exc: ValidationError) -> str:
    first = exc.errors()[0]
    where = ".".join(str(part) for part in first.get("loc", ())) or "value"
    return f"invalid {where}: {first.get('msg', 'validation failed')}"


def guarded(func):
    """Map library exceptions onto the command-line exit codes."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except AssertionViolation as exc:
            raise VerificationFailed(str(exc)) from exc
        except ValidationError as exc:
            raise BadInput(_describe_validation(exc)) from exc
        except (InputError, OSError) as exc:
            raise BadInput(str(exc)) from exc

    return wrapper


def common_options(func):
    """--log-level, --format and --out, shared by every command."""
    func = click.option(
        "--out", "out", type=click.Path(dir_okay=False, path_type=Path), default=None,
        help="Report file (printed to stdout when omitted)",
    )(func)
    func = click.option(
        "--format", "fmt", type=click.Choice(sorted(WRITERS)), default="csv", show_default=True,
    )(func)
    func = click.option(
        "--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
        default=None, help="Overrides HARDY_LOG_LEVEL",
    )(func)
    return func


def sweep_options(func):
    """common_options plus --threads, for the commands that run chunked sweeps."""
    func = common_options(func)
    return click.option(
        "--threads", type=click.IntRange(min=1), default=None,
        help="Worker threads for chunked sweeps (default from settings, 1)",
    )(func)


def _start(log_level: Optional[str]) -> None:
    configure_logging(level=log_level)


def emit(rows: Iterable[Mapping[str, object]], out: Optional[Path], fmt: str) -> Optional[Path]:
    """Write rows to out, or echo them as CSV/JSON when out is None."""
    rows = list(rows)
    if out is not None:
        path = WRITERS[fmt](out, rows)
        logger.info("wrote %d rows to %s", len(rows), path)
        return path
    if fmt == "json":
        click.echo(json.dumps(rows, indent=2, sort_keys=True, default=str))
    elif rows:
        columns = list(rows[0])
        click.echo(",".join(columns))
        for row in rows:
            click.echo(",".join("" if row[c] is None else str(row[c]) for c in columns))
    return None


def _rule(text: Optional[str], default=None):
    return default if text is None else parse_rule(text)


@click.group()
@click.version_option(version=settings.app_version, prog_name=settings.app_name)
def cli():
    """Numerical verification of improved Hardy and Copson inequalities."""


@cli.command()
@click.option("--family", required=True, type=click.Choice(sorted(FAMILY_BUILDERS)))
@click.option("--n-range", "n_range", required=True, help="Index window A:B")
@click.option("--g", "g", default=None, help="Rule for g (g, lambda-g families)")
@click.option("--lambda", "lam", default=None, help="Rule for λ (lambda-g family)")
@click.option("--alpha", type=float, default=None)
@click.option("--beta", type=float, default=None)
@click.option("--p", "p", type=float, default=None)
@click.option("--c", "c", type=float, default=None)
@click.option("--table", "table", default=None, help="Candidate weight values (JSON list or CSV)")
@sweep_options
@guarded
def weights(family, n_range, g, lam, alpha, beta, p, c, table, threads, log_level, fmt, out):
    """Sweep a weight family against its classical comparator."""
    _start(log_level)
    window = parse_range(n_range)
    params = {
        "g": _rule(g), "lam": _rule(lam), "alpha": alpha, "beta": beta, "p": p, "c": c,
        "table": load_table(table) if table else None,
    }
    weight = build_family(family, **params)
    sweep = weight.assert_improvement(window.start, window.stop - 1, threads=threads)
    return emit(sweep.rows(), out, fmt)


@cli.command()
@click.option("--n-values", default=None, help="Comma-separated indices (default 10,1e3,...,1e12)")
@click.option("--c", "c", type=float, default=1.5, show_default=True)
@common_options
@guarded
def stability(n_values, c, log_level, fmt, out):
    """Stable, naive and reference Keller/Copson weights with digits lost."""
    _start(log_level)
    kwargs = {"c": c}
    if n_values:
        kwargs["n_values"] = parse_int_list(n_values)
    return emit((row.model_dump() for row in stability_report(**kwargs)), out, fmt)


@cli.group()
def verify():
    """Evaluate one inequality on an input sequence."""


def _finish(report: InequalityReport, out, fmt):
    report.assert_valid()
    return emit([report.to_row()], out, fmt)


@verify.command("hardy")
@click.option("--input", "input_path", required=True, type=click.Path(path_type=Path))
@click.option("--lambda", "lam", default=None, help="Rule for λ (default const:1)")
@click.option("--g", "g", default="sqrt", show_default=True)
@click.option("--alpha", type=float, default=None, help="Power-weight form with --beta")
@click.option("--beta", type=float, default=None)
@common_options
@guarded
def verify_hardy(input_path, lam, g, alpha, beta, log_level, fmt, out):
    """Weighted Hardy inequality for partial sums A."""
    _start(log_level)
    A = load_sequence(input_path)
    if (alpha is None) != (beta is None):
        raise InputError("the power-weight form needs both --alpha and --beta")
    if alpha is not None:
        report = weighted_hardy_report(A, alpha, beta)
    else:
        report = hardy_report(A, _rule(lam, UNIT), parse_rule(g))
    return _finish(report, out, fmt)


@verify.command("copson")
@click.option("--input", "input_path", required=True, type=click.Path(path_type=Path))
@click.option("--c", "c", type=float, default=1.5, show_default=True)
@common_options
@guarded
def verify_copson(input_path, c, log_level, fmt, out):
    """Copson-weighted inequality; only c = 3/2 is assertion-grade."""
    _start(log_level)
    A = load_sequence(input_path)
    report = improved_copson_report(A) if c == 1.5 else copson_report(A, c)
    return _finish(report, out, fmt)


@verify.command("classical")
@click.option("--input", "input_path", required=True, type=click.Path(path_type=Path))
@click.option("--p", "p", type=float, default=2.0, show_default=True)
@common_options
@guarded
def verify_classical(input_path, p, log_level, fmt, out):
    """Classical Hardy inequality for coefficients a."""
    _start(log_level)
    return _finish(classical_hardy_report(load_sequence(input_path), p), out, fmt)


@verify.command("copson-general")
@click.option("--input", "input_path", required=True, type=click.Path(path_type=Path))
@click.option("--q", "q", default="const:1", show_default=True)
@click.option("--p", "p", type=float, default=2.0, show_default=True)
@click.option("--c", "c", type=float, default=1.5, show_default=True)
@common_options
@guarded
def verify_copson_general(input_path, q, p, c, log_level, fmt, out):
    """Copson's inequality Σ q Q^{-c}|A|^p <= (p/(c-1))^p Σ q Q^{p-c}|a|^p."""
    _start(log_level)
    report = copson_general_report(load_sequence(input_path), parse_rule(q), p, c)
    return _finish(report, out, fmt)


@cli.group()
def identity():
    """Evaluate an exact remainder identity."""


def _identity_out(report, out, fmt):
    report.assert_valid()
    click.echo(
        f"{report.check}: residual={report.residual:.3e} "
        f"weighted_residual={report.weighted_residual:.3e} lhs={report.lhs:.12g}"
    )
    if out is None:
        return None
    return emit([report.to_row()], out, fmt)


@identity.command("hardy")
@click.option("--input", "input_path", required=True, type=click.Path(path_type=Path))
@click.option("--lambda", "lam", default="const:1", show_default=True)
@click.option("--g", "g", default="sqrt", show_default=True)
@common_options
@guarded
def identity_hardy(input_path, lam, g, log_level, fmt, out):
    """Hardy remainder identity for (λ, g)."""
    _start(log_level)
    report = hardy_identity(load_sequence(input_path), parse_rule(lam), parse_rule(g))
    return _identity_out(report, out, fmt)


@identity.command("copson")
@click.option("--input", "input_path", required=True, type=click.Path(path_type=Path))
@click.option("--c", "c", type=float, default=1.5, show_default=True)
@common_options
@guarded
def identity_copson(input_path, c, log_level, fmt, out):
    """Copson remainder identity for exponent c."""
    _start(log_level)
    return _identity_out(copson_identity(load_sequence(input_path), c), out, fmt)


@cli.command()
@click.argument("kind", type=click.Choice(["hardy", "copson"]))
@click.option("--N-list", "n_list", required=True, help="Cutoff parameters N1,N2,...")
@click.option("--lambda", "lam", default=None, help="Rule for λ (hardy, default const:1)")
@click.option("--beta", type=float, default=0.5, show_default=True)
@sweep_options
@guarded
def optimality(kind, n_list, lam, beta, threads, log_level, fmt, out):
    """Cutoff remainder sweep against the logarithmic decay bound."""
    _start(log_level)
    probes = remainder_sweep(kind, parse_int_list(n_list), _rule(lam, UNIT), beta, threads=threads)
    path = emit((item.to_row() for item in probes), out, fmt)
    assert_probes(probes)
    return path


@cli.command()
@click.option("--c-grid", "c_grid", required=True, help="Exponents LO:HI:STEP")
@click.option("--n-max", "n_max", type=click.IntRange(min=2), required=True)
@sweep_options
@guarded
def lemmas(c_grid, n_max, threads, log_level, fmt, out):
    """Copson lemma margins over an exponent grid."""
    _start(log_level)
    reports = lemma_grid(parse_grid(c_grid), n_max, threads=threads)
    return emit((row for report in reports for row in report.rows()), out, fmt)


@cli.group()
def space():
    """Γ_p sequence-space diagnostics."""


def space_options(func):
    func = click.option(
        "--config", "config_path", required=True, type=click.Path(path_type=Path),
        help='Space config JSON {"p": .., "gamma": RULE, "q": RULE}',
    )(func)
    return common_options(func)


def _norm_row(check: str, value) -> Dict[str, object]:
    return {
        "check": check, "p": value.p, "norm": value.value, "norm_lo": value.lo,
        "norm_hi": value.hi, "exact": value.exact,
    }


@space.command("norm")
@click.option("--input", "input_path", required=True, type=click.Path(path_type=Path))
@space_options
@guarded
def space_norm(input_path, config_path, log_level, fmt, out):
    """Γ_p norm of a sequence."""
    _start(log_level)
    value = gamma_norm(load_sequence(input_path), load_config(config_path))
    return emit([_norm_row("gamma-space-norm", value)], out, fmt)


@space.command("dual")
@click.option("--input", "input_path", default=None, type=click.Path(path_type=Path))
@click.option("--rule", "rule", default=None, help="Generate b from a rule instead of --input")
@click.option("--horizon", type=click.IntRange(min=2), default=1000, show_default=True)
@space_options
@guarded
def space_dual(input_path, rule, horizon, config_path, log_level, fmt, out):
    """Associate-space row functionals of b up to a horizon."""
    _start(log_level)
    if (input_path is None) == (rule is None):
        raise InputError("give exactly one of --input and --rule")
    b = load_sequence(input_path) if input_path is not None else parse_rule(rule)
    report = dual_bound(b, load_config(config_path), horizon)
    return emit([{"check": "gamma-space-associate-bound", **report.to_row()}], out, fmt)


@space.command("basis")
@click.option("--input", "input_path", required=True, type=click.Path(path_type=Path))
@click.option("--horizon", type=click.IntRange(min=1), default=None,
              help="Largest expansion length (default: support end + 1)")
@space_options
@guarded
def space_basis(input_path, horizon, config_path, log_level, fmt, out):
    """Basis expansion error for every expansion length up to the horizon."""
    _start(log_level)
    x = load_sequence(input_path)
    cfg = load_config(config_path)
    stop = horizon or max(x.end + 1, 1)
    rows = [
        {"check": "gamma-space-basis-expansion", "n": n, "error": basis_expansion_error(x, cfg, n)}
        for n in range(1, stop + 1)
    ]
    return emit(rows, out, fmt)


@space.command("parallelogram")
@click.option("--input", "input_path", default=None, type=click.Path(path_type=Path))
@click.option("--input2", "input2_path", default=None, type=click.Path(path_type=Path))
@space_options
@guarded
def space_parallelogram(input_path, input2_path, config_path, log_level, fmt, out):
    """Parallelogram defect of a pair (the witness pair when no inputs are given)."""
    _start(log_level)
    cfg = load_config(config_path)
    if input_path is None and input2_path is None:
        x, y = parallelogram_witness(cfg)
        pair = "witness"
    elif input_path is not None and input2_path is not None:
        x, y = load_sequence(input_path), load_sequence(input2_path)
        pair = "input"
    else:
        raise InputError("give both --input and --input2, or neither for the witness pair")
    defect = parallelogram_defect(x, y, cfg)
    expected = 8.0 - 4.0 ** ((cfg.p + 1.0) / cfg.p) if pair == "witness" else None
    row = {
        "check": "gamma-space-parallelogram", "pair": pair, "p": cfg.p,
        "defect": defect, "witness_defect": expected,
    }
    return emit([row], out, fmt)


@space.command("inclusion")
@click.option("--kind", required=True,
              type=click.Choice([InclusionKind.LP_IN_WP, InclusionKind.LINF_IN_GAMMA]))
@click.option("--horizons", default="100,1000,10000", show_default=True)
@space_options
@guarded
def space_inclusion(kind, horizons, config_path, log_level, fmt, out):
    """Witness norms at growing truncation horizons."""
    _start(log_level)
    report = inclusion_diagnostic(kind, load_config(config_path), parse_int_list(horizons))
    return emit(report.to_rows(), out, fmt)


def main(argv: Optional[Sequence[str]] = None) -> RunOutcome:
    """
    Parse argv, dispatch and map the result onto an exit code.

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])

    Returns:
        RunOutcome with the exit code and the report path, if one was written
    """
    try:
        result = cli.main(args=list(argv) if argv is not None else None, standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return RunOutcome(exit_code=exc.exit_code)
    except click.exceptions.Exit as exc:
        return RunOutcome(exit_code=exc.exit_code)
    except click.exceptions.Abort:
        return RunOutcome(exit_code=EXIT_INPUT)
    if isinstance(result, int):
        # --help and --version return their exit code
        return RunOutcome(exit_code=result)
    return RunOutcome(exit_code=EXIT_OK, report_path=result)
