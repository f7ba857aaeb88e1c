"""
`otto` command line.

Usage:
  otto [-v | -vv] [--config FILE] <command> [options]

Commands:
  cycle     energetics of one cycle configuration (JSON)
  optimize  analytic and/or numeric optimum of an engine or refrigerator (JSON)
  sweep     a closed-form quantity table over eta_c, zeta_c or tau (CSV/JSON)
  loop      the sudden-switch (efficiency, work) loop with flagged extrema (CSV/JSON)
  cp-mof    cooling power at maximum Omega, or its peak over tau (JSON)
  verify    analytic-versus-numeric verification suites

Exit codes: 0 success, 1 invalid input, 2 verification failure, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import contextlib
import logging
import os
import sys
from typing import Any, Dict, Iterator, Optional, Sequence, TextIO

from pydantic import ValidationError

from otto_omega.cycle.core import cycle_report
from otto_omega.domain.models import (
    BathPair,
    CoolingRegime,
    Device,
    DriveProtocol,
    FrequencyPair,
    Method,
    Regime,
    SweepSpec,
    VerificationRecord,
)
from otto_omega.engine.loop import loop_curve
from otto_omega.errors import ConfigError, DomainError, NumericFailure
from otto_omega.fridge.cooling import (
    cooling_power_at_mof,
    cooling_power_from_controls,
    cp_mof_peak,
)
from otto_omega.io.config import load_config
from otto_omega.io.tables import LOOP_COLUMNS, dump_json, loop_rows, write_table
from otto_omega.solvers import discrepancy, solve_analytic, solve_numeric
from otto_omega.sweeps.registry import FIGURE_PRESETS, default_range, lookup
from otto_omega.sweeps.runner import run_sweep
from otto_omega.verify.suites import SUITES, run_suite

logger = logging.getLogger("otto_omega.cli")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VERIFY = 2
EXIT_NUMERIC = 3

# any one of these on the command line replaces all of them from a config file
BATH_FLAGS = ("eta_c", "zeta_c", "tau")

RED = "\033[31m"
RESET = "\033[0m"


def use_color(stream: TextIO) -> bool:
    return stream.isatty() and "NO_COLOR" not in os.environ


class _Parser(argparse.ArgumentParser):
    """Argument errors are invalid input (exit 1), not argparse's usual 2."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _report_error(message: str) -> None:
    prefix = "otto: error:"
    if use_color(sys.stderr):
        prefix = f"{RED}{prefix}{RESET}"
    print(f"{prefix} {message}", file=sys.stderr)


def _validation_message(error: ValidationError) -> str:
    parts = []
    for detail in error.errors():
        message = detail["msg"].removeprefix("Value error, ")
        location = ".".join(str(p) for p in detail["loc"])
        parts.append(f"{location}: {message}" if location else message)
    return "; ".join(parts)


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root = logging.getLogger("otto_omega")
    root.handlers[:] = [handler]
    root.setLevel(level)
    root.propagate = False


@contextlib.contextmanager
def _output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as f:
        yield f


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [
        "--" + n.replace("_", "-") for n in names if getattr(args, n, None) is None
    ]
    if missing:
        raise DomainError(f"missing required option(s): {', '.join(missing)}")


def _apply_config_baths(args: argparse.Namespace) -> None:
    if any(getattr(args, n, None) is not None for n in BATH_FLAGS):
        return
    for name, value in getattr(args, "config_baths", {}).items():
        setattr(args, name, value)


def _baths(args: argparse.Namespace) -> BathPair:
    given = [n for n in BATH_FLAGS if getattr(args, n, None) is not None]
    if len(given) != 1:
        raise DomainError("give exactly one of --eta-c, --zeta-c, --tau")
    if given[0] == "eta_c":
        return BathPair.from_eta_carnot(args.eta_c, args.beta2)
    if given[0] == "zeta_c":
        return BathPair.from_zeta_carnot(args.zeta_c, args.beta2)
    return BathPair.from_tau(args.tau, args.beta2)


# ----- commands -----


def cmd_cycle(args: argparse.Namespace) -> int:
    _require(args, "beta1", "omega1", "omega2")
    baths = BathPair(beta_cold=args.beta1, beta_hot=args.beta2)
    freqs = FrequencyPair(omega_1=args.omega1, omega_2=args.omega2)
    report = cycle_report(
        baths, freqs, DriveProtocol(args.protocol), Regime(args.regime)
    )
    with _output(args.out) as out:
        dump_json(report, out)
    return EXIT_OK


def cmd_optimize(args: argparse.Namespace) -> int:
    baths = _baths(args)
    key = (args.device, args.objective, args.protocol, args.regime)
    method = args.method
    logger.info("optimize %s with method %s", "/".join(key), method)

    if method == "both":
        analytic = solve_analytic(*key, baths)
        numeric = solve_numeric(*key, baths, omega_2=args.omega2)
        record = discrepancy(analytic, numeric, tol_rel=args.tol)
        payload: Dict[str, Any] = {
            "analytic": analytic.model_dump(mode="json"),
            "numeric": numeric.model_dump(mode="json"),
            "discrepancy": record.model_dump(mode="json"),
        }
        with _output(args.out) as out:
            dump_json(payload, out)
        if not record.passed:
            _report_error(
                f"analytic and numeric figures of merit differ by {record.rel_err:.3g} "
                f"(tolerance {args.tol:g})"
            )
            return EXIT_VERIFY
        return EXIT_OK

    if Method(method) is Method.ANALYTIC:
        result = solve_analytic(*key, baths)
    else:
        result = solve_numeric(*key, baths, omega_2=args.omega2)
    with _output(args.out) as out:
        dump_json(result, out)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    axis, quantities = args.axis, args.quantity
    if args.figure is not None:
        preset_axis, preset_quantities = FIGURE_PRESETS[args.figure]
        axis = axis or preset_axis
        quantities = quantities or preset_quantities
    if axis is None or not quantities:
        raise DomainError("give --figure, or --axis with at least one --quantity")
    names = [name for item in quantities for name in item.split(",") if name]

    start, stop = default_range(lookup(axis, names))
    spec = SweepSpec(
        axis=axis,
        quantities=names,
        start=start if args.start is None else args.start,
        stop=stop if args.stop is None else args.stop,
        count=args.points,
        beta_hot=args.beta2,
        format=args.format,
    )
    table = run_sweep(spec, workers=args.workers)
    with _output(args.out) as out:
        write_table(table.columns, table.rows, out, spec.format)
    return EXIT_OK


def cmd_loop(args: argparse.Namespace) -> int:
    _require(args, "tau")
    curve = loop_curve(args.tau, beta_hot=args.beta2, n_points=args.points)
    with _output(args.out) as out:
        write_table(LOOP_COLUMNS, loop_rows(curve), out, args.format)
    return EXIT_OK


def cmd_cp_mof(args: argparse.Namespace) -> int:
    regime = CoolingRegime(args.cooling_regime)
    if args.tau is None:
        payload: Any = cp_mof_peak(regime, args.beta2)
    else:
        payload = {
            "regime": str(regime),
            "tau": args.tau,
            "beta_hot": args.beta2,
            "q_cold": cooling_power_at_mof(regime, args.tau, args.beta2),
            "q_cold_from_controls": cooling_power_from_controls(
                regime, args.tau, args.beta2
            ),
        }
    with _output(args.out) as out:
        dump_json(payload, out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(args.suite, tol_rel=args.tol)
    columns = list(VerificationRecord.model_fields)
    with _output(args.out) as out:
        if args.format == "json":
            dump_json([r.model_dump(mode="json") for r in report.records], out)
        else:
            rows = [
                [_verify_cell(getattr(r, c)) for c in columns] for r in report.records
            ]
            write_table(columns, rows, out, "csv")
    summary = f"{len(report.records)} checks, {report.failures} failed"
    if not report.passed:
        _report_error(summary)
        return EXIT_VERIFY
    print(summary, file=sys.stderr)
    return EXIT_OK


def _verify_cell(value: Any):
    if isinstance(value, bool):
        return "true" if value else "false"
    return value


# ----- parser -----


def build_parser(config: Optional[Dict[str, Any]] = None) -> argparse.ArgumentParser:
    parser = _Parser(
        prog="otto",
        description="Omega-function optimisation of harmonic Otto cycles.",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )
    parser.add_argument("--config", help="JSON or YAML file with default option values")
    commands = parser.add_subparsers(dest="command", required=True)

    common = _Parser(add_help=False)
    common.add_argument(
        "--config",
        default=argparse.SUPPRESS,
        help="JSON or YAML file with default option values",
    )

    baths = _Parser(add_help=False)
    baths.add_argument(
        "--beta2", type=float, default=1.0, help="Hot bath inverse temperature"
    )

    output = _Parser(add_help=False)
    output.add_argument("--out", help="Write to this file instead of standard output")

    carnot = _Parser(add_help=False)
    carnot.add_argument("--eta-c", type=float, help="Carnot efficiency 1 - beta2/beta1")
    carnot.add_argument("--zeta-c", type=float, help="Carnot COP beta2/(beta1 - beta2)")
    carnot.add_argument("--tau", type=float, help="beta2/beta1")

    cycle = commands.add_parser(
        "cycle", parents=[common, baths, output], help="one cycle report"
    )
    cycle.add_argument("--beta1", type=float, help="Cold bath inverse temperature")
    cycle.add_argument("--omega1", type=float, help="Cold isochore frequency")
    cycle.add_argument("--omega2", type=float, help="Hot isochore frequency")
    cycle.add_argument("--protocol", choices=["adiabatic", "ss"], default="adiabatic")
    cycle.add_argument("--regime", choices=["exact", "high", "low"], default="exact")
    cycle.set_defaults(handler=cmd_cycle)

    optimize = commands.add_parser(
        "optimize",
        parents=[common, baths, output, carnot],
        help="optimum of an objective",
    )
    optimize.add_argument("device", choices=[d.value for d in Device])
    optimize.add_argument("protocol", choices=["adiabatic", "ss"])
    optimize.add_argument(
        "regime", nargs="?", choices=["exact", "high", "low"], default="high"
    )
    optimize.add_argument("--objective", choices=["omega", "work"], default="omega")
    optimize.add_argument(
        "--method", choices=["analytic", "numeric", "both"], default="analytic"
    )
    optimize.add_argument(
        "--omega2", type=float, help="Fixed hot isochore frequency (default 1/beta2)"
    )
    optimize.add_argument(
        "--tol", type=float, default=1e-8, help="Relative tolerance for --method both"
    )
    optimize.set_defaults(handler=cmd_optimize)

    sweep = commands.add_parser(
        "sweep", parents=[common, baths, output], help="quantity table"
    )
    sweep.add_argument("--figure", choices=sorted(FIGURE_PRESETS), help="Column preset")
    sweep.add_argument("--axis", choices=["eta_c", "zeta_c", "tau"])
    sweep.add_argument(
        "--quantity", nargs="+", help="Quantity names, space or comma separated"
    )
    sweep.add_argument("--start", type=float)
    sweep.add_argument("--stop", type=float)
    sweep.add_argument("--points", type=int, default=200)
    sweep.add_argument("--workers", type=int, default=1)
    sweep.add_argument("--format", choices=["csv", "json"], default="csv")
    sweep.set_defaults(handler=cmd_sweep)

    loop = commands.add_parser(
        "loop", parents=[common, baths, output], help="sudden-switch loop"
    )
    loop.add_argument("--tau", type=float)
    loop.add_argument("--points", type=int, default=500)
    loop.add_argument("--format", choices=["csv", "json"], default="csv")
    loop.set_defaults(handler=cmd_loop)

    cp_mof = commands.add_parser(
        "cp-mof",
        parents=[common, baths, output],
        help="cooling power at maximum Omega",
    )
    cp_mof.add_argument(
        "cooling_regime", metavar="regime", choices=[r.value for r in CoolingRegime]
    )
    cp_mof.add_argument(
        "--tau", type=float, help="Evaluate here instead of locating the peak"
    )
    cp_mof.set_defaults(handler=cmd_cp_mof)

    verify = commands.add_parser(
        "verify", parents=[common, output], help="verification suites"
    )
    verify.add_argument("suite", nargs="?", choices=["all", *SUITES], default="all")
    verify.add_argument("--tol", type=float, default=1e-8, help="Relative tolerance")
    verify.add_argument("--format", choices=["csv", "json"], default="json")
    verify.set_defaults(handler=cmd_verify)

    defaults = dict(config or {})
    config_baths = {k: defaults.pop(k) for k in BATH_FLAGS if k in defaults}
    for sub in (cycle, optimize, sweep, loop, cp_mof, verify):
        sub.set_defaults(config_baths=config_baths, **defaults)
    return parser


def _preload_config(argv: Sequence[str]) -> Dict[str, Any]:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    return {} if known.config is None else load_config(known.config)


def main(argv: Optional[Sequence[str]] = None) -> int:
    arguments = list(sys.argv[1:] if argv is None else argv)
    try:
        config = _preload_config(arguments)
    except ConfigError as e:
        _report_error(str(e))
        return EXIT_INVALID

    args = build_parser(config).parse_args(arguments)
    _apply_config_baths(args)
    configure_logging(args.verbose)
    logger.info("otto %s", args.command)

    try:
        status = args.handler(args)
    except NumericFailure as e:
        _report_error(str(e))
        return EXIT_NUMERIC
    except ValidationError as e:
        _report_error(_validation_message(e))
        return EXIT_INVALID
    except ValueError as e:
        _report_error(str(e))
        return EXIT_INVALID

    logger.info("otto %s finished with status %d", args.command, status)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
