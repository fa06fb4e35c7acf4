# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import sys
import json
import logging
import argparse

from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

# Local
from jr_systole import __version__
from jr_systole.config.setup_logger import LoggerSetupError, set_log_level, setup_logger
from jr_systole.config.systole_config import SystoleConfig
from jr_systole.common.systole_enums import ElementType, ExitCode, ReportFormat
from jr_systole.field.quad_field import (
    FieldDescriptor,
    field_from_int,
    format_element,
    parse_element,
    parse_integer,
)
from jr_systole.clifford.clifford_algebra import (
    DiagonalForm,
    cliff_mul,
    clifford_from_json,
    clifford_to_json,
    form_from_strings,
    is_spin,
)
from jr_systole.congruence.congruence_groups import (
    CongruenceLevel,
    bound_reports,
    in_gamma_alpha,
    in_gamma_tau_alpha,
    realpart_residue,
)
from jr_systole.salem.salem_quartic import (
    SalemQuartic,
    certify_surface_systole,
    salem_power,
    salem_power_direct,
)
from jr_systole.kleinian.moebius import NormalizedTrace, classify
from jr_systole.kleinian.geodesics import (
    TOLERANCE,
    certify_square_systole,
    length_holonomy,
    square_systole_ball_check,
)
from jr_systole.kleinian.sl2_enumerator import enumerate_sl2
from jr_systole.census.census_report import CensusQuery
from jr_systole.census.trace_census import growth_table, trace_census
from jr_systole.cli.property_checks import check_clifford_axioms, check_trace_identities
from jr_systole.report.report_emitter import emit_json_lines, emit_report
from jr_systole.exceptions.exceptions_invariants import InvariantViolation
from jr_systole.exceptions.exceptions_cli import CliException, CliInputError, CliUsageError
from jr_systole.exceptions.exceptions_quad_field import QuadFieldException
from jr_systole.exceptions.exceptions_clifford import CliffordException
from jr_systole.exceptions.exceptions_congruence import CongruenceException
from jr_systole.exceptions.exceptions_salem import SalemException
from jr_systole.exceptions.exceptions_kleinian import KleinianException
from jr_systole.exceptions.exceptions_census import CensusException
from jr_systole.exceptions.exceptions_report import ReportException
from jr_systole.exceptions.exceptions_config import SystoleConfigException

# -------------------------------------------------------------------------------------------------
# Logging
# -------------------------------------------------------------------------------------------------

try:
    LOGGER: logging.Logger = setup_logger()
except Exception as e:
    LOGGER: logging.Logger = logging.getLogger(__name__)
    LOGGER.setLevel(logging.INFO)
    handler = logging.StreamHandler()
    formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )
    handler.setFormatter(formatter)
    LOGGER.addHandler(handler)
    LOGGER.error(f"Error setting up logger: {e}")

# -------------------------------------------------------------------------------------------------
# Constants
# -------------------------------------------------------------------------------------------------

PRECONDITION_ERRORS = (
    CliException,
    QuadFieldException,
    CliffordException,
    CongruenceException,
    SalemException,
    KleinianException,
    CensusException,
    ReportException,
    SystoleConfigException,
    LoggerSetupError,
)

# -------------------------------------------------------------------------------------------------
# Parser
# -------------------------------------------------------------------------------------------------

class SystoleArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises CliUsageError instead of exiting."""

    def error(self, message: str) -> None:
        raise CliUsageError(f"{self.prog}: {message}")


def build_parser() -> SystoleArgumentParser:
    parser = SystoleArgumentParser(
        prog="jr-systole",
        description="Exact arithmetic and certificates for systoles of arithmetic hyperbolic manifolds.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", type=Path, help="YAML file overriding the packaged defaults")
    parser.add_argument("--seed", type=int, help="seed of the randomized checks")
    parser.add_argument("--workers", type=int, help="processes for enumeration-backed subcommands")
    parser.add_argument("--log-level", dest="log_level", help="DEBUG, INFO, WARNING, ERROR or CRITICAL")
    groups = parser.add_subparsers(dest="command", required=True)

    # clifford
    clifford = groups.add_parser("clifford", help="Clifford algebra products and spin checks")
    clifford_ops = clifford.add_subparsers(dest="action", required=True)
    mul = clifford_ops.add_parser("mul", help="product of two elements read from JSON files")
    mul.add_argument("--left", type=Path, required=True)
    mul.add_argument("--right", type=Path, required=True)
    mul.add_argument("--out", type=Path)
    spin = clifford_ops.add_parser("spin", help="spin verdict of an element read from a JSON file")
    spin.add_argument("--input", type=Path, required=True)
    spin.add_argument("--out", type=Path)
    axioms = clifford_ops.add_parser("check-axioms", help="seeded algebra axiom checks")
    axioms.add_argument("--field", type=int, default=0, help="radicand, 0 for Q")
    axioms.add_argument("--dimension", type=int, help="n, the form has n + 1 coefficients")
    axioms.add_argument("--form", nargs="+", help="coefficients a_0 ... a_n, default all 1")
    axioms.add_argument("--samples", type=int, default=1000)
    axioms.add_argument("--out", type=Path)

    # congruence
    congruence = groups.add_parser("congruence", help="congruence membership and bounds")
    congruence_ops = congruence.add_subparsers(dest="action", required=True)
    check = congruence_ops.add_parser("check", help="membership of a JSON element in Gamma(alpha)")
    check.add_argument("--input", type=Path, required=True)
    check.add_argument("--alpha", required=True)
    check.add_argument("--tau")
    check.add_argument("--out", type=Path)
    bounds = congruence_ops.add_parser("bounds", help="bounds attached to a level")
    bounds.add_argument("--field", type=int, default=0, help="radicand, 0 for Q")
    bounds.add_argument("--alpha", required=True)
    bounds.add_argument("--n", type=int, help="dimension for the index bound")
    bounds.add_argument("--s-abs", dest="s_abs", type=Fraction, default=Fraction(0))
    bounds.add_argument("--out", type=Path)

    # salem
    salem = groups.add_parser("salem", help="Salem quartic levels and certificates")
    salem_ops = salem.add_subparsers(dest="action", required=True)
    for name, text in (("certify", "surface systole certificate"), ("power", "lambda^(n+1) = t_n + u_n sqrt(D)")):
        sub = salem_ops.add_parser(name, help=text)
        sub.add_argument("--field", type=int, default=0, help="radicand of the real field, 0 for Q")
        sub.add_argument("--t", required=True)
        sub.add_argument("--u")
        sub.add_argument("--D", dest="D")
        sub.add_argument("--out", type=Path)
        if name == "power":
            sub.add_argument("--n", type=int, required=True)

    # kleinian
    kleinian = groups.add_parser("kleinian", help="traces, lengths and enumeration in PSL(2)")
    kleinian_ops = kleinian.add_subparsers(dest="action", required=True)
    for name, text in (("invariants", "length and holonomy of a trace"), ("certify", "square systole certificate")):
        sub = kleinian_ops.add_parser(name, help=text)
        sub.add_argument("--trace", required=True)
        sub.add_argument("--d", type=int, help="k > 0 selects Q(sqrt(-k)); default from the trace")
        sub.add_argument("--out", type=Path)
        if name == "certify":
            sub.add_argument("--ball-height", dest="ball_height", type=int, help="also run the congruence ball check")
    enumerate_ = kleinian_ops.add_parser("enumerate", help="SL(2) matrices of bounded height, JSON lines")
    enumerate_.add_argument("--d", type=int)
    enumerate_.add_argument("--height", type=int)
    enumerate_.add_argument("--level")
    enumerate_.add_argument("--out", type=Path)
    identities = kleinian_ops.add_parser("check-identities", help="seeded trace identity checks")
    identities.add_argument("--d", type=int)
    identities.add_argument("--samples", type=int, default=1000)
    identities.add_argument("--out", type=Path)

    # census
    census = groups.add_parser("census", help="trace census and growth tables")
    census_ops = census.add_subparsers(dest="action", required=True)
    run_ = census_ops.add_parser("run", help="CSV census plus a JSON summary")
    run_.add_argument("--d", type=int)
    run_.add_argument("--max-norm", dest="max_norm")
    run_.add_argument("--height", type=int)
    run_.add_argument("--hol-lo", dest="hol_lo", type=float)
    run_.add_argument("--hol-hi", dest="hol_hi", type=float)
    run_.add_argument("--primitive", action="store_true")
    run_.add_argument("--out", type=Path)
    growth = census_ops.add_parser("growth", help="growth table over increasing N")
    growth.add_argument("--d", type=int)
    growth.add_argument("--n-list", dest="n_list", nargs="+", required=True)
    growth.add_argument("--height", type=int, default=4)
    growth.add_argument("--hol-lo", dest="hol_lo", type=float)
    growth.add_argument("--hol-hi", dest="hol_hi", type=float)
    growth.add_argument("--primitive", action="store_true")
    growth.add_argument("--format", choices=("csv", "json"), default="csv")
    growth.add_argument("--out", type=Path)
    return parser

# -------------------------------------------------------------------------------------------------
# Helpers
# -------------------------------------------------------------------------------------------------

def _write(data: bytes, path: Optional[Path]) -> None:
    if path is None:
        sys.stdout.write(data.decode("utf-8"))
        sys.stdout.flush()


def _emit(payload: Any, args: argparse.Namespace, fmt: ReportFormat = ReportFormat.JSON) -> None:
    out = getattr(args, "out", None)
    _write(emit_report(payload, fmt, out), out)


def _read_json(path: Path) -> Dict[str, Any]:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except Exception as e:
        LOGGER.error(f"Error '{e.__class__.__name__}' -> reading {path}: {e}")
        raise CliInputError(f"Error '{e.__class__.__name__}' -> reading {path}: {e}") from e


def _imaginary_field(d: Optional[int], config: SystoleConfig) -> FieldDescriptor:
    """``--d k`` selects Q(sqrt(-k)); without it the configured field is used."""
    if d is None:
        return config.field()
    if d <= 0:
        raise CliUsageError(f"--d must be a positive integer, got {d}")
    return field_from_int(-d)


def _salem_quartic(args: argparse.Namespace) -> SalemQuartic:
    field = field_from_int(args.field)
    t = parse_integer(args.t, field)
    if (args.u is None) != (args.D is None):
        raise CliUsageError("--u and --D must be given together")
    if args.u is None:
        return SalemQuartic(t)
    return SalemQuartic(t, parse_integer(args.u, field), parse_integer(args.D, field))


def _trace(args: argparse.Namespace, config: SystoleConfig) -> NormalizedTrace:
    field = None if args.d is None else _imaginary_field(args.d, config)
    return NormalizedTrace.of(parse_element(args.trace, field))

# -------------------------------------------------------------------------------------------------
# Commands
# -------------------------------------------------------------------------------------------------

def _clifford_mul(args: argparse.Namespace, config: SystoleConfig) -> None:
    left = clifford_from_json(_read_json(args.left))
    right = clifford_from_json(_read_json(args.right))
    _emit(clifford_to_json(cliff_mul(left, right)), args)


def _clifford_spin(args: argparse.Namespace, config: SystoleConfig) -> None:
    element = clifford_from_json(_read_json(args.input))
    verdict = is_spin(element)
    _emit({
        "element": clifford_to_json(element),
        "spin": verdict.spin,
        "reason": verdict.reason,
        "real_part": format_element(element.real_part()),
    }, args)


def _clifford_check_axioms(args: argparse.Namespace, config: SystoleConfig) -> None:
    field = field_from_int(args.field)
    if args.form is not None:
        form = form_from_strings(args.form, field)
    else:
        dimension = args.dimension if args.dimension is not None else config.dimension
        form = DiagonalForm([1] * (dimension + 1), field)
    _emit(check_clifford_axioms(form, args.samples, config.seed), args)


def _congruence_check(args: argparse.Namespace, config: SystoleConfig) -> None:
    element = clifford_from_json(_read_json(args.input))
    field = element.form.field
    alpha = parse_integer(args.alpha, field)
    member = in_gamma_alpha(element, alpha)
    payload: Dict[str, Any] = {
        "alpha": format_element(alpha),
        "in_gamma_alpha": member,
        "in_gamma_tau_alpha": None,
        "tau": None,
        "zeta": format_element(realpart_residue(element, alpha)) if member else None,
    }
    if args.tau is not None:
        level = CongruenceLevel(alpha, parse_integer(args.tau, field))
        payload["tau"] = format_element(level.tau_rep)
        payload["in_gamma_tau_alpha"] = in_gamma_tau_alpha(element, level)
    _emit(payload, args)


def _congruence_bounds(args: argparse.Namespace, config: SystoleConfig) -> None:
    field = field_from_int(args.field)
    alpha = parse_integer(args.alpha, field)
    n = args.n if args.n is not None else config.dimension
    reports = bound_reports(alpha, field.degree, n, args.s_abs)
    _emit({"alpha": format_element(alpha), "bounds": [r.as_dict() for r in reports]}, args)


def _salem_certify(args: argparse.Namespace, config: SystoleConfig) -> None:
    _emit(certify_surface_systole(_salem_quartic(args)), args)


def _salem_power(args: argparse.Namespace, config: SystoleConfig) -> None:
    sq = _salem_quartic(args)
    power = salem_power(sq, args.n)
    direct = salem_power_direct(sq, args.n)
    _emit({
        "n": power.n,
        "t_n": format_element(power.t),
        "u_n": format_element(power.u),
        "D": format_element(sq.D),
        "matches_direct": power == direct,
    }, args)


def _kleinian_invariants(args: argparse.Namespace, config: SystoleConfig) -> None:
    trace = _trace(args, config)
    kind = classify(trace)
    payload: Dict[str, Any] = {
        "trace": str(trace),
        "mu": trace.mu,
        "type": str(kind),
        "length": None,
        "holonomy": None,
        "holonomy_reduced": None,
        "eigenvalue": None,
        "tol": config.tolerance,
    }
    if kind is ElementType.LOXODROMIC:
        invariant = length_holonomy(trace)
        payload.update(
            length=invariant.length,
            holonomy=invariant.holonomy,
            holonomy_reduced=invariant.holonomy_reduced,
            eigenvalue=[invariant.eigenvalue.real, invariant.eigenvalue.imag],
        )
    _emit(payload, args)


def _kleinian_certify(args: argparse.Namespace, config: SystoleConfig) -> None:
    trace = _trace(args, config)
    payload = certify_square_systole(trace, config.square_systole_params()).as_dict()
    if args.ball_height is not None:
        payload["ball_check"] = square_systole_ball_check(trace, args.ball_height).as_dict()
    _emit(payload, args)


def _kleinian_enumerate(args: argparse.Namespace, config: SystoleConfig) -> None:
    field = _imaginary_field(args.d, config)
    height = args.height if args.height is not None else config.height
    level = None if args.level is None else parse_integer(args.level, field)
    records = []
    for gamma in enumerate_sl2(field, height, level, config.workers):
        record = gamma.as_dict()
        record["trace"] = format_element(gamma.trace())
        record["type"] = str(gamma.element_type())
        records.append(record)
    _write(emit_json_lines(records, args.out), args.out)


def _kleinian_check_identities(args: argparse.Namespace, config: SystoleConfig) -> None:
    field = _imaginary_field(args.d, config)
    _emit(check_trace_identities(field, args.samples, config.seed, max(config.tolerance, TOLERANCE)), args)


def _census_query(args: argparse.Namespace, config: SystoleConfig, max_norm: Any) -> CensusQuery:
    return CensusQuery(
        field=_imaginary_field(args.d, config),
        max_norm=max_norm,
        hol_lo=args.hol_lo if args.hol_lo is not None else config.hol_lo,
        hol_hi=args.hol_hi if args.hol_hi is not None else config.hol_hi,
        height=args.height if args.height is not None else config.height,
        primitive_only=args.primitive or config.primitive_only,
        workers=config.workers,
    )


def _census_run(args: argparse.Namespace, config: SystoleConfig) -> None:
    max_norm = args.max_norm if args.max_norm is not None else config.max_norm
    report = trace_census(_census_query(args, config, max_norm))
    _emit(report, args, ReportFormat.CSV)
    if args.out is not None:
        emit_report(report.get_summary(), ReportFormat.JSON, args.out.with_suffix(ReportFormat.JSON.value))


def _census_growth(args: argparse.Namespace, config: SystoleConfig) -> None:
    query = _census_query(args, config, 0)
    table = growth_table(
        query.field,
        args.n_list,
        (query.hol_lo, query.hol_hi),
        query.height,
        query.primitive_only,
        query.workers,
    )
    fmt = ReportFormat.CSV if args.format == "csv" else ReportFormat.JSON
    _emit(table, args, fmt)


COMMANDS: Dict[str, Callable[[argparse.Namespace, SystoleConfig], None]] = {
    "clifford mul": _clifford_mul,
    "clifford spin": _clifford_spin,
    "clifford check-axioms": _clifford_check_axioms,
    "congruence check": _congruence_check,
    "congruence bounds": _congruence_bounds,
    "salem certify": _salem_certify,
    "salem power": _salem_power,
    "kleinian invariants": _kleinian_invariants,
    "kleinian certify": _kleinian_certify,
    "kleinian enumerate": _kleinian_enumerate,
    "kleinian check-identities": _kleinian_check_identities,
    "census run": _census_run,
    "census growth": _census_growth,
}

# -------------------------------------------------------------------------------------------------
# Entry points
# -------------------------------------------------------------------------------------------------

def _load_config(args: argparse.Namespace) -> SystoleConfig:
    config = SystoleConfig.default()
    if args.config is not None:
        config.config_from_file(args.config)
    overrides = {
        key: getattr(args, key)
        for key in ("seed", "workers", "log_level")
        if getattr(args, key) is not None
    }
    config.config_from_dict(overrides)
    set_log_level(config.log_level)
    return config


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    run
    ===
    Parses ``argv``, runs the subcommand and maps the outcome to an exit code.

    Returns:
        out (int) :
            0 on success, 1 on a precondition or usage error, 2 on an
            invariant violation or an unexpected error.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
        config = _load_config(args)
        COMMANDS[f"{args.command} {args.action}"](args, config)
        return ExitCode.SUCCESS
    except SystemExit as e:
        # --help and --version
        return int(e.code or 0)
    except InvariantViolation as e:
        LOGGER.error(f"Invariant violation ({e.__class__.__name__}): {e}")
        sys.stderr.write(f"jr-systole: invariant violation: {e}\n")
        return ExitCode.INVARIANT
    except CliUsageError as e:
        sys.stderr.write(parser.format_usage())
        sys.stderr.write(f"{e}\n")
        return ExitCode.PRECONDITION
    except PRECONDITION_ERRORS as e:
        sys.stderr.write(f"jr-systole: {e.__class__.__name__}: {e}\n")
        return ExitCode.PRECONDITION
    except Exception as e:
        LOGGER.error(f"Error '{e.__class__.__name__}' -> unexpected failure: {e}")
        sys.stderr.write(f"jr-systole: unexpected {e.__class__.__name__}: {e}\n")
        return ExitCode.INVARIANT


def main(argv: Optional[List[str]] = None) -> None:
    raise SystemExit(int(run(argv)))


if __name__ == "__main__":
    main()
