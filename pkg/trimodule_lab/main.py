"""
Command-line harness for the trimodule lab.

Implements:
- validate / antipode / fusion on single structure files
- cotensor, bdotb and reconstruct constructions writing canonical files
- chi and linton checks on explicit inputs
- report: the full acceptance suite as text or JSON

Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage or parse errors.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from .core.config import settings
from .core.errors import ParseError, TrimoduleLabError
from .core.logging import get_logger, setup_logging
from .models.schemas import CharacterDescription, MonoidDescription, OutputFormat, Report, SuiteReport
from .services.acceptance import CRITERIA, run_acceptance_suite
from .services.bialgebra import BialgebraFD, FiniteMonoid, antipode_system, validate_bialgebra
from .services.comodule import (
    BicomoduleFD,
    LeftComoduleFD,
    RightComoduleFD,
    cotensor,
    validate_bicomodule,
    validate_left_comodule,
    validate_right_comodule,
)
from .services.fixtures import FIXTURE_NAMES, fixture_bialgebra
from .services.monad_lab import fusion_report, linton_coequalizer, linton_oracle, monad_instance
from .services.serialization import SCHEMA, Structure, read_structure, validate_input, write_structure
from .services.trimodule import (
    HopfTrimoduleFD,
    interchange,
    interchange_colinearity,
    interchange_unit_triangle,
    trimodule_cotensor,
    validate_trimodule,
)
from .services.trimodule_algebra import (
    ContramoduleFD,
    TrimoduleAlgebraFD,
    TrimoduleModuleFD,
    b_dot_b,
    contramodule_validate,
    reconstruct_pointed,
    validate_module,
    validate_trimodule_algebra,
)

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

_VALIDATORS = [
    (BialgebraFD, validate_bialgebra),
    (LeftComoduleFD, validate_left_comodule),
    (RightComoduleFD, validate_right_comodule),
    (BicomoduleFD, validate_bicomodule),
    (HopfTrimoduleFD, validate_trimodule),
    (TrimoduleAlgebraFD, validate_trimodule_algebra),
    (TrimoduleModuleFD, validate_module),
    (ContramoduleFD, contramodule_validate),
]

_COTENSOR_KINDS = (LeftComoduleFD, RightComoduleFD, BicomoduleFD, HopfTrimoduleFD)


# ========================
# Input / output helpers
# ========================

def _load(path: str, *expected: type) -> Structure:
    obj = read_structure(Path(path).read_bytes())
    if expected and not isinstance(obj, expected):
        names = ", ".join(t.__name__ for t in expected)
        raise ParseError(SCHEMA, "$.kind", f"{path} holds a {type(obj).__name__}, expected {names}")
    return obj


def _load_bialgebra(source: str) -> BialgebraFD:
    """A fixture name (k, k[Z/2], k[S], H4) or a bialgebra file."""
    if source in FIXTURE_NAMES:
        return fixture_bialgebra(source)
    return _load(source, BialgebraFD)


def _output_path(path: str) -> Path:
    target = Path(path)
    if not target.is_absolute() and settings.output_dir is not None:
        target = settings.output_dir / target
    return target


def _read_json(path: str) -> dict:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError("malformed-syntax", f"{path}: line {exc.lineno} column {exc.colno}", exc.msg) from exc
    if not isinstance(data, dict):
        raise ParseError(SCHEMA, f"{path}: $", "expected an object")
    return data


def _emit(report, fmt: OutputFormat) -> int:
    if fmt == OutputFormat.JSON:
        print(report.model_dump_json(indent=2))
    else:
        print(report.render_text())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


# ========================
# Commands
# ========================

def cmd_validate(args: argparse.Namespace) -> Report:
    obj = _load(args.file)
    for cls, validator in _VALIDATORS:
        if isinstance(obj, cls):
            return validator(obj)
    raise ParseError(SCHEMA, "$.kind", f"no validator for {type(obj).__name__}")


def cmd_antipode(args: argparse.Namespace) -> Report:
    b = _load_bialgebra(args.file)
    system = antipode_system(b, twisted=args.twisted)
    label = "twisted-antipode" if args.twisted else "antipode"
    report = Report(subject=f"{label} of {b.name}")
    report.data["rank"] = system.rank
    report.data["augmented-rank"] = system.augmented_rank
    if system.solution is not None:
        report.data[label] = [[b.field.format(x) for x in row] for row in system.solution.to_lists()]
    report.add(label, system.solvable, None if system.solvable else f"rank {system.rank} < {system.augmented_rank}")
    return report


def cmd_cotensor(args: argparse.Namespace) -> Report:
    x, y = _load(args.x, *_COTENSOR_KINDS), _load(args.y, *_COTENSOR_KINDS)
    if isinstance(x, HopfTrimoduleFD) and isinstance(y, HopfTrimoduleFD):
        result = trimodule_cotensor(x, y)
        report = validate_trimodule(result)
    else:
        space = cotensor(x, y)
        if space.left_coaction is not None and space.right_coaction is not None:
            result = space.as_bicomodule()
            report = validate_bicomodule(result)
        elif space.left_coaction is not None:
            result = space.as_left_comodule()
            report = validate_left_comodule(result)
        elif space.right_coaction is not None:
            result = space.as_right_comodule()
            report = validate_right_comodule(result)
        else:
            raise ParseError(SCHEMA, "$.kind", "X□Y carries no coaction to serialize")
    report.data["dim"] = result.dim
    report.data["output"] = str(write_structure(_output_path(args.output), result))
    return report


def cmd_chi(args: argparse.Namespace) -> Report:
    x = _load(args.trimodule, HopfTrimoduleFD)
    m, n = _load(args.m, LeftComoduleFD), _load(args.n, LeftComoduleFD)
    report = Report(subject=f"χ for {x.name} at ({m.name}, {n.name})")
    report.checks.append(interchange_colinearity(x, m, n))
    report.checks.append(interchange_unit_triangle(x, n))
    if report.checks[0].passed:
        chi = interchange(x, m, n)
        report.data["shape"] = list(chi.shape)
        report.data["chi"] = [[x.field.format(v) for v in row] for row in chi.to_lists()]
    return report


def cmd_bdotb(args: argparse.Namespace) -> Report:
    b = _load_bialgebra(args.bialgebra)
    a = b_dot_b(b)
    report = validate_trimodule_algebra(a)
    report.data["dim"] = a.dim
    report.data["output"] = str(write_structure(_output_path(args.output), a))
    return report


def cmd_reconstruct(args: argparse.Namespace) -> Report:
    description = validate_input(MonoidDescription, _read_json(args.monoid), args.monoid)
    character = validate_input(CharacterDescription, _read_json(args.eps), args.eps)
    monoid = FiniteMonoid.from_names(description.elements, description.table, description.name)
    a = reconstruct_pointed(monoid, character.eps)
    report = validate_trimodule_algebra(a)
    report.data["dim"] = a.dim
    report.data["output"] = str(write_structure(_output_path(args.output), a))
    return report


def cmd_linton(args: argparse.Namespace) -> Report:
    a = _load(args.algebra, TrimoduleAlgebraFD)
    v = _load(args.v, LeftComoduleFD)
    m = _load(args.m, TrimoduleModuleFD)
    coequalizer = linton_coequalizer(monad_instance(a, [v]), v, m)
    report = validate_module(coequalizer.quotient)
    report.extend(linton_oracle(coequalizer))
    report.data["dim"] = coequalizer.quotient.dim
    return report


def cmd_fusion(args: argparse.Namespace) -> Report:
    return fusion_report(_load_bialgebra(args.bialgebra))


def cmd_report(args: argparse.Namespace) -> SuiteReport:
    return run_acceptance_suite(args.criteria)


# ========================
# Parser
# ========================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", type=OutputFormat, choices=list(OutputFormat), default=OutputFormat.TEXT,
        help="report format (default: text)",
    )

    parser = argparse.ArgumentParser(
        prog="trimodule-lab", description="Exact checks for Hopf trimodules and their algebras."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.app_version}")
    commands = parser.add_subparsers(dest="command", required=True)

    validate = commands.add_parser("validate", parents=[common], help="run the validator for a structure file")
    validate.add_argument("file")
    validate.set_defaults(handler=cmd_validate)

    antipode = commands.add_parser("antipode", parents=[common], help="solve for the (twisted) antipode")
    antipode.add_argument("--twisted", action="store_true")
    antipode.add_argument("file")
    antipode.set_defaults(handler=cmd_antipode)

    cotensor_cmd = commands.add_parser("cotensor", parents=[common], help="cotensor product X□Y")
    cotensor_cmd.add_argument("x")
    cotensor_cmd.add_argument("y")
    cotensor_cmd.add_argument("-o", "--output", required=True)
    cotensor_cmd.set_defaults(handler=cmd_cotensor)

    chi = commands.add_parser("chi", parents=[common], help="interchange morphism of a trimodule")
    chi.add_argument("trimodule")
    chi.add_argument("m")
    chi.add_argument("n")
    chi.set_defaults(handler=cmd_chi)

    bdotb = commands.add_parser("bdotb", parents=[common], help="build the algebra B•B")
    bdotb.add_argument("bialgebra")
    bdotb.add_argument("-o", "--output", required=True)
    bdotb.set_defaults(handler=cmd_bdotb)

    reconstruct = commands.add_parser("reconstruct", parents=[common], help="pointed reconstruction")
    reconstruct.add_argument("--pointed", nargs=2, metavar=("MONOID", "EPS"), required=True)
    reconstruct.add_argument("-o", "--output", required=True)
    reconstruct.set_defaults(handler=cmd_reconstruct)

    linton = commands.add_parser("linton", parents=[common], help="Linton coequalizer V ▶ M")
    linton.add_argument("algebra")
    linton.add_argument("v")
    linton.add_argument("m")
    linton.set_defaults(handler=cmd_linton)

    fusion = commands.add_parser("fusion", parents=[common], help="fusion operator and Galois map")
    fusion.add_argument("bialgebra")
    fusion.set_defaults(handler=cmd_fusion)

    report = commands.add_parser("report", parents=[common], help="run the acceptance suite")
    report.add_argument("--criteria", nargs="+", choices=sorted(CRITERIA), metavar="ID")
    report.set_defaults(handler=cmd_report)
    return parser


def run_command(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.command == "reconstruct":
        args.monoid, args.eps = args.pointed

    try:
        result = args.handler(args)
    except (ParseError, OSError) as exc:
        logger.error("Input rejected", command=args.command, error=str(exc))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TrimoduleLabError as exc:
        logger.error("Command failed", command=args.command, error=str(exc))
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return _emit(result, args.format)


def main(argv: Optional[List[str]] = None) -> None:
    setup_logging()
    sys.exit(run_command(argv))


if __name__ == "__main__":
    main()
