"""Command line interface: parse flags, build a SpectraConfig, dispatch, map errors to exit codes."""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from pydantic import ValidationError as PydanticValidationError

from cli.commands import (
    cmd_actions,
    cmd_counts,
    cmd_eigenfunction,
    cmd_monodromy,
    cmd_oracle_check,
    cmd_pair_gaps,
    cmd_spectrum,
)
from core.api import SpectraConfig
from core.models import SYSTEM_KINDS
from core.utils.exceptions import SeparableError, ValidationError
from logger import Logger

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3

COMMANDS = ("spectrum", "actions", "oracle-check", "monodromy", "eigenfunction", "counts", "pair-gaps")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="separable-spectra",
        description="Joint spectra, actions, eigenfunctions and monodromy of separable systems on S^3 and S^2",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", type=str, help="JSON file with SpectraConfig fields; flags override it")
    parser.add_argument("--system", choices=SYSTEM_KINDS, help="Coordinate system")
    parser.add_argument("--params", type=float, nargs="*", help="Shape parameters, e.g. --params 1 2 5 8")
    parser.add_argument("--degree", "-D", type=int, help="Total degree D (the degree l on S^2)")
    parser.add_argument("--seed", type=int, help="Random seed (default 42)")
    parser.add_argument("--out", type=str, help="Output file (stdout when omitted)")
    parser.add_argument("--format", choices=("csv", "json", "svg"), help="Output format")
    parser.add_argument("--classes", type=str, help="Comma separated class bits to keep, e.g. 00,11")
    parser.add_argument("--scaling", choices=("hbar-scaled", "raw"))
    parser.add_argument("--etilde-mode", choices=("unit", "exact"))
    parser.add_argument("--state", type=str, help="Quantum numbers of one state, e.g. m=0,d=1,k=0")
    parser.add_argument("--center", type=float, nargs=2, help="Monodromy loop center")
    parser.add_argument("--radius", type=float, help="Monodromy loop radius")
    parser.add_argument("--waypoints", type=int, help="Monodromy loop waypoints")
    parser.add_argument("--single-class", type=str, help="Transport on one class only, e.g. 00")
    parser.add_argument("--permute", type=int, nargs="+", help="Axis permutation, e.g. --permute 1 0 2 3")
    parser.add_argument(
        "--affine",
        type=float,
        nargs=6,
        metavar=("A11", "A12", "A21", "A22", "B1", "B2"),
        help="Presentation map y = A x + b applied to plotted pairs",
    )
    parser.add_argument("--debug", action="store_true", help="Verbose logging")
    return parser


def _bits(text: str) -> tuple:
    if not text or any(c not in "01" for c in text):
        raise ValidationError(f"Class bits must be a string of 0 and 1, got {text!r}")
    return tuple(int(c) for c in text)


def _state_selector(text: str) -> Dict[str, int]:
    selector = {}
    for item in text.split(","):
        key, sep, value = item.partition("=")
        if not sep:
            raise ValidationError(f"State selector items must look like name=value, got {item!r}")
        try:
            selector[key.strip()] = int(value)
        except ValueError as e:
            raise ValidationError(f"State selector value must be an integer, got {value!r}") from e
    return selector


def config_from_args(args: argparse.Namespace) -> SpectraConfig:
    """
    Merge the optional JSON config file with the command line flags.

    Raises:
        ValidationError: If the file cannot be read or a flag is malformed
        pydantic.ValidationError: If the merged config is invalid
    """
    data: Dict[str, Any] = {}
    if args.config:
        try:
            data = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise ValidationError(f"Cannot read config file {args.config}: {e}") from e

    if args.system:
        data["system"] = {"kind": args.system, "params": list(args.params or [])}
    elif args.params is not None and isinstance(data.get("system"), dict) and "kind" in data["system"]:
        data["system"]["params"] = list(args.params)
    for field, value in (
        ("degree", args.degree),
        ("seed", args.seed),
        ("output", args.format),
        ("scaling", args.scaling),
        ("etilde_mode", args.etilde_mode),
    ):
        if value is not None:
            data[field] = value
    if args.classes:
        data["classes"] = [_bits(c) for c in args.classes.split(",")]
    if args.state:
        data["state"] = _state_selector(args.state)
    if args.permute:
        data["permutation"] = tuple(args.permute)
    if args.affine:
        a11, a12, a21, a22, b1, b2 = args.affine
        data["presentation"] = {"matrix": ((a11, a12), (a21, a22)), "offset": (b1, b2)}
    if args.debug:
        data["debug"] = True

    monodromy = dict(data.get("monodromy") or {})
    if args.center is not None:
        monodromy["center"] = tuple(args.center)
    if args.radius is not None:
        monodromy["radius"] = args.radius
    if args.waypoints is not None:
        monodromy["waypoints"] = args.waypoints
    if args.single_class:
        monodromy["combined"] = False
        monodromy["single_class"] = _bits(args.single_class)
    if monodromy:
        data["monodromy"] = monodromy
    return SpectraConfig(**data)


def _emit(text: str, out: Optional[str]):
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        Logger.success(f"Wrote {path}", "[CLI]")
    else:
        sys.stdout.write(text)


def run_command(command: str, config: SpectraConfig) -> tuple:
    """
    Run one command.

    Returns:
        Tuple (text, exit code)
    """
    if command == "oracle-check":
        text, passed = cmd_oracle_check(config)
        return text, EXIT_OK if passed else EXIT_NUMERICAL
    handlers = {
        "spectrum": cmd_spectrum,
        "actions": cmd_actions,
        "monodromy": cmd_monodromy,
        "eigenfunction": cmd_eigenfunction,
        "counts": cmd_counts,
        "pair-gaps": cmd_pair_gaps,
    }
    return handlers[command](config), EXIT_OK


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; returns the exit code (0 success, 2 validation, 3 numerical failure)."""
    args = build_parser().parse_args(argv)
    Logger.set_debug(args.debug)
    try:
        config = config_from_args(args)
        text, code = run_command(args.command, config)
    except PydanticValidationError as e:
        Logger.error(f"Invalid configuration: {e}", "[CLI]")
        return EXIT_VALIDATION
    except SeparableError as e:
        Logger.error(f"{type(e).__name__}: {e}", "[CLI]")
        return e.exit_code
    _emit(text, args.out)
    if code != EXIT_OK:
        Logger.error(f"{args.command} failed", "[CLI]")
    return code


def main(argv: Optional[List[str]] = None):
    sys.exit(run_cli(argv))
