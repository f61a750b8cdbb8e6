import argparse
import sys
from pathlib import Path
from typing import NoReturn

import structlog

from algebra import weight_enumerator
from config import load_config
from core import ReductionToolError, VerificationFailure, configure_logging
from core.checks import VerificationContext
from core.verifier import Verifier, all_passed
from formats import (
    format_complex,
    read_code,
    read_complex,
    read_enumerator,
    write_complex,
    write_metadata,
    write_registry,
)
from gadgets import GadgetRegistry
from matching import PerfectMatchingSearch, pm_weight_enumerator, reduce
from models import LogFormat, SearchStrategy, ToolConfig
from represent import build_balanced_representation, recover_weight_enumerator
from topology import cycle_space, weight_enumerator_cycles

logger = structlog.get_logger(__name__)


class ToolArgumentParser(argparse.ArgumentParser):
    """Reports bad arguments as a single ``ERROR usage`` line."""

    def error(self, message: str) -> NoReturn:
        raise ReductionToolError(f"{self.prog}: {message}", code="usage")


def build_parser() -> argparse.ArgumentParser:
    parser = ToolArgumentParser(
        prog="trireduce",
        description="Codes to triangular configurations to perfect matchings, with exhaustive checks.",
    )
    parser.add_argument("--config", default="config.yaml", help="YAML settings file")
    parser.add_argument("--max-dim", type=int, help="guard on exhaustively enumerated dimensions")
    parser.add_argument("--max-triangles", type=int, help="guard on perfect-matching search size")
    parser.add_argument("--strategy", choices=[s.value for s in SearchStrategy])
    parser.add_argument("--log-level")
    parser.add_argument("--log-format", choices=[f.value for f in LogFormat])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("represent", help="balanced triangular representation of a code")
    p.add_argument("code")
    p.add_argument("--out-dir", default=".")

    p = sub.add_parser("cycles", help="cycle-space basis of a configuration")
    p.add_argument("complex")

    p = sub.add_parser("weight-enum", help="weight enumerator of a code, cycle space or matchings")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--code")
    source.add_argument("--cycles")
    source.add_argument("--matchings")

    p = sub.add_parser("recover", help="fold a kernel enumerator back to the code enumerator")
    p.add_argument("wker")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("reduce", help="perfect-matching instance of a configuration")
    p.add_argument("complex")
    p.add_argument("--out-dir", default=".")

    p = sub.add_parser("gadget", help="emit a gadget as a complex file")
    p.add_argument("name", nargs="?", choices=GadgetRegistry.list_gadgets())
    p.add_argument("params", nargs="*", metavar="key=value")
    p.add_argument("--list", action="store_true", help="list registered gadgets and exit")

    p = sub.add_parser("verify", help="check every statement end to end on a code")
    p.add_argument("code")
    return parser


def resolve_config(args: argparse.Namespace) -> ToolConfig:
    config = load_config(args.config)
    if args.max_dim is not None:
        config.guards.max_dim = args.max_dim
    if args.max_triangles is not None:
        config.guards.max_triangles = args.max_triangles
    if args.strategy is not None:
        config.search.strategy = SearchStrategy(args.strategy)
    if args.log_level is not None:
        config.logging.level = args.log_level
    if args.log_format is not None:
        config.logging.format = LogFormat(args.log_format)
    return config


def cmd_represent(args: argparse.Namespace, config: ToolConfig) -> int:
    code = read_code(args.code)
    representation, doubled = build_balanced_representation(code)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_complex(out / "delta.tri", representation.config)
    write_metadata(out / "meta.txt", representation, doubled)
    print(f"{out / 'delta.tri'}")
    print(f"{out / 'meta.txt'}")
    return 0


def cmd_cycles(args: argparse.Namespace, config: ToolConfig) -> int:
    complex_, _ = read_complex(args.complex)
    basis = cycle_space(complex_)
    print(f"dim {len(basis)}")
    for v in basis:
        print(" ".join(str(i) for i in v.indices()))
    return 0


def cmd_weight_enum(args: argparse.Namespace, config: ToolConfig) -> int:
    guards = config.guards
    if args.code:
        enumerator = weight_enumerator(read_code(args.code), guards.max_dim)
    elif args.cycles:
        complex_, _ = read_complex(args.cycles)
        enumerator = weight_enumerator_cycles(complex_, guards.max_dim)
    else:
        complex_, weights = read_complex(args.matchings)
        search = PerfectMatchingSearch(config.search.strategy.value, guards)
        enumerator = pm_weight_enumerator(complex_, weights or (0,) * len(complex_), search=search)
    sys.stdout.write(enumerator.to_text())
    return 0


def cmd_recover(args: argparse.Namespace, config: ToolConfig) -> int:
    recovered = recover_weight_enumerator(read_enumerator(args.wker), args.e, args.n, args.d)
    sys.stdout.write(recovered.enumerator.to_text())
    return 0


def cmd_reduce(args: argparse.Namespace, config: ToolConfig) -> int:
    complex_, _ = read_complex(args.complex)
    instance = reduce(complex_)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_complex(out / "delta2.tri", instance.config, instance.weights)
    write_registry(out / "registry.txt", instance)
    print(f"{out / 'delta2.tri'}")
    print(f"{out / 'registry.txt'}")
    return 0


def cmd_gadget(args: argparse.Namespace, config: ToolConfig) -> int:
    if args.list:
        for name in GadgetRegistry.list_gadgets():
            print(f"{name}: {GadgetRegistry.get(name).description}")
        return 0
    if args.name is None:
        raise ReductionToolError("gadget name required", code="usage")
    params = {}
    for item in args.params:
        key, sep, value = item.partition("=")
        if not sep:
            raise ReductionToolError(f"parameter {item!r} is not key=value", code="usage")
        params[key] = value
    gadget = GadgetRegistry.build(args.name, params)
    sys.stdout.write(format_complex(gadget.config))
    return 0


def cmd_verify(args: argparse.Namespace, config: ToolConfig) -> int:
    code = read_code(args.code)
    ctx = VerificationContext(code=code, guards=config.guards, search=config.search)
    results = Verifier().run(ctx)
    for result in results:
        print(result.to_line())
    if not all_passed(results):
        failed = [r.name for r in results if not r.passed]
        raise VerificationFailure(f"failed checks: {', '.join(failed)}")
    return 0


COMMANDS = {
    "represent": cmd_represent,
    "cycles": cmd_cycles,
    "weight-enum": cmd_weight_enum,
    "recover": cmd_recover,
    "reduce": cmd_reduce,
    "gadget": cmd_gadget,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = resolve_config(args)
        configure_logging(config.logging)
        logger.debug("cli.start", verb=args.verb)
        return COMMANDS[args.verb](args, config)
    except ReductionToolError as e:
        print(e.to_line(), file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
