"""
gsemi Command Line

``run(argv)`` parses the arguments, resolves the configuration, sets up
logging and dispatches to a handler. Exit codes: 0 success, 1 user error
or failed check, 2 inconclusive oracle or internal error.
"""

import argparse
import logging
import sys
from typing import List, Optional

from ..utils.errors import GsemiError, OracleInconclusive
from ..utils.logger import setup_logging
from .commands import COMMANDS, SCHEMAS
from .config import load_config

logger = logging.getLogger(__name__)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    group = common.add_argument_group("global options")
    group.add_argument("--prime", type=int, help="Oracle field characteristic (default 101)")
    group.add_argument("--ext-bound", type=int, help="Ext vanishing depth (default 2·max l(G) + 2)")
    group.add_argument("--seed", type=int, help="Seed for randomized oracle routines (default 0)")
    group.add_argument("--format", dest="output_format", choices=["text", "json", "dot"])
    group.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                       type=str.upper)
    group.add_argument("--log-dir", help="Directory for gsemi.log and gsemi-error.log")
    group.add_argument("--no-log-files", action="store_true", help="Log to stderr only")
    group.add_argument("--config", help="JSON config file (default config/gsemi_config.json)")
    group.add_argument("--dump-matrices", metavar="DIR", help="Write realized matrices as CSV")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="gsemi",
        description="Gorenstein projective classification over quadratic monomial algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("analyze", parents=[common], help="Full algebra report")
    p.add_argument("algebra")

    p = sub.add_parser("sing", parents=[common], help="Singularity category descriptor")
    p.add_argument("algebra")
    p.add_argument("--t2", action="store_true", help="Stable monomorphism category for n = 2")

    p = sub.add_parser("sn", parents=[common], help="Indecomposables of S_n(Gprj-Λ)")
    p.add_argument("algebra")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("mode", nargs="?", choices=["list", "count"], default="list")

    p = sub.add_parser("ars", parents=[common], help="Almost split sequences of S_n(Gprj-Λ)")
    p.add_argument("algebra")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--at", help="Right end such as [2,2,x] (default: every covered end)")
    p.add_argument("--check", action="store_true", help="Realize and check through the oracle")

    p = sub.add_parser("component", parents=[common], help="Stable AR components")
    p.add_argument("algebra")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--class", dest="stable_class", help="Arrow id of a class member")
    p.add_argument("--dot", metavar="FILE", help="Also write a Graphviz rendering")

    p = sub.add_parser("dynkin", parents=[common], help="CM-finiteness of representations")
    p.add_argument("algebra")
    p.add_argument("--quiver", required=True, help="Quiver file or A<n>")
    p.add_argument("--roots", action="store_true", help="List the positive roots")

    p = sub.add_parser("lift", parents=[common], help="Lift a stable representation")
    p.add_argument("algebra")
    p.add_argument("--rep", required=True, help="Stable representation JSON file")
    p.add_argument("--check", action="store_true", help="Verify the lift through the oracle")

    p = sub.add_parser("verify", parents=[common], help="Oracle verification suites")
    p.add_argument("algebra")
    p.add_argument("--rep", help="Stable representation JSON file to lift and verify")
    p.add_argument("--random", type=_non_negative, metavar="K",
                   help="Run the density suite on K random stable representations")

    p = sub.add_parser("schema", parents=[common], help="Print a JSON schema")
    p.add_argument("name", choices=sorted(SCHEMAS))
    return parser


def _overrides(args: argparse.Namespace) -> dict:
    overrides = {
        "prime": args.prime,
        "ext_bound": args.ext_bound,
        "seed": args.seed,
        "output_format": args.output_format,
        "log_level": args.log_level,
        "log_dir": args.log_dir,
        "dump_matrices": args.dump_matrices,
    }
    algebra = getattr(args, "algebra", None)
    if algebra:
        overrides["input_paths"] = [algebra]
    return overrides


def run(argv: Optional[List[str]] = None) -> int:
    """Run one gsemi command and return its exit code.

    Example:
        >>> run(["sn", "data/algebras/kx2.alg", "--n", "2", "count", "--no-log-files"])
        5
        0
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; those are user errors here
        return 0 if exc.code in (0, None) else 1

    try:
        config = load_config(args.config, _overrides(args))
        setup_logging(None if args.no_log_files else config.log_dir, config.log_level)
        logger.info(f"gsemi {args.command}: prime={config.prime}, seed={config.seed}")
        result = COMMANDS[args.command](args, config)
    except OracleInconclusive as e:
        logger.error(f"Inconclusive: {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except GsemiError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        logger.error(f"Internal error: {e}", exc_info=True)
        print(f"error: internal error: {e}", file=sys.stderr)
        return 2

    sys.stdout.write(result.output)
    sys.stdout.flush()
    return result.exit_code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
