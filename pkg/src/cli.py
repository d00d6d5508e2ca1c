"""
Command-Line Entry Point

Module: src.cli
Purpose: argparse front end dispatching each verb to its tool
Status: Complete
Created: 2026-10-17

Usage:
    python -m src.cli chmap --group orthogonal --N 6 --lambda 2,2 --json
    python -m src.cli dims --group sp --N 4 --lambda 1,1
    python -m src.cli verify --suite charmap --max-m 4 --N 6

Exit codes: 0 on success, 1 when a tool reports an error or a verification
check fails, 2 on a usage error. Results go to stdout, diagnostics to stderr.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from src.storage.serializers import ResultStorage, dumps
from src.tools.tool_registry import ToolRegistry, default_registry
from src.tools.verification import SUITES
from src.utils.logger import VALID_LEVELS, setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# Global options, accepted before or after the verb
_GLOBAL_KEYS = ("json", "output", "log_level", "verbose", "command")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="Emit JSON on stdout")
    common.add_argument("--output", metavar="PATH", default=argparse.SUPPRESS, help="Also write the JSON result to PATH")
    common.add_argument("--log-level", choices=VALID_LEVELS[:4], default=argparse.SUPPRESS, help="Diagnostics level on stderr")
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS, help="Same as --log-level INFO")
    common.add_argument("--force-large", action="store_true", default=argparse.SUPPRESS, help="Allow N^m above the size guard")
    common.add_argument("--max-dimension", type=int, default=argparse.SUPPRESS, help="Size guard for N^m")
    common.add_argument("--seed", dest="rng_seed", type=int, default=argparse.SUPPRESS, help="Seed for randomized steps")
    return common


def _group_options(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--group", required=required, help="gl, orthogonal (o) or symplectic (sp)")
    parser.add_argument("--N", dest="N", type=int, required=required, help="Dimension of the vector representation")


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="brauerchar",
        description="Exact computations with Brauer algebra idempotents and their characteristic map.",
        parents=[common],
    )
    verbs = parser.add_subparsers(dest="command", metavar="verb")
    verbs.required = True

    dims = verbs.add_parser("dims", parents=[common], help="Dimension of an irreducible representation")
    _group_options(dims)
    dims.add_argument("--lambda", dest="lambda", required=True, help="Partition, e.g. 2,1")
    dims.add_argument("--trace", action="store_true", help="Report tr E_T instead of dim L(λ)")

    idempotent = verbs.add_parser("idempotent", parents=[common], help="Primitive or central idempotent on the tensor power")
    _group_options(idempotent)
    idempotent.add_argument("--lambda", dest="lambda", required=True)
    idempotent.add_argument("--tableau-index", type=int, default=0)
    idempotent.add_argument("--central", action="store_true", help="Build φ_λ instead of E_T")
    idempotent.add_argument("--triples", action="store_true", help="Include sparse (row, col, value) triples")

    chmap = verbs.add_parser("chmap", parents=[common], help="Characteristic map image of φ_λ")
    _group_options(chmap)
    chmap.add_argument("--lambda", dest="lambda")
    chmap.add_argument("--n", dest="n", type=int, help="Rank; defaults to floor(N/2)")
    chmap.add_argument("--oracle", action="store_true", help="Also compute the explicit trace and compare")
    chmap.add_argument("--no-prune", dest="prune", action="store_false", help="Sum over every ν ⊢ m/2")
    chmap.add_argument("--symmetrizer", type=int, metavar="L", help="Image of S^(2L) instead of φ_λ")
    chmap.add_argument("--anti", action="store_true", help="With --symmetrizer: the antisymmetrizer A^(2L)")

    schur = verbs.add_parser("schur", parents=[common], help="Schur polynomial")
    schur.add_argument("--nu", required=True)
    schur.add_argument("--n", dest="n", type=int, required=True)
    schur.add_argument("--point", help="Comma-separated rationals")

    double = verbs.add_parser("double-schur", parents=[common], help="Double Schur polynomial")
    double.add_argument("--nu", required=True)
    double.add_argument("--n", dest="n", type=int)
    double.add_argument("--epsilon", choices=["0", "1/2", "1"])
    _group_options(double, required=False)
    double.add_argument("--rho")
    double.add_argument("--point")
    double.add_argument("--zero-sequence", action="store_true", help="Use a_i = 0 (ordinary Schur polynomial)")

    verify = verbs.add_parser("verify", parents=[common], help="Run a property suite")
    verify.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    verify.add_argument("--max-m", type=int)
    verify.add_argument("--N", dest="N", help="Comma-separated N for the dims and charmap suites")
    verify.add_argument("--orthogonal-N", dest="orthogonal_N")
    verify.add_argument("--symplectic-N", dest="symplectic_N")

    basis = verbs.add_parser("basis", parents=[common], help="Diagram basis of B_m")
    basis.add_argument("--m", dest="m", type=int, required=True)
    basis.add_argument("--count", action="store_true", help="Print the count (default)")
    basis.add_argument("--list", action="store_true", help="Also list every diagram")

    return parser


def _tool_kwargs(options: Dict[str, Any], accepted: Dict[str, Any]) -> Dict[str, Any]:
    """Drop global flags and anything the tool does not declare."""
    return {
        key: value
        for key, value in options.items()
        if key not in _GLOBAL_KEYS and key in accepted and value is not None
    }


def run(argv: Optional[List[str]] = None, registry: Optional[ToolRegistry] = None) -> int:
    """Parse argv, run the verb, print the result; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    options = vars(args)
    level = options.get("log_level") or ("INFO" if options.get("verbose") else "WARNING")
    setup_logging(level, sys.stderr)

    registry = registry or default_registry()
    tool = registry.get(args.command)
    kwargs = _tool_kwargs(options, tool.parameters["properties"])
    logger.info("Running %s with %s", tool.name, kwargs)

    result = tool.execute(**kwargs)
    if not result["success"]:
        print(f"error: {result['error']}", file=sys.stderr)
        return EXIT_FAILURE

    data = result["data"]
    if options.get("json"):
        print(dumps(data))
    else:
        print(tool.render(data))
    if options.get("output"):
        path = ResultStorage().save(data, options["output"])
        logger.info("Wrote %s", path)

    if args.command == "verify" and not data["passed"]:
        return EXIT_FAILURE
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
