import argparse
import json
import re
import sys
from collections.abc import Sequence

from quasieq.cli.commands import (
    EXIT_INPUT_ERROR,
    CommandResult,
    cmd_catalog,
    cmd_classify,
    cmd_conditions,
    cmd_gemini,
    cmd_graph,
    cmd_hyper,
    cmd_search,
    cmd_synthesize,
    cmd_verify,
    render,
)
from quasieq.config import get_settings
from quasieq.domain.constants import JSON_INDENT
from quasieq.domain.exceptions import QuasiEqError
from quasieq.logging_config import get_logger, setup_logging

logger = get_logger(__name__)

_CAMEL_BOUNDARY_RE = re.compile(r"(?<!^)(?=[A-Z])")


def _add_equation_source(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("id", nargs="?", help="catalog id (4.1, 5.10) or name (mediality)")
    source.add_argument("--expr", help="equation text, e.g. 'f(x,y)=f(y,x)'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasieq",
        description="Quadratic quasigroup functional equations: classification, graphs and finite solutions.",
    )
    parser.add_argument("--log-level", help="override QUASIEQ_LOG_LEVEL for this run")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list catalog equations")
    p.add_argument("--family", choices=["4", "5", "named"])
    p.set_defaults(handler=cmd_catalog)

    p = sub.add_parser("classify", help="syntactic classification and gemini verdict")
    _add_equation_source(p)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("graph", help="Krstic graph with 3-connectivity and shape")
    _add_equation_source(p)
    p.add_argument("--format", choices=["dot", "json"], default="json")
    p.set_defaults(handler=cmd_graph)

    p = sub.add_parser("conditions", help="solvability conditions of a catalog equation")
    p.add_argument("id")
    p.set_defaults(handler=cmd_conditions)

    p = sub.add_parser("synthesize", help="linear solutions over a concrete group")
    p.add_argument("id")
    p.add_argument("--group", required=True, help="Z5, Z2xZ2, S3 or file:<path>")
    amount = p.add_mutually_exclusive_group()
    amount.add_argument("--limit", type=int, default=None)
    amount.add_argument("--all", action="store_true")
    p.set_defaults(handler=cmd_synthesize)

    p = sub.add_parser("verify", help="brute-force check of an interpretation")
    p.add_argument("id")
    p.add_argument("--tables", required=True, help="JSON {order, tables}")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("search", help="exhaustive Latin-square search at a small order")
    p.add_argument("id")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--certify", action="store_true", help="attach linear certificates")
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("gemini", help="refute gemini status against the Steiner-loop bank")
    _add_equation_source(p)
    p.set_defaults(handler=cmd_gemini)

    p = sub.add_parser("hyper", help="hyperidentity check of a finite algebra")
    p.add_argument("id")
    p.add_argument("--algebra", required=True, help="JSON {order, operations}")
    p.add_argument("--represent", action="store_true", help="also find a shared linear representation")
    p.set_defaults(handler=cmd_hyper)

    return parser


def error_code(exc: QuasiEqError) -> str:
    """EquationSyntaxError -> EQUATION_SYNTAX_ERROR."""
    return _CAMEL_BOUNDARY_RE.sub("_", type(exc).__name__).upper()


def _emit(result: CommandResult) -> None:
    payload = render(result.payload)
    if isinstance(payload, str):
        sys.stdout.write(payload)
    else:
        sys.stdout.write(json.dumps(payload, indent=JSON_INDENT) + "\n")


def _emit_error(code: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error_code": code, "message": message}) + "\n")


def run(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, dispatch one subcommand and return its exit status.

    0: data emitted or property holds; 1: checked property fails (counterexample
    on stdout); 2: usage or input error (structured body on stderr).
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT_ERROR

    settings = get_settings()
    setup_logging(
        log_level=args.log_level or settings.log_level,
        json_output=settings.log_format == "json",
    )
    logger.debug("command_started", command=args.command)

    try:
        result = args.handler(args)
    except QuasiEqError as exc:
        logger.debug("command_failed", command=args.command, error=type(exc).__name__)
        _emit_error(error_code(exc), str(exc))
        return EXIT_INPUT_ERROR
    except Exception:
        logger.exception("Unhandled error in %s", args.command)
        _emit_error("INTERNAL_ERROR", "An unexpected error occurred.")
        return EXIT_INPUT_ERROR

    _emit(result)
    return result.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
