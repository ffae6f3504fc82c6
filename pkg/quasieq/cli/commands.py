"""Subcommand handlers.

Each handler takes the parsed ``argparse.Namespace`` and returns a
``CommandResult``; ``quasieq.cli.main`` renders it and maps it to an exit status.
Domain errors propagate to the dispatcher unchanged.
"""

from argparse import Namespace
from dataclasses import dataclass
from typing import Any

from pydantic import BaseModel

from quasieq.application.branches import catalog, conditions
from quasieq.application.certificates import find_linear_certificate
from quasieq.application.classifier import (
    is_balanced,
    is_belousov,
    is_level,
    is_quadratic,
    occurrence_profiles,
)
from quasieq.application.hyperidentity import Algebra, check_hyperidentity, represent_hyperalgebra
from quasieq.application.solver import Interpretation, exhaustive_search, gemini_refute, synthesize, verify_equation
from quasieq.domain.catalog import NAMED, all_ids, parse_equation_id
from quasieq.domain.exceptions import UnassignedSymbolError
from quasieq.domain.models import (
    CatalogEntry,
    ClassificationReport,
    ConditionList,
    HyperReport,
)
from quasieq.domain.terms import Equation, equation_symbols
from quasieq.infrastructure.cayley import as_operation_table, make_group
from quasieq.infrastructure.equation_parser import format_equation, parse_equation
from quasieq.infrastructure.krstic_graph import build_graph, to_dot, to_export
from quasieq.infrastructure.table_files import load_algebra_file, load_tables_file

EXIT_OK = 0
EXIT_PROPERTY_FAILS = 1
EXIT_INPUT_ERROR = 2


@dataclass(frozen=True)
class CommandResult:
    payload: Any
    exit_code: int = EXIT_OK


def _equation(args: Namespace) -> Equation:
    if getattr(args, "expr", None):
        return parse_equation(args.expr)
    return catalog(args.id)


def classification_report(e: Equation) -> ClassificationReport:
    """Total report: partial classifiers are reported as null outside their domain."""
    quadratic, balanced = is_quadratic(e), is_balanced(e)
    return ClassificationReport(
        equation=format_equation(e),
        quadratic=quadratic,
        balanced=balanced,
        belousov=is_belousov(e) if balanced else None,
        level=is_level(e) if quadratic else None,
        gemini_verdict=gemini_refute(e) if quadratic else None,
        variables=occurrence_profiles(e),
    )


def cmd_catalog(args: Namespace) -> CommandResult:
    entries = [
        CatalogEntry(
            id=str(eid),
            number=NAMED[str(eid)][0] if eid.family == "named" else None,
            equation=format_equation(catalog(eid)),
        )
        for eid in all_ids(args.family)
    ]
    return CommandResult(entries)


def cmd_classify(args: Namespace) -> CommandResult:
    return CommandResult(classification_report(_equation(args)))


def cmd_graph(args: Namespace) -> CommandResult:
    graph = build_graph(_equation(args))
    if args.format == "dot":
        return CommandResult(to_dot(graph))
    return CommandResult(to_export(graph))


def cmd_conditions(args: Namespace) -> CommandResult:
    eid = parse_equation_id(args.id)
    return CommandResult(ConditionList(id=str(eid), conditions=conditions(eid)))


def cmd_synthesize(args: Namespace) -> CommandResult:
    limit = None if args.all else args.limit
    return CommandResult(synthesize(args.id, make_group(args.group), limit=limit))


def _bind_tables(e: Equation, path: str) -> Interpretation:
    payload = load_tables_file(path)
    symbols = equation_symbols(e)
    if len(payload.tables) < len(symbols):
        raise UnassignedSymbolError(
            f"{path} holds {len(payload.tables)} tables but {e} needs {len(symbols)}"
        )
    tables = {
        symbol: as_operation_table(rows, symbol)
        for symbol, rows in zip(symbols, payload.tables, strict=False)
    }
    return Interpretation(payload.order, tables)


def cmd_verify(args: Namespace) -> CommandResult:
    e = _equation(args)
    check = verify_equation(_bind_tables(e, args.tables), e)
    return CommandResult(check, EXIT_OK if check.holds else EXIT_PROPERTY_FAILS)


def cmd_search(args: Namespace) -> CommandResult:
    records = []
    for interpretation in exhaustive_search(args.id, args.order):
        record = interpretation.to_record()
        if args.certify:
            tables = list(interpretation.tables.values())
            f1, f2 = tables[0], tables[-1]
            record = record.model_copy(update={"certificate": find_linear_certificate(f1, f2)})
        records.append(record)
    return CommandResult(records)


def cmd_gemini(args: Namespace) -> CommandResult:
    return CommandResult(gemini_refute(_equation(args)))


def cmd_hyper(args: Namespace) -> CommandResult:
    algebra = Algebra.from_file(load_algebra_file(args.algebra))
    check = check_hyperidentity(algebra, args.id)
    representation = represent_hyperalgebra(algebra, args.id) if args.represent and check.holds else None
    holds = check.holds and (representation is not None or not args.represent)
    return CommandResult(
        HyperReport(check=check, representation=representation),
        EXIT_OK if holds else EXIT_PROPERTY_FAILS,
    )


def render(payload: Any) -> Any:
    """JSON-ready form of a handler payload (pydantic models dumped by alias)."""
    if isinstance(payload, BaseModel):
        return payload.model_dump(mode="json", by_alias=True)
    if isinstance(payload, list):
        return [render(item) for item in payload]
    return payload
