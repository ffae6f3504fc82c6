"""Readers for Cayley-table, interpretation and algebra files.

JSON documents are validated through the pydantic file models; a Cayley table
may also be given as whitespace-separated text rows.  Every failure surfaces as
``InvalidTableError``.
"""

import json
from pathlib import Path
from typing import TypeVar

from pydantic import BaseModel, ValidationError

from quasieq.domain.exceptions import InvalidTableError
from quasieq.domain.models import AlgebraFile, CayleyTableFile, TablesFile
from quasieq.logging_config import get_logger

logger = get_logger(__name__)

_ModelT = TypeVar("_ModelT", bound=BaseModel)


def _read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidTableError(f"cannot read {path}: {exc}") from exc


def _validate(model: type[_ModelT], payload: object, path: str | Path) -> _ModelT:
    try:
        return model.model_validate(payload)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise InvalidTableError(f"{path}: {first['msg']}") from exc


def _load_json(model: type[_ModelT], path: str | Path) -> _ModelT:
    text = _read_text(path)
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidTableError(f"{path}: invalid JSON ({exc.msg})") from exc
    return _validate(model, payload, path)


def parse_text_rows(text: str) -> list[list[int]]:
    """Parse whitespace-separated integer rows, skipping blank lines."""
    rows: list[list[int]] = []
    for line in text.splitlines():
        if not line.strip():
            continue
        try:
            rows.append([int(cell) for cell in line.split()])
        except ValueError as exc:
            raise InvalidTableError(f"non-integer cell in row {len(rows) + 1}") from exc
    return rows


def load_cayley_table(path: str | Path) -> CayleyTableFile:
    """Load ``{order, table}`` JSON, or text rows when the file is not JSON."""
    text = _read_text(path)
    if text.lstrip().startswith("{"):
        return _load_json(CayleyTableFile, path)
    rows = parse_text_rows(text)
    logger.debug("cayley_text_loaded", path=str(path), order=len(rows))
    return _validate(CayleyTableFile, {"order": len(rows), "table": rows}, path)


def load_tables_file(path: str | Path) -> TablesFile:
    return _load_json(TablesFile, path)


def load_algebra_file(path: str | Path) -> AlgebraFile:
    return _load_json(AlgebraFile, path)
