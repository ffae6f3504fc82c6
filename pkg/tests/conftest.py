"""Shared pytest fixtures for the quasieq test suite.

Groups and tables used across modules live here; file-based inputs are read
from ``tests/fixtures/tables`` by the modules that need them.  The settings
cache is cleared around every test so environment overrides never leak.
"""

import json
from collections.abc import Callable, Iterator
from pathlib import Path
from typing import Any

import pytest

from quasieq.config import get_settings
from quasieq.infrastructure.cayley import (
    FiniteGroup,
    LatinSquare,
    cyclic_group,
    linear_quasigroup,
    make_group,
    symmetric_group_3,
)

# Automorphisms x -> kx of Z5
Z5_ID = (0, 1, 2, 3, 4)
Z5_TIMES_2 = (0, 2, 4, 1, 3)
Z5_TIMES_3 = (0, 3, 1, 4, 2)


@pytest.fixture(autouse=True)
def _clear_settings_cache() -> Iterator[None]:
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


# ---------------------------------------------------------------------------
# Groups
# ---------------------------------------------------------------------------


@pytest.fixture()
def z5() -> FiniteGroup:
    return cyclic_group(5)


@pytest.fixture()
def z2xz2() -> FiniteGroup:
    return make_group("Z2xZ2")


@pytest.fixture()
def s3() -> FiniteGroup:
    return symmetric_group_3()


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------


@pytest.fixture()
def z5_sum(z5: FiniteGroup) -> LatinSquare:
    """x + y over Z5."""
    return linear_quasigroup(z5, Z5_ID, 0, Z5_ID)


@pytest.fixture()
def z5_2x3y(z5: FiniteGroup) -> LatinSquare:
    """2x + 3y over Z5."""
    return linear_quasigroup(z5, Z5_TIMES_2, 0, Z5_TIMES_3)


@pytest.fixture()
def z5_3x2y(z5: FiniteGroup) -> LatinSquare:
    """3x + 2y over Z5."""
    return linear_quasigroup(z5, Z5_TIMES_3, 0, Z5_TIMES_2)


@pytest.fixture()
def write_json(tmp_path: Path) -> Callable[[str, Any], str]:
    """Write a JSON payload under ``tmp_path`` and return its path."""

    def _write(name: str, payload: Any) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    return _write
