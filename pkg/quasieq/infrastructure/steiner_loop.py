"""Steiner loops (commutative, x*x = e, x*(x*y) = y) used as gemini counter-models."""

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from quasieq.domain.constants import STS9_TRIPLES
from quasieq.domain.exceptions import InvalidTableError
from quasieq.infrastructure.cayley import FiniteGroup, LatinSquare, associativity_witness, make_group
from quasieq.logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class SteinerLoop:
    """Commutative loop with x*x = e and x*(x*y) = y."""

    table: LatinSquare
    identity: int
    name: str

    @property
    def order(self) -> int:
        return self.table.order


def validate_steiner_loop(table: LatinSquare, identity: int) -> None:
    """Raise ``InvalidTableError`` unless ``table`` satisfies every Steiner loop law."""
    arr = table.table
    n = table.order
    idx = np.arange(n)
    if not (np.array_equal(arr[identity], idx) and np.array_equal(arr[:, identity], idx)):
        raise InvalidTableError(f"element {identity} is not a two-sided identity")
    if not np.array_equal(arr, arr.T):
        raise InvalidTableError("Steiner loop must be commutative")
    if not np.all(np.diagonal(arr) == identity):
        raise InvalidTableError("Steiner loop must satisfy x*x = e")
    if not np.array_equal(arr[idx[:, None], arr], np.broadcast_to(idx, (n, n))):
        raise InvalidTableError("Steiner loop must satisfy x*(x*y) = y")


def steiner_loop_from_triples(points: int, triples: Sequence[tuple[int, int, int]], name: str) -> SteinerLoop:
    """Adjoin identity 0 to a Steiner triple system on points 1..``points``."""
    n = points + 1
    table = np.full((n, n), -1, dtype=np.int64)
    table[0, :] = table[:, 0] = np.arange(n)
    np.fill_diagonal(table, 0)
    for triple in triples:
        for a, b, c in ((triple[0], triple[1], triple[2]), (triple[0], triple[2], triple[1]), (triple[1], triple[2], triple[0])):
            if table[a, b] != -1:
                raise InvalidTableError(f"pair {{{a},{b}}} lies in more than one triple")
            table[a, b] = table[b, a] = c
    if np.any(table < 0):
        raise InvalidTableError("some pair of points lies in no triple")
    loop = SteinerLoop(LatinSquare(table), 0, name)
    validate_steiner_loop(loop.table, loop.identity)
    return loop


@lru_cache(maxsize=1)
def steiner_loop_10() -> SteinerLoop:
    """The order-10 Steiner loop over the affine plane of order 3."""
    loop = steiner_loop_from_triples(9, STS9_TRIPLES, "sloop10")
    logger.debug("steiner_loop_built", name=loop.name, order=loop.order)
    return loop


def boolean_steiner_loop(spec: str) -> SteinerLoop:
    """An elementary Abelian 2-group (``Z2``, ``Z2xZ2``, ...) viewed as a Steiner loop."""
    group: FiniteGroup = make_group(spec)
    validate_steiner_loop(group.table, group.identity)
    return SteinerLoop(group.table, group.identity, spec)


def loop_associativity_witness(loop: SteinerLoop) -> tuple[int, int, int] | None:
    """First triple (a,b,c) in lexicographic order with (ab)c != a(bc), if any."""
    return associativity_witness(loop.table.table)
