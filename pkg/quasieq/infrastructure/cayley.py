"""Cayley tables on {0..n-1}: operation tables, Latin squares, groups and linear quasigroups.

All tables are stored as read-only ``numpy`` int64 arrays so that evaluation and
validation can be vectorised.  Values are immutable after construction.
"""

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from quasieq.domain.exceptions import InvalidTableError, OrderBoundError, PreconditionError
from quasieq.domain.models import GroupDescriptor, OperationCertificate, Permutation, Rows
from quasieq.infrastructure.table_files import load_cayley_table
from quasieq.logging_config import get_logger

logger = get_logger(__name__)

TableKey = tuple[tuple[int, ...], ...]


def _as_table_array(table: np.ndarray | Sequence[Sequence[int]]) -> np.ndarray:
    arr = np.array(table, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise InvalidTableError(f"table must be a non-empty square array, got shape {arr.shape}")
    n = arr.shape[0]
    if arr.min() < 0 or arr.max() >= n:
        raise InvalidTableError(f"table entries must lie in [0,{n - 1}]")
    arr.setflags(write=False)
    return arr


def is_latin_array(arr: np.ndarray) -> bool:
    """True iff every row and every column of ``arr`` is a permutation of 0..n-1."""
    symbols = np.arange(arr.shape[-1])
    return bool(
        np.all(np.sort(arr, axis=-1) == symbols) and np.all(np.sort(arr, axis=-2) == symbols[:, None])
    )


@dataclass(frozen=True, eq=False)
class OperationTable:
    """An arbitrary binary operation on {0..n-1}."""

    table: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "table", _as_table_array(self.table))

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def is_latin(self) -> bool:
        return is_latin_array(self.table)

    def key(self) -> TableKey:
        return tuple(tuple(int(c) for c in row) for row in self.table)

    def to_rows(self) -> Rows:
        return [[int(c) for c in row] for row in self.table]

    def dual(self) -> "OperationTable":
        """The dual operation f*(x,y) = f(y,x)."""
        return type(self)(self.table.T)

    def __call__(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OperationTable):
            return NotImplemented
        return np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash(self.key())


class LatinSquare(OperationTable):
    """An operation table whose rows and columns are permutations (a finite quasigroup)."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not self.is_latin():
            raise InvalidTableError("table is not a Latin square")


def as_operation_table(rows: np.ndarray | Sequence[Sequence[int]], label: str = "table") -> OperationTable:
    """Wrap ``rows``; Latin tables become ``LatinSquare``, others are accepted with a warning."""
    table = OperationTable(rows)
    if table.is_latin():
        return LatinSquare(table.table)
    logger.warning("Operation table %s of order %d is not a Latin square", label, table.order)
    return table


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its Cayley table."""

    table: LatinSquare
    identity: int
    spec: str = "table"

    @property
    def order(self) -> int:
        return self.table.order

    @property
    def cayley(self) -> np.ndarray:
        return self.table.table

    @property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.cayley, self.cayley.T))

    @property
    def inverse(self) -> np.ndarray:
        """inverse[a] is the unique b with a + b = identity."""
        return np.argmax(self.cayley == self.identity, axis=1)

    def add(self, a: np.ndarray | int, b: np.ndarray | int) -> np.ndarray:
        return self.cayley[a, b]

    def descriptor(self) -> GroupDescriptor:
        return GroupDescriptor(spec=self.spec, identity=self.identity, table=self.table.to_rows())


def associativity_witness(arr: np.ndarray) -> tuple[int, int, int] | None:
    n = arr.shape[0]
    idx = np.arange(n)
    left = arr[arr, :]  # (a+b)+c at [a,b,c]
    right = arr[idx[:, None, None], arr[None, :, :]]  # a+(b+c) at [a,b,c]
    bad = np.argwhere(left != right)
    if bad.size == 0:
        return None
    a, b, c = (int(v) for v in bad[0])
    return a, b, c


def group_from_table(rows: np.ndarray | Sequence[Sequence[int]], spec: str = "table") -> FiniteGroup:
    """Validate a Cayley table as a group: Latin, two-sided identity, associative."""
    square = LatinSquare(rows)
    arr = square.table
    idx = np.arange(square.order)
    candidates = [
        e for e in range(square.order) if np.array_equal(arr[e], idx) and np.array_equal(arr[:, e], idx)
    ]
    if not candidates:
        raise InvalidTableError("table has no two-sided identity element")
    witness = associativity_witness(arr)
    if witness is not None:
        raise InvalidTableError(f"table is not associative: witness triple {witness}")
    return FiniteGroup(square, candidates[0], spec)


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidTableError(f"cyclic group order must be positive, got {n}")
    idx = np.arange(n)
    return FiniteGroup(LatinSquare(np.add.outer(idx, idx) % n), 0, f"Z{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Product group; the pair (a, b) is encoded as ``a * |h| + b``."""
    n2 = h.order
    idx = np.arange(g.order * n2)
    a, b = idx // n2, idx % n2
    table = g.cayley[a[:, None], a[None, :]] * n2 + h.cayley[b[:, None], b[None, :]]
    return FiniteGroup(LatinSquare(table), g.identity * n2 + h.identity, f"{g.spec}x{h.spec}")


def symmetric_group_3() -> FiniteGroup:
    """S3 on the permutations of (0,1,2) in lexicographic order; composition is p after q."""
    perms = list(itertools.permutations(range(3)))
    position = {p: i for i, p in enumerate(perms)}
    table = [[position[tuple(p[q[k]] for k in range(3))] for q in perms] for p in perms]
    return FiniteGroup(LatinSquare(table), 0, "S3")


def make_group(spec: str) -> FiniteGroup:
    """Build a group from ``Z<n>``, products such as ``Z2xZ2``, ``S3`` or ``file:<path>``."""
    text = spec.strip()
    if text.lower().startswith("file:"):
        path = text[len("file:") :]
        return group_from_table(load_cayley_table(path).table, spec=text)
    if text.upper() == "S3":
        return symmetric_group_3()
    factors: list[FiniteGroup] = []
    for part in text.lower().split("x"):
        if len(part) < 2 or part[0] != "z" or not part[1:].isdigit():
            raise InvalidTableError(f"unknown group spec {spec!r}")
        factors.append(cyclic_group(int(part[1:])))
    group = factors[0]
    for factor in factors[1:]:
        group = direct_product(group, factor)
    return group


def canonical_groups(n: int) -> list[FiniteGroup]:
    """One representative per isomorphism class, for orders 1 through 6."""
    if n == 4:
        return [cyclic_group(4), make_group("Z2xZ2")]
    if n == 6:
        return [cyclic_group(6), symmetric_group_3()]
    if 1 <= n <= 6:
        return [cyclic_group(n)]
    raise OrderBoundError(f"no canonical group list for order {n}; supported orders are 1..6")


def relabel(g: FiniteGroup, perm: Sequence[int]) -> FiniteGroup:
    """Transport ``g`` along the bijection a -> perm[a]."""
    p = np.asarray(perm, dtype=np.int64)
    table = np.empty_like(g.cayley)
    table[np.ix_(p, p)] = p[g.cayley]
    label = g.spec if list(perm) == list(range(g.order)) else f"{g.spec}:{'-'.join(map(str, perm))}"
    return FiniteGroup(LatinSquare(table), int(p[g.identity]), label)


@lru_cache(maxsize=8)
def group_structures(n: int) -> tuple[FiniteGroup, ...]:
    """Every distinct labelled group table on {0..n-1}, canonical list first, then permutation order."""
    seen: set[TableKey] = set()
    structures: list[FiniteGroup] = []
    for base in canonical_groups(n):
        for perm in itertools.permutations(range(n)):
            group = relabel(base, perm)
            key = group.table.key()
            if key not in seen:
                seen.add(key)
                structures.append(group)
    logger.debug("group_structures_enumerated", order=n, count=len(structures))
    return tuple(structures)


def _latin_backtrack(n: int) -> Iterator[np.ndarray]:
    grid = np.zeros((n, n), dtype=np.int64)
    row_used = np.zeros((n, n), dtype=bool)
    col_used = np.zeros((n, n), dtype=bool)

    def fill(cell: int) -> Iterator[np.ndarray]:
        if cell == n * n:
            yield grid.copy()
            return
        r, c = divmod(cell, n)
        for s in range(n):
            if row_used[r, s] or col_used[c, s]:
                continue
            grid[r, c] = s
            row_used[r, s] = col_used[c, s] = True
            yield from fill(cell + 1)
            row_used[r, s] = col_used[c, s] = False

    yield from fill(0)


@lru_cache(maxsize=8)
def latin_squares(n: int) -> tuple[LatinSquare, ...]:
    """All Latin squares of order ``n`` in lexicographic (row-major) order."""
    squares = tuple(LatinSquare(arr) for arr in _latin_backtrack(n))
    logger.debug("latin_squares_enumerated", order=n, count=len(squares))
    return squares


def is_automorphism(g: FiniteGroup, perm: Sequence[int] | np.ndarray) -> bool:
    """True iff ``perm`` is a bijection with perm(a+b) = perm(a)+perm(b)."""
    p = np.asarray(perm, dtype=np.int64)
    if p.shape != (g.order,) or not np.array_equal(np.sort(p), np.arange(g.order)):
        return False
    return bool(np.array_equal(p[g.cayley], g.cayley[np.ix_(p, p)]))


def linear_table(
    g: FiniteGroup, alpha: np.ndarray, c: int, beta: np.ndarray, reversed: bool = False
) -> np.ndarray:
    """Raw table of alpha(x)+c+beta(y), or beta(y)+c+alpha(x) when ``reversed``."""
    t = g.cayley
    if reversed:
        inner = t[c, alpha]  # c + alpha(x), indexed by x
        return t[beta[None, :], inner[:, None]]
    inner = t[c, beta]  # c + beta(y), indexed by y
    return t[alpha[:, None], inner[None, :]]


@dataclass(frozen=True, eq=False)
class LinearQuasigroup:
    """f(x,y) = alpha(x) + c + beta(y) over ``group`` (sum reversed when ``reversed``)."""

    group: FiniteGroup
    alpha: Permutation
    c: int
    beta: Permutation
    reversed: bool = False

    def table(self) -> LatinSquare:
        return linear_quasigroup(self.group, self.alpha, self.c, self.beta, self.reversed)

    def certificate(self) -> OperationCertificate:
        return OperationCertificate(
            alpha=[int(v) for v in self.alpha],
            c=self.c,
            beta=[int(v) for v in self.beta],
            reversed=self.reversed,
        )


def linear_quasigroup(
    g: FiniteGroup,
    alpha: Sequence[int] | np.ndarray,
    c: int,
    beta: Sequence[int] | np.ndarray,
    reversed: bool = False,
) -> LatinSquare:
    """Table induced by linear parameters; ``alpha`` and ``beta`` must be automorphisms of ``g``."""
    for label, perm in (("alpha", alpha), ("beta", beta)):
        if not is_automorphism(g, perm):
            raise PreconditionError(f"{label} is not an automorphism of {g.spec}")
    if not 0 <= c < g.order:
        raise PreconditionError(f"constant {c} is not an element of {g.spec}")
    table = linear_table(
        g, np.asarray(alpha, dtype=np.int64), c, np.asarray(beta, dtype=np.int64), reversed
    )
    return LatinSquare(table)
