"""Semantic engine over finite carriers.

Equations are evaluated on every assignment at once: the assignment grid comes
from ``numpy.indices`` in C order, so position ``k`` of the flattened grid is
the ``k``-th assignment in lexicographic order over the equation's variables
(first-appearance order).
"""

import itertools
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from quasieq.application.branches import catalog, conditions
from quasieq.application.classifier import is_quadratic
from quasieq.config import get_settings
from quasieq.domain.constants import GEMINI_MODEL_BANK
from quasieq.domain.exceptions import (
    AbelianRequirementError,
    OrderBoundError,
    OrderMismatchError,
    PreconditionError,
    SoundnessError,
    UnassignedSymbolError,
)
from quasieq.domain.models import (
    Annihilate,
    BranchWord,
    Condition,
    ConstCompat,
    Counterexample,
    DualTwist,
    EquationCheck,
    EquationId,
    GeminiVerdict,
    GroupAbelian,
    InterpretationRecord,
    LinearEq,
    OperationParams,
    Sandwich,
    SolutionPair,
)
from quasieq.domain.terms import Equation, Term, Var, equation_symbols, equation_variables, operation_index
from quasieq.infrastructure.automorphisms import automorphisms
from quasieq.infrastructure.cayley import (
    FiniteGroup,
    LatinSquare,
    OperationTable,
    TableKey,
    latin_squares,
    linear_table,
)
from quasieq.infrastructure.steiner_loop import SteinerLoop, boolean_steiner_loop, steiner_loop_10
from quasieq.logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class Interpretation:
    """Assignment of operation tables (all of one order) to operation symbols."""

    order: int
    tables: Mapping[str, OperationTable] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for symbol, table in self.tables.items():
            if table.order != self.order:
                raise OrderMismatchError(
                    f"table for {symbol} has order {table.order}, expected {self.order}"
                )

    @classmethod
    def of(cls, tables: Mapping[str, OperationTable]) -> "Interpretation":
        if not tables:
            raise UnassignedSymbolError("an interpretation needs at least one table")
        order = next(iter(tables.values())).order
        return cls(order, dict(tables))

    def key(self) -> tuple[tuple[str, TableKey], ...]:
        return tuple((symbol, self.tables[symbol].key()) for symbol in sorted(self.tables))

    def to_record(self) -> InterpretationRecord:
        return InterpretationRecord(
            order=self.order,
            tables={symbol: table.to_rows() for symbol, table in self.tables.items()},
        )


# --- Evaluation ---


def assignment_grid(n: int, k: int) -> np.ndarray:
    """Shape (k, n**k): column ``j`` is the ``j``-th assignment in lexicographic order."""
    return np.indices((n,) * k).reshape(k, -1)


def evaluate(t: Term, tables: Mapping[str, np.ndarray], env: Mapping[str, np.ndarray]) -> np.ndarray:
    """Evaluate ``t`` over all assignments; a 3-d table evaluates a whole batch of operations."""
    if isinstance(t, Var):
        return env[t.name]
    left = evaluate(t.left, tables, env)
    right = evaluate(t.right, tables, env)
    table = tables[t.op]
    if table.ndim == 3:
        batch = np.arange(table.shape[0])[:, None]
        return table[batch, left, right]
    return table[left, right]


def _require_symbols(i: Interpretation, e: Equation) -> None:
    missing = [s for s in equation_symbols(e) if s not in i.tables]
    if missing:
        raise UnassignedSymbolError(f"no table assigned to {', '.join(missing)}")


def verify_equation(i: Interpretation, e: Equation) -> EquationCheck:
    """Brute-force check over all n^|var(e)| assignments; reports the first violation."""
    _require_symbols(i, e)
    variables = equation_variables(e)
    grid = assignment_grid(i.order, len(variables))
    env = dict(zip(variables, grid, strict=True))
    tables = {s: t.table for s, t in i.tables.items()}
    lhs, rhs = evaluate(e.lhs, tables, env), evaluate(e.rhs, tables, env)
    bad = np.flatnonzero(np.broadcast_to(lhs != rhs, grid.shape[1:]))
    if bad.size == 0:
        return EquationCheck(holds=True)
    first = int(bad[0])
    lhs_full, rhs_full = np.broadcast_to(lhs, grid.shape[1:]), np.broadcast_to(rhs, grid.shape[1:])
    return EquationCheck(
        holds=False,
        counterexample=Counterexample(
            assignment={v: int(grid[k, first]) for k, v in enumerate(variables)},
            lhs_value=int(lhs_full[first]),
            rhs_value=int(rhs_full[first]),
        ),
    )


# --- Conditions over a concrete group ---


def word_map(word: BranchWord, maps: Mapping[str, np.ndarray], n: int) -> np.ndarray:
    """Evaluate a branch word outermost-first as an array over the carrier."""
    result = np.arange(n)
    for symbol in reversed(word):
        result = maps[symbol][result]
    return result


def condition_holds(
    condition: Condition,
    g: FiniteGroup,
    maps: Mapping[str, np.ndarray],
    constants: Mapping[int, int] | None = None,
    tables: Mapping[int, np.ndarray] | None = None,
) -> bool:
    """Pointwise check of one condition; group and twist conditions are handled by the caller."""
    n, t = g.order, g.cayley
    if isinstance(condition, LinearEq):
        return bool(np.array_equal(word_map(condition.lhs, maps, n), word_map(condition.rhs, maps, n)))
    if isinstance(condition, Annihilate):
        w1, w2 = word_map(condition.w1, maps, n), word_map(condition.w2, maps, n)
        return bool(np.all(t[w1, w2] == g.identity))
    if isinstance(condition, Sandwich):
        assert constants is not None
        c = constants[condition.constant_index]
        w1, w2 = word_map(condition.w1, maps, n), word_map(condition.w2, maps, n)
        return bool(np.all(t[t[w1, c], w2] == c))
    if isinstance(condition, ConstCompat):
        assert constants is not None and tables is not None
        if 2 not in tables:
            return True
        c1, c2 = constants[1], constants[2]
        return bool(tables[1][c2, c2] == tables[2][c1, c1])
    return True


def _requires_constants(condition: Condition) -> bool:
    return isinstance(condition, Sandwich | ConstCompat)


def synthesize(eid: EquationId | str, g: FiniteGroup, limit: int | None = None) -> list[SolutionPair]:
    """Enumerate linear solutions of a catalog equation over ``g``.

    Automorphism tuples (alpha_i, beta_i by operation index) are taken in the
    deterministic order of ``automorphisms``; constants ascend.  Every emitted
    pair is re-verified by brute force.
    """
    conds = conditions(eid)
    if any(isinstance(c, GroupAbelian) for c in conds) and not g.is_abelian:
        raise AbelianRequirementError(f"{eid} requires an Abelian group; {g.spec} is not Abelian")
    e = catalog(eid)
    symbols = equation_symbols(e)
    indices = [operation_index(s) for s in symbols]
    reversed_ops = {c.op_index for c in conds if isinstance(c, DualTwist) and c.parity == "odd"}
    structural = [c for c in conds if not _requires_constants(c)]
    constant_conds = [c for c in conds if _requires_constants(c)]
    auts = [np.asarray(a, dtype=np.int64) for a in automorphisms(g)]

    logger.debug("synthesis_started", id=str(eid), group=g.spec, automorphisms=len(auts))
    found: list[SolutionPair] = []
    for combo in itertools.product(range(len(auts)), repeat=2 * len(indices)):
        maps: dict[str, np.ndarray] = {}
        for k, index in enumerate(indices):
            maps[f"alpha{index}"] = auts[combo[2 * k]]
            maps[f"beta{index}"] = auts[combo[2 * k + 1]]
        if not all(condition_holds(c, g, maps) for c in structural):
            continue
        for consts in itertools.product(range(g.order), repeat=len(indices)):
            constants = dict(zip(indices, consts, strict=True))
            raw = {
                index: linear_table(
                    g, maps[f"alpha{index}"], constants[index], maps[f"beta{index}"], index in reversed_ops
                )
                for index in indices
            }
            if not all(condition_holds(c, g, maps, constants, raw) for c in constant_conds):
                continue
            found.append(_solution(e, g, symbols, indices, maps, constants, raw, reversed_ops))
            if limit is not None and len(found) >= limit:
                logger.debug("synthesis_finished", id=str(eid), group=g.spec, count=len(found))
                return found
    logger.debug("synthesis_finished", id=str(eid), group=g.spec, count=len(found))
    return found


def _solution(
    e: Equation,
    g: FiniteGroup,
    symbols: list[str],
    indices: list[int],
    maps: Mapping[str, np.ndarray],
    constants: Mapping[int, int],
    raw: Mapping[int, np.ndarray],
    reversed_ops: set[int],
) -> SolutionPair:
    tables = {s: LatinSquare(raw[index]) for s, index in zip(symbols, indices, strict=True)}
    check = verify_equation(Interpretation(g.order, tables), e)
    if not check.holds:
        raise SoundnessError(f"synthesized solution over {g.spec} fails {e}: {check.counterexample}")
    return SolutionPair(
        group=g.descriptor(),
        ops=[
            OperationParams(
                alpha=[int(v) for v in maps[f"alpha{index}"]],
                c=constants[index],
                beta=[int(v) for v in maps[f"beta{index}"]],
                reversed=index in reversed_ops,
                table=tables[s].to_rows(),
            )
            for s, index in zip(symbols, indices, strict=True)
        ],
        verified=True,
    )


# --- Exhaustive search ---


def _satisfying_batches(e: Equation, symbols: list[str], squares: np.ndarray) -> Iterator[tuple[int, ...]]:
    n = squares.shape[1]
    variables = equation_variables(e)
    grid = assignment_grid(n, len(variables))
    env = dict(zip(variables, grid, strict=True))
    fixed, last = symbols[:-1], symbols[-1]
    for prefix in itertools.product(range(len(squares)), repeat=len(fixed)):
        tables: dict[str, np.ndarray] = {s: squares[k] for s, k in zip(fixed, prefix, strict=True)}
        tables[last] = squares
        lhs, rhs = evaluate(e.lhs, tables, env), evaluate(e.rhs, tables, env)
        holds = np.all(np.atleast_2d(lhs == rhs), axis=-1)
        for k in np.flatnonzero(np.broadcast_to(holds, (len(squares),))):
            yield (*prefix, int(k))


def exhaustive_search(eid: EquationId | str, n: int, max_order: int | None = None) -> list[Interpretation]:
    """Every assignment of order-``n`` Latin squares to the symbols that satisfies the equation."""
    bound = max_order if max_order is not None else get_settings().exhaustive_max_order
    if n > bound:
        raise OrderBoundError(f"exhaustive search is bounded at order {bound}, got {n}")
    e = catalog(eid)
    symbols = equation_symbols(e)
    squares = latin_squares(n)
    stack = np.stack([s.table for s in squares])
    logger.debug("exhaustive_search_started", id=str(eid), order=n, squares=len(squares))
    result = [
        Interpretation(n, {s: squares[k] for s, k in zip(symbols, combo, strict=True)})
        for combo in _satisfying_batches(e, symbols, stack)
    ]
    logger.debug("exhaustive_search_finished", id=str(eid), order=n, count=len(result))
    return result


# --- Gemini refutation ---


@lru_cache(maxsize=1)
def gemini_models() -> tuple[SteinerLoop, ...]:
    """Steiner loops tried in order: Boolean groups first, then the order-10 loop."""
    return tuple(
        steiner_loop_10() if name == "sloop10" else boolean_steiner_loop(name) for name in GEMINI_MODEL_BANK
    )


def gemini_refute(e: Equation) -> GeminiVerdict:
    """Semi-decide gemini status by looking for a Steiner-loop model that violates ``e``."""
    if not is_quadratic(e):
        raise PreconditionError(f"{e} is not quadratic; gemini status is undefined")
    for model in gemini_models():
        interpretation = Interpretation(model.order, {s: model.table for s in equation_symbols(e)})
        check = verify_equation(interpretation, e)
        if not check.holds:
            logger.debug("gemini_refuted", equation=str(e), model=model.name)
            return GeminiVerdict(verdict="NonGemini", model=model.name, counterexample=check.counterexample)
    return GeminiVerdict(verdict="GeminiUnknown")
