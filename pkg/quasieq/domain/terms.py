"""Abstract syntax of functional equations.

Terms are immutable binary trees: a ``Var`` leaf names an object variable and an
``App`` node applies a binary operation symbol to two subterms.  An
``Equation`` pairs two terms.  Everything here is a pure value; the classifiers
in ``quasieq.application.classifier`` are built on the traversal helpers below.
"""

import itertools
import re
from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass

from quasieq.domain.constants import GENERALIZED_SYMBOL_PREFIX
from quasieq.domain.exceptions import NotFunctionalEquationError

_INDEX_SUFFIX_RE = re.compile(r"(\d+)$")


@dataclass(frozen=True)
class Var:
    """An object variable."""

    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class App:
    """A binary operation symbol applied to two terms."""

    op: str
    left: "Term"
    right: "Term"

    def __str__(self) -> str:
        return f"{self.op}({self.left},{self.right})"


Term = Var | App


@dataclass(frozen=True)
class Equation:
    """A functional equation ``lhs = rhs``; at least one side applies an operation."""

    lhs: Term
    rhs: Term

    def __post_init__(self) -> None:
        if isinstance(self.lhs, Var) and isinstance(self.rhs, Var):
            raise NotFunctionalEquationError(
                f"not a functional equation: {self.lhs}={self.rhs} has no operation symbol"
            )

    def __str__(self) -> str:
        return f"{self.lhs}={self.rhs}"

    @property
    def sides(self) -> tuple[Term, Term]:
        return (self.lhs, self.rhs)


def iter_variables(t: Term) -> Iterator[str]:
    """Yield variable occurrences left to right (with repetition)."""
    if isinstance(t, Var):
        yield t.name
        return
    yield from iter_variables(t.left)
    yield from iter_variables(t.right)


def iter_applications(t: Term) -> Iterator[App]:
    """Yield operation occurrences in depth-first, left-to-right preorder."""
    if isinstance(t, Var):
        return
    yield t
    yield from iter_applications(t.left)
    yield from iter_applications(t.right)


def iter_subterms(t: Term) -> Iterator[Term]:
    """Yield every subterm of ``t``, ``t`` itself included."""
    yield t
    if isinstance(t, App):
        yield from iter_subterms(t.left)
        yield from iter_subterms(t.right)


def occurrence_counts(t: Term) -> Counter[str]:
    return Counter(iter_variables(t))


def content(t: Term) -> frozenset[str]:
    """Return var(t), the set of variables occurring in ``t``."""
    return frozenset(iter_variables(t))


def equation_variables(e: Equation) -> list[str]:
    """Variables of ``e`` in order of first appearance (lhs before rhs)."""
    seen: dict[str, None] = {}
    for side in e.sides:
        for name in iter_variables(side):
            seen.setdefault(name, None)
    return list(seen)


def equation_symbols(e: Equation) -> list[str]:
    """Distinct operation symbols of ``e`` sorted by operation index, then name."""
    symbols = {app.op for side in e.sides for app in iter_applications(side)}
    return sorted(symbols, key=lambda s: (operation_index(s), s))


def operation_index(symbol: str) -> int:
    """Return the index ``i`` of an operation symbol ``f_i``; unindexed symbols count as 1."""
    match = _INDEX_SUFFIX_RE.search(symbol)
    return int(match.group(1)) if match else 1


def map_term(t: Term, *, var: dict[str, str] | None = None, swap: frozenset[str] = frozenset()) -> Term:
    """Rename variables through ``var`` and swap the arguments of every symbol in ``swap``."""
    if isinstance(t, Var):
        return Var(var.get(t.name, t.name)) if var else t
    left = map_term(t.left, var=var, swap=swap)
    right = map_term(t.right, var=var, swap=swap)
    if t.op in swap:
        left, right = right, left
    return App(t.op, left, right)


def generalize(e: Equation, prefix: str = GENERALIZED_SYMBOL_PREFIX) -> Equation:
    """Give the k-th operation occurrence (preorder, lhs then rhs) the fresh symbol ``{prefix}k``.

    An equation that is already generalized is returned unchanged.
    """
    if is_generalized(e):
        return e
    counter = itertools.count(1)

    def rename(t: Term) -> Term:
        if isinstance(t, Var):
            return t
        label = f"{prefix}{next(counter)}"
        left = rename(t.left)
        return App(label, left, rename(t.right))

    lhs = rename(e.lhs)
    return Equation(lhs, rename(e.rhs))


def is_generalized(e: Equation) -> bool:
    """True iff every operation symbol occurs exactly once."""
    symbols = [app.op for side in e.sides for app in iter_applications(side)]
    return len(symbols) == len(set(symbols))
