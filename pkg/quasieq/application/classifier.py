"""Syntactic classifiers of functional equations.

Quadratic, balanced, Belousov, generalized and level equations, together with
left/right heights and per-variable occurrence profiles.  The total classifiers
accept any equation; the partial ones (``is_belousov``, ``is_level``,
``var_profiles``) raise ``PreconditionError`` outside their domain.
"""

from collections import Counter

from quasieq.domain.exceptions import PreconditionError, VariableNotFoundError
from quasieq.domain.models import VarKind, VarProfile
from quasieq.domain.terms import (
    Equation,
    Term,
    Var,
    content,
    equation_variables,
    generalize,
    is_generalized,
    iter_subterms,
    occurrence_counts,
)

__all__ = [
    "generalize",
    "is_balanced",
    "is_belousov",
    "is_generalized",
    "is_level",
    "is_quadratic",
    "linear_variables",
    "lh",
    "occurrence_profiles",
    "quadratic_variables",
    "rh",
    "var_profiles",
    "var_sets",
]


def var_sets(t: Term) -> tuple[frozenset[str], frozenset[str], frozenset[str]]:
    """Return (var, var1, var2): all variables, those occurring once, those occurring twice."""
    counts = occurrence_counts(t)
    return (
        frozenset(counts),
        frozenset(name for name, k in counts.items() if k == 1),
        frozenset(name for name, k in counts.items() if k == 2),
    )


def _total_counts(e: Equation) -> Counter[str]:
    return occurrence_counts(e.lhs) + occurrence_counts(e.rhs)


def is_quadratic(e: Equation) -> bool:
    return all(k == 2 for k in _total_counts(e).values())


def is_balanced(e: Equation) -> bool:
    left, right = occurrence_counts(e.lhs), occurrence_counts(e.rhs)
    return set(left) == set(right) and all(k == 1 for k in (*left.values(), *right.values()))


def is_belousov(e: Equation) -> bool:
    """Balanced and every subterm's variable set is matched by a subterm on the other side."""
    if not is_balanced(e):
        raise PreconditionError(f"{e} is not balanced; the Belousov property is undefined")
    left = {content(p) for p in iter_subterms(e.lhs)}
    right = {content(q) for q in iter_subterms(e.rhs)}
    return left == right


def _height(x: str, t: Term, descend_right_on_both: bool) -> int:
    if isinstance(t, Var):
        if t.name != x:
            raise VariableNotFoundError(f"variable {x!r} does not occur in {t}")
        return 0
    in_left, in_right = x in content(t.left), x in content(t.right)
    if not (in_left or in_right):
        raise VariableNotFoundError(f"variable {x!r} does not occur in {t}")
    if in_left and in_right:
        child = t.right if descend_right_on_both else t.left
    else:
        child = t.left if in_left else t.right
    return 1 + _height(x, child, descend_right_on_both)


def lh(x: str, e: Equation | Term) -> int:
    """Left height of ``x``; on an equation the left side is used when it contains ``x``."""
    if isinstance(e, Equation):
        target = e.lhs if x in content(e.lhs) else e.rhs
        return _height(x, target, descend_right_on_both=False)
    return _height(x, e, descend_right_on_both=False)


def rh(x: str, e: Equation | Term) -> int:
    """Right height of ``x``; on an equation the right side is used when it contains ``x``."""
    if isinstance(e, Equation):
        target = e.rhs if x in content(e.rhs) else e.lhs
        return _height(x, target, descend_right_on_both=True)
    return _height(x, e, descend_right_on_both=True)


def is_level(e: Equation) -> bool:
    """All left heights and all right heights coincide in one value."""
    if not is_quadratic(e):
        raise PreconditionError(f"{e} is not quadratic; level is undefined")
    variables = equation_variables(e)
    heights = {lh(x, e) for x in variables} | {rh(x, e) for x in variables}
    return len(heights) <= 1


def _kind(lhs_count: int, rhs_count: int) -> VarKind:
    if lhs_count == 1 and rhs_count == 1:
        return "linear"
    if lhs_count == 2 and rhs_count == 0:
        return "left-quadratic"
    if lhs_count == 0 and rhs_count == 2:
        return "right-quadratic"
    return "other"


def occurrence_profiles(e: Equation) -> list[VarProfile]:
    """Profiles for every variable of any equation, in order of first appearance."""
    left, right = occurrence_counts(e.lhs), occurrence_counts(e.rhs)
    return [
        VarProfile(
            variable=x,
            total_occurrences=left[x] + right[x],
            lhs_occurrences=left[x],
            rhs_occurrences=right[x],
            kind=_kind(left[x], right[x]),
        )
        for x in equation_variables(e)
    ]


def var_profiles(e: Equation) -> list[VarProfile]:
    if not is_quadratic(e):
        raise PreconditionError(f"{e} is not quadratic; variable kinds are undefined")
    return occurrence_profiles(e)


def linear_variables(e: Equation) -> list[str]:
    return [p.variable for p in var_profiles(e) if p.kind == "linear"]


def quadratic_variables(e: Equation) -> list[str]:
    return [p.variable for p in var_profiles(e) if p.kind in ("left-quadratic", "right-quadratic")]
