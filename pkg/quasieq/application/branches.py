"""Branch words and the symbolic solvability conditions of the catalog equations.

A branch word is a tuple of formal symbols ``alpha<i>`` / ``beta<i>`` read
outermost-first, so ``("alpha1", "alpha2")`` denotes alpha1 composed with alpha2.
"""

from functools import lru_cache

from quasieq.application.classifier import var_profiles
from quasieq.domain.catalog import (
    DUAL_TARGETS,
    NAMED_RULES,
    TWISTED_INDICES,
    equation_text,
    parse_equation_id,
)
from quasieq.domain.constants import ALPHA, BETA, CANONICAL_VARIABLE_NAMES
from quasieq.domain.exceptions import UnsupportedEquationError, VariableNotFoundError
from quasieq.domain.models import (
    Annihilate,
    BranchWord,
    Condition,
    ConstCompat,
    DualTwist,
    EquationId,
    GroupAbelian,
    GroupArbitrary,
    LinearEq,
    Sandwich,
)
from quasieq.domain.terms import Equation, Term, Var, content, equation_variables, map_term, operation_index
from quasieq.infrastructure.equation_parser import parse_equation
from quasieq.logging_config import get_logger

logger = get_logger(__name__)

DUALIZED_OPERATION = "f2"


@lru_cache(maxsize=128)
def catalog(eid: EquationId | str) -> Equation:
    """Return the parsed catalog equation for ``eid`` (an ``EquationId`` or its text form)."""
    if isinstance(eid, str):
        eid = parse_equation_id(eid)
    return parse_equation(equation_text(eid))


def _branch(x: str, t: Term, right_on_both: bool) -> BranchWord:
    if isinstance(t, Var):
        if t.name != x:
            raise VariableNotFoundError(f"variable {x!r} does not occur in {t}")
        return ()
    in_left, in_right = x in content(t.left), x in content(t.right)
    if not (in_left or in_right):
        raise VariableNotFoundError(f"variable {x!r} does not occur in {t}")
    index = operation_index(t.op)
    go_right = right_on_both if (in_left and in_right) else in_right
    if go_right:
        return (f"{BETA}{index}", *_branch(x, t.right, right_on_both))
    return (f"{ALPHA}{index}", *_branch(x, t.left, right_on_both))


def lbranch(x: str, e: Equation | Term) -> BranchWord:
    if isinstance(e, Equation):
        return _branch(x, e.lhs if x in content(e.lhs) else e.rhs, right_on_both=False)
    return _branch(x, e, right_on_both=False)


def rbranch(x: str, e: Equation | Term) -> BranchWord:
    if isinstance(e, Equation):
        return _branch(x, e.rhs if x in content(e.rhs) else e.lhs, right_on_both=True)
    return _branch(x, e, right_on_both=True)


def _rule(eid: EquationId) -> EquationId:
    if eid.family != "named":
        return eid
    rule = NAMED_RULES.get(str(eid.name))
    if rule is None:
        raise UnsupportedEquationError(f"no solution theory is known for {eid}")
    return rule


def conditions(eid: EquationId | str) -> list[Condition]:
    """Solvability conditions in canonical order.

    Group requirement, constant compatibility, linear variables in order of
    first appearance, then quadratic variables; a ``DualTwist`` closes the list
    for the two equations whose general solution allows a non-Abelian group.
    """
    if isinstance(eid, str):
        eid = parse_equation_id(eid)
    rule = _rule(eid)
    e = catalog(eid)
    named = eid.family == "named"
    twist = TWISTED_INDICES.get(rule.index or 0) if rule.family == "5" else None

    result: list[Condition] = [GroupArbitrary() if twist else GroupAbelian(), ConstCompat()]
    profiles = var_profiles(e)
    for profile in profiles:
        if profile.kind == "linear":
            result.append(LinearEq(lhs=lbranch(profile.variable, e), rhs=rbranch(profile.variable, e)))
    for profile in profiles:
        if profile.kind == "linear":
            continue
        w1, w2 = lbranch(profile.variable, e), rbranch(profile.variable, e)
        if twist is None:
            result.append(Annihilate(w1=w1, w2=w2))
            continue
        right_side = profile.kind == "right-quadratic"
        ci = 2 if right_side and not named else 1
        if twist == "odd" and right_side:
            w1, w2 = w2, w1
        result.append(Sandwich(w1=w1, constant_index=ci, w2=w2))
    if twist is not None:
        result.append(DualTwist(op_index=1 if named else 2, parity=twist))  # type: ignore[arg-type]
    logger.debug("conditions_generated", id=str(eid), count=len(result))
    return result


def canonical_rename(e: Equation) -> Equation:
    """Rename variables to x, y, u, v, ... in order of first appearance."""
    names = equation_variables(e)
    mapping = dict(zip(names, CANONICAL_VARIABLE_NAMES, strict=False))
    return Equation(map_term(e.lhs, var=mapping), map_term(e.rhs, var=mapping))


def dualize(e: Equation, ops: frozenset[str]) -> Equation:
    """Replace each symbol in ``ops`` by its dual (arguments swapped), then rename canonically."""
    return canonical_rename(Equation(map_term(e.lhs, swap=ops), map_term(e.rhs, swap=ops)))


def dual_reduce(eid: EquationId | str) -> tuple[EquationId, frozenset[str]]:
    """Pair a family-5 equation with the base equation obtained by dualizing ``f2``."""
    if isinstance(eid, str):
        eid = parse_equation_id(eid)
    if eid.family != "5" or eid.index not in DUAL_TARGETS:
        raise UnsupportedEquationError(f"{eid} has no duality pairing")
    return EquationId(family="5", index=DUAL_TARGETS[eid.index]), frozenset({DUALIZED_OPERATION})
