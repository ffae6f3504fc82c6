"""Hyperidentities of finite binary algebras and their linear representation."""

import itertools
from collections.abc import Sequence
from dataclasses import dataclass

from quasieq.application.branches import catalog, conditions
from quasieq.application.certificates import certify_over, check_certificate_order
from quasieq.application.solver import Interpretation, verify_equation
from quasieq.domain.exceptions import OrderMismatchError, PreconditionError
from quasieq.domain.models import (
    AlgebraFile,
    EquationId,
    GroupAbelian,
    HyperalgebraRepresentation,
    HyperidentityCheck,
    OperationCertificate,
)
from quasieq.domain.terms import equation_symbols
from quasieq.infrastructure.cayley import OperationTable, as_operation_table, group_structures
from quasieq.logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class Algebra:
    """A carrier {0..n-1} with a list of binary operations of that order."""

    order: int
    operations: tuple[OperationTable, ...]

    def __post_init__(self) -> None:
        for k, op in enumerate(self.operations):
            if op.order != self.order:
                raise OrderMismatchError(f"operation {k} has order {op.order}, expected {self.order}")

    @classmethod
    def from_file(cls, payload: AlgebraFile) -> "Algebra":
        ops = tuple(
            as_operation_table(rows, f"operations[{k}]") for k, rows in enumerate(payload.operations)
        )
        return cls(payload.order, ops)


def check_hyperidentity(a: Algebra, eid: EquationId | str) -> HyperidentityCheck:
    """Check the equation under every substitution of algebra operations for its symbols.

    Substitutions run in lexicographic order of operation indices; the first
    failure is reported with its substitution and assignment.
    """
    if not a.operations:
        raise PreconditionError("algebra has no operations")
    e = catalog(eid)
    symbols = equation_symbols(e)
    for substitution in itertools.product(range(len(a.operations)), repeat=len(symbols)):
        tables = {s: a.operations[k] for s, k in zip(symbols, substitution, strict=True)}
        check = verify_equation(Interpretation(a.order, tables), e)
        if not check.holds:
            assert check.counterexample is not None
            counterexample = check.counterexample.model_copy(
                update={"substitution": dict(zip(symbols, substitution, strict=True))}
            )
            logger.debug("hyperidentity_refuted", id=str(eid), substitution=list(substitution))
            return HyperidentityCheck(id=str(eid), holds=False, counterexample=counterexample)
    return HyperidentityCheck(id=str(eid), holds=True)


def _compatible(a: Algebra, certs: Sequence[OperationCertificate]) -> bool:
    return all(
        a.operations[i](certs[j].c, certs[j].c) == a.operations[j](certs[i].c, certs[i].c)
        for i, j in itertools.combinations(range(len(certs)), 2)
    )


def represent_hyperalgebra(
    a: Algebra, eid: EquationId | str, max_order: int | None = None
) -> HyperalgebraRepresentation | None:
    """One shared group with linear parameters for every operation, or None.

    Equations whose theory demands an Abelian group are represented over Abelian
    structures only, in the non-reversed form.  A None result for an algebra
    satisfying the hyperidentity contradicts the representation theorem and is
    logged as a warning.
    """
    if not a.operations:
        raise PreconditionError("algebra has no operations")
    check_certificate_order(a.order, max_order)
    abelian_only = any(isinstance(c, GroupAbelian) for c in conditions(eid))

    for g in group_structures(a.order):
        if abelian_only and not g.is_abelian:
            continue
        certs = certify_over(a.operations, g, allow_reversed=not abelian_only)
        if certs is None or not _compatible(a, certs):
            continue
        pairs = list(itertools.combinations(range(len(certs)), 2))
        logger.debug("hyperalgebra_represented", id=str(eid), group=g.spec)
        return HyperalgebraRepresentation(group=g.descriptor(), operations=certs, compatible_pairs=pairs)

    logger.warning(
        "hyperalgebra_not_represented",
        id=str(eid),
        order=a.order,
        operations=len(a.operations),
    )
    return None
