"""Linear certificates: recover group and automorphism parameters from raw tables.

Given f(x,y) = alpha(x) + c + beta(y) over a group with identity e, the
parameters are forced: c = f(e,e), alpha(x) = f(x,e) - c and
beta(y) = -c + f(e,y).  The reversed form beta(y) + c + alpha(x) is forced the
same way with the sides exchanged.  A candidate is accepted only when both maps
are automorphisms and reproduce the table exactly.
"""

from collections.abc import Sequence

import numpy as np

from quasieq.config import get_settings
from quasieq.domain.exceptions import OrderBoundError, OrderMismatchError
from quasieq.domain.models import LinearCertificate, OperationCertificate
from quasieq.infrastructure.cayley import (
    FiniteGroup,
    OperationTable,
    LinearQuasigroup,
    group_structures,
    is_automorphism,
)
from quasieq.logging_config import get_logger

logger = get_logger(__name__)


def derive_parameters(
    table: OperationTable, g: FiniteGroup, reversed: bool = False
) -> OperationCertificate | None:
    """Forced linear parameters of ``table`` over ``g``, or None when they do not fit."""
    f, t, e, inv = table.table, g.cayley, g.identity, g.inverse
    c = int(f[e, e])
    if reversed:
        alpha = t[inv[c], f[:, e]]
        beta = t[f[e, :], inv[c]]
    else:
        alpha = t[f[:, e], inv[c]]
        beta = t[inv[c], f[e, :]]
    if not (is_automorphism(g, alpha) and is_automorphism(g, beta)):
        return None
    candidate = LinearQuasigroup(
        g, tuple(int(v) for v in alpha), c, tuple(int(v) for v in beta), reversed
    )
    if not np.array_equal(candidate.table().table, f):
        return None
    return candidate.certificate()


def certify_over(
    tables: Sequence[OperationTable], g: FiniteGroup, allow_reversed: bool = True
) -> list[OperationCertificate] | None:
    """Certify every table over the one group ``g``; non-reversed form is tried first."""
    found: list[OperationCertificate] = []
    for table in tables:
        options = (False, True) if allow_reversed else (False,)
        certificate = next(
            (c for c in (derive_parameters(table, g, r) for r in options) if c is not None), None
        )
        if certificate is None:
            return None
        found.append(certificate)
    return found


def check_certificate_order(n: int, max_order: int | None = None) -> None:
    bound = max_order if max_order is not None else get_settings().certificate_max_order
    if n > bound:
        raise OrderBoundError(f"linear certificates are bounded at order {bound}, got {n}")


def find_linear_certificate(
    f1: OperationTable,
    f2: OperationTable,
    require_abelian: bool = False,
    max_order: int | None = None,
) -> LinearCertificate | None:
    """Search labelled group structures for one shared group making both tables linear.

    Structures are tried in the order of ``group_structures``; the first hit wins.
    """
    if f1.order != f2.order:
        raise OrderMismatchError(f"tables have orders {f1.order} and {f2.order}")
    check_certificate_order(f1.order, max_order)

    for g in group_structures(f1.order):
        if require_abelian and not g.is_abelian:
            continue
        ops = certify_over((f1, f2), g)
        if ops is not None:
            logger.debug("linear_certificate_found", group=g.spec, order=g.order)
            return LinearCertificate(group=g.descriptor(), ops=ops)
    logger.debug("linear_certificate_not_found", order=f1.order, require_abelian=require_abelian)
    return None
