"""Catalog of the 48 parastrophically uncancellable quadratic equations plus named classics.

Equations are stored in concrete syntax; ``quasieq.application.branches.catalog``
parses them on demand.  Ids are written ``4.j`` (j = 1..16), ``5.j`` (j = 1..32)
or by name.
"""

from quasieq.domain.exceptions import UnknownEquationError
from quasieq.domain.models import EquationId

# f1(f2(x,y),f2(u,v)) = f2(f1(.,.),f1(.,.)); balanced, Krstic graph K33.
FAMILY_4: tuple[str, ...] = (
    "f1(f2(x,y),f2(u,v))=f2(f1(x,u),f1(y,v))",
    "f1(f2(x,y),f2(u,v))=f2(f1(x,u),f1(v,y))",
    "f1(f2(x,y),f2(u,v))=f2(f1(x,v),f1(y,u))",
    "f1(f2(x,y),f2(u,v))=f2(f1(x,v),f1(u,y))",
    "f1(f2(x,y),f2(u,v))=f2(f1(y,u),f1(x,v))",
    "f1(f2(x,y),f2(u,v))=f2(f1(y,u),f1(v,x))",
    "f1(f2(x,y),f2(u,v))=f2(f1(y,v),f1(x,u))",
    "f1(f2(x,y),f2(u,v))=f2(f1(y,v),f1(u,x))",
    "f1(f2(x,y),f2(u,v))=f2(f1(u,x),f1(y,v))",
    "f1(f2(x,y),f2(u,v))=f2(f1(u,x),f1(v,y))",
    "f1(f2(x,y),f2(u,v))=f2(f1(u,y),f1(x,v))",
    "f1(f2(x,y),f2(u,v))=f2(f1(u,y),f1(v,x))",
    "f1(f2(x,y),f2(u,v))=f2(f1(v,x),f1(y,u))",
    "f1(f2(x,y),f2(u,v))=f2(f1(v,x),f1(u,y))",
    "f1(f2(x,y),f2(u,v))=f2(f1(v,y),f1(x,u))",
    "f1(f2(x,y),f2(u,v))=f2(f1(v,y),f1(u,x))",
)

# Quadratic, not balanced; Krstic graph is the 3-prism.
FAMILY_5: tuple[str, ...] = (
    "f1(f2(x,y),f2(x,u))=f2(f1(y,v),f1(u,v))",
    "f1(f2(x,y),f2(x,u))=f2(f1(y,v),f1(v,u))",
    "f1(f2(x,y),f2(x,u))=f2(f1(u,v),f1(y,v))",
    "f1(f2(x,y),f2(x,u))=f2(f1(u,v),f1(v,y))",
    "f1(f2(x,y),f2(x,u))=f2(f1(v,y),f1(u,v))",
    "f1(f2(x,y),f2(x,u))=f2(f1(v,y),f1(v,u))",
    "f1(f2(x,y),f2(x,u))=f2(f1(v,u),f1(y,v))",
    "f1(f2(x,y),f2(x,u))=f2(f1(v,u),f1(v,y))",
    "f1(f2(x,y),f2(y,u))=f2(f1(x,v),f1(u,v))",
    "f1(f2(x,y),f2(y,u))=f2(f1(x,v),f1(v,u))",
    "f1(f2(x,y),f2(y,u))=f2(f1(u,v),f1(x,v))",
    "f1(f2(x,y),f2(y,u))=f2(f1(u,v),f1(v,x))",
    "f1(f2(x,y),f2(y,u))=f2(f1(v,x),f1(u,v))",
    "f1(f2(x,y),f2(y,u))=f2(f1(v,x),f1(v,u))",
    "f1(f2(x,y),f2(y,u))=f2(f1(v,u),f1(x,v))",
    "f1(f2(x,y),f2(y,u))=f2(f1(v,u),f1(v,x))",
    "f1(f2(x,y),f2(u,x))=f2(f1(y,v),f1(u,v))",
    "f1(f2(x,y),f2(u,x))=f2(f1(y,v),f1(v,u))",
    "f1(f2(x,y),f2(u,x))=f2(f1(u,v),f1(y,v))",
    "f1(f2(x,y),f2(u,x))=f2(f1(u,v),f1(v,y))",
    "f1(f2(x,y),f2(u,x))=f2(f1(v,y),f1(u,v))",
    "f1(f2(x,y),f2(u,x))=f2(f1(v,y),f1(v,u))",
    "f1(f2(x,y),f2(u,x))=f2(f1(v,u),f1(y,v))",
    "f1(f2(x,y),f2(u,x))=f2(f1(v,u),f1(v,y))",
    "f1(f2(x,y),f2(u,y))=f2(f1(x,v),f1(u,v))",
    "f1(f2(x,y),f2(u,y))=f2(f1(x,v),f1(v,u))",
    "f1(f2(x,y),f2(u,y))=f2(f1(u,v),f1(x,v))",
    "f1(f2(x,y),f2(u,y))=f2(f1(u,v),f1(v,x))",
    "f1(f2(x,y),f2(u,y))=f2(f1(v,x),f1(u,v))",
    "f1(f2(x,y),f2(u,y))=f2(f1(v,x),f1(v,u))",
    "f1(f2(x,y),f2(u,y))=f2(f1(v,u),f1(x,v))",
    "f1(f2(x,y),f2(u,y))=f2(f1(v,u),f1(v,x))",
)

# name -> (example number, equation)
NAMED: dict[str, tuple[int, str]] = {
    "commutativity": (2, "f(x,y)=f(y,x)"),
    "associativity": (3, "f(f(x,y),z)=f(x,f(y,z))"),
    "mediality": (4, "f(f(x,y),f(u,v))=f(f(x,u),f(y,v))"),
    "paramediality": (5, "f(f(x,y),f(u,v))=f(f(v,y),f(u,x))"),
    "distributivity": (6, "f(x,f(y,z))=f(f(x,y),f(x,z))"),
    "transitivity": (7, "f(f(x,y),f(y,z))=f(x,z)"),
    "intermediality": (8, "f(f(x,y),f(y,u))=f(f(x,v),f(v,u))"),
    "extramediality": (9, "f(f(x,y),f(u,x))=f(f(v,y),f(u,v))"),
    "4-palindromic": (10, "f(f(x,y),f(u,v))=f(f(v,u),f(y,x))"),
    "idempotency": (11, "f(x,x)=x"),
    "trivial": (12, "f(x,y)=f(x,y)"),
    "eq13": (13, "f(x,f(y,z))=f(f(z,y),x)"),
}

# Named level equations covered by the family theorems, and the family rule they follow.
NAMED_RULES: dict[str, EquationId] = {
    "mediality": EquationId(family="4", index=1),
    "paramediality": EquationId(family="4", index=16),
    "intermediality": EquationId(family="5", index=10),
    "extramediality": EquationId(family="5", index=21),
}

# Duality pairing: (5.k) becomes (5.target) after replacing f2 by its dual.
DUAL_TARGETS: dict[int, int] = {
    3: 25,
    4: 29,
    7: 26,
    8: 30,
    11: 17,
    12: 21,
    15: 18,
    16: 22,
    19: 9,
    20: 13,
    23: 10,
    24: 14,
    27: 1,
    28: 5,
    31: 2,
    32: 6,
}

# Indices whose solution theory allows a non-Abelian group and a reversed f2.
TWISTED_INDICES: dict[int, str] = {10: "even", 23: "odd"}


def parse_equation_id(text: str) -> EquationId:
    """Parse ``4.j``, ``5.j`` or a named classic into an ``EquationId``."""
    key = text.strip().lower()
    if key in NAMED:
        return EquationId(family="named", name=key)
    family, dot, index = key.partition(".")
    if dot and family in {"4", "5"} and index.isdigit():
        upper = len(FAMILY_4) if family == "4" else len(FAMILY_5)
        if 1 <= int(index) <= upper:
            return EquationId(family=family, index=int(index))  # type: ignore[arg-type]
    raise UnknownEquationError(f"unknown equation id {text!r}")


def equation_text(eid: EquationId) -> str:
    """Return the concrete syntax of a catalog entry."""
    if eid.family == "named":
        if eid.name not in NAMED:
            raise UnknownEquationError(f"unknown equation id {eid.name!r}")
        return NAMED[eid.name][1]
    entries = FAMILY_4 if eid.family == "4" else FAMILY_5
    assert eid.index is not None
    return entries[eid.index - 1]


def all_ids(family: str | None = None) -> list[EquationId]:
    """Ids in listing order: family 4, family 5, then named by example number."""
    ids: list[EquationId] = []
    if family in (None, "4"):
        ids.extend(EquationId(family="4", index=j) for j in range(1, len(FAMILY_4) + 1))
    if family in (None, "5"):
        ids.extend(EquationId(family="5", index=j) for j in range(1, len(FAMILY_5) + 1))
    if family in (None, "named"):
        ids.extend(
            EquationId(family="named", name=name)
            for name in sorted(NAMED, key=lambda n: NAMED[n][0])
        )
    return ids
