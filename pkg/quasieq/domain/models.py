"""Pydantic request and response models shared across the package."""

from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

# --- Shared aliases ---

BranchWord = tuple[str, ...]
Permutation = tuple[int, ...]
Rows = list[list[int]]

VarKind = Literal["linear", "left-quadratic", "right-quadratic", "other"]
EquationFamily = Literal["4", "5", "named"]
ShapeName = Literal["K33", "Prism", "Other"]


# --- Equation classification ---


class VarProfile(BaseModel):
    """Occurrence profile of one object variable in an equation."""

    variable: str
    total_occurrences: int
    lhs_occurrences: int
    rhs_occurrences: int
    kind: VarKind


class EquationId(BaseModel):
    """Identifies a catalog equation: ``4.j``, ``5.j`` or a named classic."""

    model_config = ConfigDict(frozen=True)

    family: EquationFamily
    index: int | None = None
    name: str | None = None

    @model_validator(mode="after")
    def validate_index_range(self) -> "EquationId":
        """Family entries carry an index in range; named entries carry a name."""
        if self.family == "named":
            if not self.name:
                msg = "named equation ids need a name"
                raise ValueError(msg)
            return self
        upper = 16 if self.family == "4" else 32
        if self.index is None or not 1 <= self.index <= upper:
            msg = f"family {self.family} index must lie in [1,{upper}]"
            raise ValueError(msg)
        return self

    def __str__(self) -> str:
        if self.family == "named":
            return str(self.name)
        return f"{self.family}.{self.index}"


class CatalogEntry(BaseModel):
    """One line of ``catalog`` output."""

    id: str
    number: int | None = None
    equation: str


# --- Conditions ---


class _ConditionBase(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)


class LinearEq(_ConditionBase):
    """Lbranch(z) = Rbranch(z) as automorphism compositions."""

    kind: Literal["LinearEq"] = "LinearEq"
    lhs: BranchWord
    rhs: BranchWord


class Annihilate(_ConditionBase):
    """w1(x) + w2(x) = 0 for all x."""

    kind: Literal["Annihilate"] = "Annihilate"
    w1: BranchWord
    w2: BranchWord


class Sandwich(_ConditionBase):
    """w1(x) + c_i + w2(x) = c_i for all x."""

    kind: Literal["Sandwich"] = "Sandwich"
    w1: BranchWord
    constant_index: int = Field(alias="constantIndex", ge=1, le=2)
    w2: BranchWord


class ConstCompat(_ConditionBase):
    """f1(c2,c2) = f2(c1,c1)."""

    kind: Literal["ConstCompat"] = "ConstCompat"


class GroupAbelian(_ConditionBase):
    kind: Literal["GroupAbelian"] = "GroupAbelian"


class GroupArbitrary(_ConditionBase):
    kind: Literal["GroupArbitrary"] = "GroupArbitrary"


class DualTwist(_ConditionBase):
    """Operation ``op_index`` is written under the sum-reversal operator raised to ``parity``."""

    kind: Literal["DualTwist"] = "DualTwist"
    op_index: int = Field(alias="opIndex", ge=1, le=2)
    parity: Literal["even", "odd"]


Condition = Annotated[
    LinearEq | Annihilate | Sandwich | ConstCompat | GroupAbelian | GroupArbitrary | DualTwist,
    Field(discriminator="kind"),
]


class ConditionList(BaseModel):
    """Serialization wrapper for a condition sequence."""

    id: str
    conditions: list[Condition]


# --- Krstic graphs ---


class GraphEdge(BaseModel):
    u: str
    v: str
    label: str


class GraphExport(BaseModel):
    """JSON form of a Krstic graph together with its classification."""

    model_config = ConfigDict(populate_by_name=True)

    vertices: list[str]
    edges: list[GraphEdge]
    three_connected: bool = Field(alias="threeConnected")
    shape: ShapeName
    certificate: list[list[int]] | None = None


# --- Semantic results ---


class Counterexample(BaseModel):
    """First violating assignment found by a brute-force scan."""

    assignment: dict[str, int]
    lhs_value: int
    rhs_value: int
    substitution: dict[str, int] | None = Field(
        default=None,
        description="Hyperidentity checks only: operation symbol -> index into the algebra.",
    )


class EquationCheck(BaseModel):
    holds: bool
    counterexample: Counterexample | None = None


class GeminiVerdict(BaseModel):
    """Outcome of refuting gemini status against the model bank."""

    verdict: Literal["NonGemini", "GeminiUnknown"]
    model: str | None = None
    counterexample: Counterexample | None = None


class ClassificationReport(BaseModel):
    """Output of ``classify``: syntactic classes plus the gemini semi-decision."""

    equation: str
    quadratic: bool
    balanced: bool
    belousov: bool | None = None
    level: bool | None = None
    gemini_verdict: GeminiVerdict | None = None
    variables: list[VarProfile] = []


class GroupDescriptor(BaseModel):
    spec: str
    identity: int
    table: Rows


class OperationParams(BaseModel):
    """Linear parameters of one operation plus the table they induce."""

    alpha: list[int]
    c: int
    beta: list[int]
    reversed: bool = False
    table: Rows


class SolutionPair(BaseModel):
    """A synthesized (f1, f2) over a concrete group."""

    group: GroupDescriptor
    ops: list[OperationParams]
    verified: bool

    def table_key(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        """Hashable form of the induced tables, in operation order."""
        return tuple(tuple(tuple(row) for row in op.table) for op in self.ops)


class OperationCertificate(BaseModel):
    alpha: list[int]
    c: int
    beta: list[int]
    reversed: bool = False


class LinearCertificate(BaseModel):
    """Group structure and parameters reproducing a pair of tables."""

    group: GroupDescriptor
    ops: list[OperationCertificate]

    @property
    def abelian(self) -> bool:
        rows = self.group.table
        return all(rows[a][b] == rows[b][a] for a in range(len(rows)) for b in range(a))


class InterpretationRecord(BaseModel):
    """JSON form of an interpretation (symbol -> table)."""

    order: int
    tables: dict[str, Rows]
    certificate: LinearCertificate | None = None


class HyperidentityCheck(BaseModel):
    id: str
    holds: bool
    counterexample: Counterexample | None = None


class HyperalgebraRepresentation(BaseModel):
    """One shared Abelian group and per-operation linear parameters."""

    group: GroupDescriptor
    operations: list[OperationCertificate]
    compatible_pairs: list[tuple[int, int]] = Field(
        default_factory=list,
        description="Pairs (l, k) for which f_l(c_k,c_k) = f_k(c_l,c_l) was checked.",
    )


class HyperReport(BaseModel):
    """Output of ``hyper``: the hyperidentity check and, on request, its representation."""

    check: HyperidentityCheck
    representation: HyperalgebraRepresentation | None = None


# --- Input files ---


def _check_square(order: int, table: Rows, label: str) -> None:
    if len(table) != order or any(len(row) != order for row in table):
        msg = f"{label} must be {order}x{order}"
        raise ValueError(msg)
    if any(not 0 <= cell < order for row in table for cell in row):
        msg = f"{label} entries must lie in [0,{order - 1}]"
        raise ValueError(msg)


class CayleyTableFile(BaseModel):
    """``{order, table}`` file for a single Cayley table."""

    order: int = Field(ge=1)
    table: Rows

    @model_validator(mode="after")
    def validate_shape(self) -> "CayleyTableFile":
        _check_square(self.order, self.table, "table")
        return self


class TablesFile(BaseModel):
    """``{order, tables}`` interpretation file; tables bind f1, f2, ... in order."""

    order: int = Field(ge=1)
    tables: list[Rows] = Field(min_length=1)

    @model_validator(mode="after")
    def validate_shapes(self) -> "TablesFile":
        for i, table in enumerate(self.tables, start=1):
            _check_square(self.order, table, f"tables[{i}]")
        return self


class AlgebraFile(BaseModel):
    """``{order, operations}`` file describing a finite binary algebra."""

    order: int = Field(ge=1)
    operations: list[Rows]

    @model_validator(mode="after")
    def validate_shapes(self) -> "AlgebraFile":
        for i, table in enumerate(self.operations, start=1):
            _check_square(self.order, table, f"operations[{i}]")
        return self
