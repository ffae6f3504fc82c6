import os

import pytest

from quasieq.application.branches import catalog
from quasieq.application.hyperidentity import Algebra, check_hyperidentity, represent_hyperalgebra
from quasieq.application.solver import Interpretation, verify_equation
from quasieq.domain.exceptions import OrderBoundError, OrderMismatchError, PreconditionError
from quasieq.domain.models import AlgebraFile
from quasieq.infrastructure.cayley import OperationTable, cyclic_group, linear_quasigroup
from quasieq.infrastructure.table_files import load_algebra_file

FIXTURES_DIR = os.path.join(os.path.dirname(__file__), "fixtures", "tables")


@pytest.fixture()
def algebra_z5() -> Algebra:
    return Algebra.from_file(load_algebra_file(os.path.join(FIXTURES_DIR, "algebra_z5.json")))


def _affine_z3(coefficient: int) -> Algebra:
    """(Z3; coefficient*x + coefficient*y + c) for every constant c."""
    g = cyclic_group(3)
    scale = tuple((coefficient * v) % 3 for v in range(3))
    return Algebra(3, tuple(linear_quasigroup(g, scale, c, scale) for c in range(3)))


class TestAlgebra:
    def test_from_file_should_accept_non_latin_operations(self) -> None:
        payload = AlgebraFile(order=2, operations=[[[0, 1], [0, 1]]])

        algebra = Algebra.from_file(payload)

        assert algebra.operations[0](1, 0) == 0

    def test_operations_of_wrong_order_should_raise(self) -> None:
        with pytest.raises(OrderMismatchError):
            Algebra(2, (OperationTable([[0]]),))


class TestCheckHyperidentity:
    def test_linear_algebra_over_z5_should_satisfy_medial_pair(self, algebra_z5) -> None:
        check = check_hyperidentity(algebra_z5, "4.1")

        assert check.holds
        assert check.counterexample is None

    def test_doubled_affine_algebra_should_satisfy_medial_pair(self) -> None:
        assert check_hyperidentity(_affine_z3(2), "4.1").holds

    def test_translated_sum_algebra_should_fail_medial_pair(self) -> None:
        check = check_hyperidentity(_affine_z3(1), "4.1")

        assert not check.holds
        assert check.counterexample is not None
        assert check.counterexample.substitution is not None

    def test_counterexample_should_reproduce_under_its_substitution(self, algebra_z5) -> None:
        # Arrange
        rows = algebra_z5.operations[0].to_rows()
        rows[0][0] = 1
        perturbed = Algebra(5, (OperationTable(rows), *algebra_z5.operations[1:]))

        # Act
        check = check_hyperidentity(perturbed, "4.1")

        # Assert
        assert not check.holds
        counterexample = check.counterexample
        assert counterexample is not None and counterexample.substitution is not None
        tables = {s: perturbed.operations[k] for s, k in counterexample.substitution.items()}
        replay = verify_equation(Interpretation(5, tables), catalog("4.1"))
        assert replay.counterexample == counterexample.model_copy(update={"substitution": None})

    def test_trivial_algebra_should_satisfy_every_equation(self) -> None:
        trivial = Algebra(1, (OperationTable([[0]]),))

        assert check_hyperidentity(trivial, "5.23").holds

    def test_empty_algebra_should_raise(self) -> None:
        with pytest.raises(PreconditionError):
            check_hyperidentity(Algebra(3, ()), "4.1")


class TestRepresentHyperalgebra:
    def test_linear_algebra_over_z5_should_be_represented(self, algebra_z5) -> None:
        # Act
        representation = represent_hyperalgebra(algebra_z5, "4.1")

        # Assert
        assert representation is not None
        assert representation.group.spec == "Z5"
        assert [op.c for op in representation.operations] == [0, 0, 0]
        assert representation.compatible_pairs == [(0, 1), (0, 2), (1, 2)]

    def test_doubled_affine_algebra_should_keep_its_constants(self) -> None:
        representation = represent_hyperalgebra(_affine_z3(2), "4.1")

        assert representation is not None
        assert [op.c for op in representation.operations] == [0, 1, 2]
        assert all(op.alpha == [0, 2, 1] for op in representation.operations)

    def test_incompatible_constants_should_not_be_represented(self) -> None:
        assert represent_hyperalgebra(_affine_z3(1), "4.1") is None

    def test_trivial_algebra_should_have_no_pairs(self) -> None:
        representation = represent_hyperalgebra(Algebra(1, (OperationTable([[0]]),)), "4.1")

        assert representation is not None
        assert representation.compatible_pairs == []

    def test_order_above_bound_should_raise(self) -> None:
        algebra = Algebra(7, (cyclic_group(7).table,))

        with pytest.raises(OrderBoundError):
            represent_hyperalgebra(algebra, "4.1")
