import numpy as np
import pytest

from quasieq.application.branches import catalog
from quasieq.application.solver import (
    Interpretation,
    assignment_grid,
    condition_holds,
    evaluate,
    exhaustive_search,
    gemini_models,
    gemini_refute,
    synthesize,
    verify_equation,
    word_map,
)
from quasieq.domain.catalog import all_ids
from quasieq.domain.exceptions import (
    AbelianRequirementError,
    OrderBoundError,
    OrderMismatchError,
    PreconditionError,
    UnassignedSymbolError,
    UnsupportedEquationError,
)
from quasieq.domain.models import Annihilate, LinearEq, Sandwich
from quasieq.infrastructure.cayley import OperationTable, cyclic_group, group_structures, relabel
from quasieq.infrastructure.equation_parser import parse_equation, parse_term
from quasieq.infrastructure.steiner_loop import steiner_loop_10

Z5_TIMES_2 = (0, 2, 4, 1, 3)
Z5_TIMES_3 = (0, 3, 1, 4, 2)
Z5_ID = (0, 1, 2, 3, 4)


class TestEvaluation:
    def test_assignment_grid_should_enumerate_lexicographically(self) -> None:
        grid = assignment_grid(2, 2)

        assert grid.T.tolist() == [[0, 0], [0, 1], [1, 0], [1, 1]]

    def test_evaluate_should_broadcast_over_batched_tables(self, z5_sum) -> None:
        # Arrange
        term = parse_term("f(x,y)")
        env = {"x": np.array([1]), "y": np.array([2])}
        batch = np.stack([z5_sum.table, z5_sum.dual().table, np.zeros((5, 5), dtype=np.int64)])

        # Act
        result = evaluate(term, {"f": batch}, env)

        # Assert
        assert result.tolist() == [[3], [3], [0]]


class TestVerifyEquation:
    def test_medial_pair_over_z5_should_hold(self, z5_2x3y, z5_sum) -> None:
        interpretation = Interpretation(5, {"f1": z5_2x3y, "f2": z5_sum})

        assert verify_equation(interpretation, catalog("4.1")).holds

    @pytest.mark.parametrize("eid", [str(i) for i in all_ids("4") + all_ids("5")])
    def test_xor_should_satisfy_every_catalog_equation(self, eid: str) -> None:
        xor = OperationTable([[0, 1], [1, 0]])

        assert verify_equation(Interpretation(2, {"f1": xor, "f2": xor}), catalog(eid)).holds

    def test_sloop10_should_violate_mediality_of_pair(self) -> None:
        loop = steiner_loop_10().table

        check = verify_equation(Interpretation(10, {"f1": loop, "f2": loop}), catalog("4.1"))

        assert not check.holds
        assert check.counterexample is not None
        assert check.counterexample.lhs_value != check.counterexample.rhs_value

    def test_counterexample_should_be_lexicographically_first(self) -> None:
        # Arrange
        right_projection = OperationTable([[0, 1], [0, 1]])

        # Act
        check = verify_equation(Interpretation(2, {"f": right_projection}), catalog("commutativity"))

        # Assert
        assert check.counterexample is not None
        assert check.counterexample.assignment == {"x": 0, "y": 1}
        assert (check.counterexample.lhs_value, check.counterexample.rhs_value) == (1, 0)

    def test_missing_symbol_should_raise(self, z5_sum) -> None:
        with pytest.raises(UnassignedSymbolError):
            verify_equation(Interpretation(5, {"f1": z5_sum}), catalog("4.1"))

    def test_tables_of_different_orders_should_raise(self, z5_sum) -> None:
        with pytest.raises(OrderMismatchError):
            Interpretation(5, {"f1": z5_sum, "f2": OperationTable([[0]])})

    def test_record_should_serialize_tables_by_symbol(self, z5_sum) -> None:
        record = Interpretation.of({"f1": z5_sum}).to_record()

        assert record.order == 5
        assert record.tables["f1"][1] == [1, 2, 3, 4, 0]


class TestConditionChecks:
    def test_word_map_should_apply_rightmost_symbol_first(self, z5) -> None:
        maps = {"alpha1": np.array(Z5_TIMES_2), "beta1": np.array(Z5_TIMES_3)}

        # alpha1(beta1(1)) = 2 * 3 = 1
        assert word_map(("alpha1", "beta1"), maps, 5)[1] == 1

    def test_linear_eq_should_compare_compositions(self, z5) -> None:
        maps = {"alpha1": np.array(Z5_TIMES_2), "beta1": np.array(Z5_TIMES_3)}
        condition = LinearEq(lhs=("alpha1", "beta1"), rhs=("beta1", "alpha1"))

        assert condition_holds(condition, z5, maps)

    def test_annihilate_should_require_inverse_maps(self, z5) -> None:
        maps = {"alpha1": np.array(Z5_ID), "beta1": np.array((0, 4, 3, 2, 1))}

        assert condition_holds(Annihilate(w1=("alpha1",), w2=("beta1",)), z5, maps)
        assert not condition_holds(Annihilate(w1=("alpha1",), w2=("alpha1",)), z5, maps)

    def test_sandwich_should_use_selected_constant(self, z5) -> None:
        maps = {"alpha1": np.array(Z5_ID), "beta1": np.array((0, 4, 3, 2, 1))}
        condition = Sandwich(w1=("alpha1",), constant_index=2, w2=("beta1",))

        assert condition_holds(condition, z5, maps, constants={1: 0, 2: 3})


class TestSynthesize:
    def test_medial_pair_over_z5_should_include_known_solution(self, z5) -> None:
        # Act
        pairs = synthesize("4.1", z5)

        # Assert
        params = {
            (tuple(p.ops[0].alpha), tuple(p.ops[0].beta), p.ops[0].c, tuple(p.ops[1].alpha), tuple(p.ops[1].beta), p.ops[1].c)
            for p in pairs
        }
        assert (Z5_TIMES_2, Z5_TIMES_3, 0, Z5_ID, Z5_ID, 0) in params
        assert all(p.verified for p in pairs)

    def test_synthesis_order_should_be_deterministic(self, z5) -> None:
        first = [p.table_key() for p in synthesize("4.1", z5, limit=5)]

        assert first == [p.table_key() for p in synthesize("4.1", z5, limit=5)]
        assert len(first) == 5

    def test_trivial_group_should_yield_exactly_one_pair(self) -> None:
        pairs = synthesize("4.1", cyclic_group(1))

        assert len(pairs) == 1
        assert pairs[0].ops[0].table == [[0]]

    def test_non_abelian_group_should_be_rejected_for_abelian_theory(self, s3) -> None:
        with pytest.raises(AbelianRequirementError):
            synthesize("4.1", s3)

    def test_sandwich_conditions_should_exclude_non_abelian_groups(self, s3) -> None:
        assert synthesize("5.10", s3) == []
        assert synthesize("5.23", s3) == []

    def test_odd_twist_should_reverse_second_operation(self, z2xz2) -> None:
        pairs = synthesize("5.23", z2xz2, limit=3)

        assert pairs
        assert all(p.ops[1].reversed and not p.ops[0].reversed for p in pairs)

    def test_exponent_two_family_should_have_no_solutions_over_z5(self, z5) -> None:
        assert synthesize("5.1", z5) == []

    def test_unsupported_equation_should_raise(self, z5) -> None:
        with pytest.raises(UnsupportedEquationError):
            synthesize("associativity", z5)

    def test_named_equation_should_synthesize_single_operation(self, z5) -> None:
        pairs = synthesize("mediality", z5, limit=2)

        assert [len(p.ops) for p in pairs] == [1, 1]

    def test_relabelled_group_should_produce_verified_tables(self) -> None:
        g = relabel(cyclic_group(3), (1, 2, 0))

        pairs = synthesize("4.2", g, limit=4)

        assert len(pairs) == 4
        assert all(p.verified and p.group.identity == 1 for p in pairs)


class TestExhaustiveSearch:
    def test_order_one_should_yield_single_interpretation(self) -> None:
        result = exhaustive_search("4.1", 1)

        assert len(result) == 1
        assert result[0].tables["f1"].to_rows() == [[0]]

    def test_order_above_bound_should_raise(self) -> None:
        with pytest.raises(OrderBoundError):
            exhaustive_search("4.1", 5)

    def test_bound_should_follow_settings(self, monkeypatch) -> None:
        monkeypatch.setenv("QUASIEQ_EXHAUSTIVE_MAX_ORDER", "2")

        with pytest.raises(OrderBoundError):
            exhaustive_search("4.1", 3)

    def test_order_three_solutions_should_match_synthesis(self) -> None:
        # Arrange
        expected = {
            p.table_key() for g in group_structures(3) for p in synthesize("4.1", g)
        }

        # Act
        found = {
            tuple(i.tables[s].key() for s in ("f1", "f2")) for i in exhaustive_search("4.1", 3)
        }

        # Assert
        assert found == expected

    def test_duality_should_transport_order_three_solutions(self) -> None:
        source = {
            (i.tables["f1"].key(), i.tables["f2"].dual().key()) for i in exhaustive_search("5.3", 3)
        }
        target = {(i.tables["f1"].key(), i.tables["f2"].key()) for i in exhaustive_search("5.25", 3)}

        assert source == target


class TestGemini:
    @pytest.mark.parametrize("name", ["commutativity", "trivial", "4-palindromic", "eq13"])
    def test_gemini_equations_should_stay_unknown(self, name: str) -> None:
        assert gemini_refute(catalog(name)).verdict == "GeminiUnknown"

    def test_mediality_should_be_refuted_by_order_ten_loop(self) -> None:
        verdict = gemini_refute(catalog("mediality"))

        assert verdict.verdict == "NonGemini"
        assert verdict.model == "sloop10"
        assert verdict.counterexample is not None

    def test_refutation_should_agree_with_verification(self) -> None:
        equation = catalog("5.10")

        verdict = gemini_refute(equation)

        model = next(m for m in gemini_models() if m.name == verdict.model)
        interpretation = Interpretation(model.order, {"f1": model.table, "f2": model.table})
        assert not verify_equation(interpretation, equation).holds

    def test_non_quadratic_equation_should_raise(self) -> None:
        with pytest.raises(PreconditionError):
            gemini_refute(parse_equation("f(x,x)=x"))

    def test_bank_should_try_boolean_groups_first(self) -> None:
        assert [m.name for m in gemini_models()] == ["Z2", "Z2xZ2", "Z2xZ2xZ2", "sloop10"]
