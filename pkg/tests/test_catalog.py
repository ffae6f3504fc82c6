import pytest

from quasieq.application.branches import catalog
from quasieq.application.classifier import is_balanced, is_quadratic
from quasieq.domain.catalog import (
    DUAL_TARGETS,
    FAMILY_4,
    FAMILY_5,
    NAMED,
    all_ids,
    parse_equation_id,
)
from quasieq.domain.exceptions import UnknownEquationError
from quasieq.domain.models import EquationId


class TestEquationIds:
    def test_parse_should_accept_family_notation(self) -> None:
        assert parse_equation_id("5.23") == EquationId(family="5", index=23)

    def test_parse_should_accept_names_case_insensitively(self) -> None:
        assert parse_equation_id(" Mediality ") == EquationId(family="named", name="mediality")

    @pytest.mark.parametrize("text", ["4.17", "5.0", "6.1", "4", "median", ""])
    def test_parse_should_reject_unknown_ids(self, text: str) -> None:
        with pytest.raises(UnknownEquationError):
            parse_equation_id(text)

    def test_equation_id_should_print_in_source_notation(self) -> None:
        assert str(EquationId(family="4", index=1)) == "4.1"
        assert str(EquationId(family="named", name="eq13")) == "eq13"

    def test_equation_id_should_validate_index_range(self) -> None:
        with pytest.raises(ValueError):
            EquationId(family="4", index=17)


class TestCatalogContents:
    def test_families_should_have_16_and_32_entries(self) -> None:
        assert len(FAMILY_4) == 16
        assert len(FAMILY_5) == 32
        assert len(set(FAMILY_4) | set(FAMILY_5)) == 48

    def test_all_ids_should_list_families_then_named_by_number(self) -> None:
        ids = all_ids()

        assert len(ids) == 48 + len(NAMED)
        assert str(ids[0]) == "4.1"
        assert str(ids[16]) == "5.1"
        assert [str(i) for i in ids[48:50]] == ["commutativity", "associativity"]

    def test_all_ids_should_filter_by_family(self) -> None:
        assert [str(i) for i in all_ids("4")][-1] == "4.16"
        assert len(all_ids("named")) == 12

    @pytest.mark.parametrize("eid", [str(i) for i in all_ids("4")])
    def test_family_4_should_be_balanced(self, eid: str) -> None:
        assert is_balanced(catalog(eid))

    @pytest.mark.parametrize("eid", [str(i) for i in all_ids("5")])
    def test_family_5_should_be_quadratic_but_not_balanced(self, eid: str) -> None:
        equation = catalog(eid)
        assert is_quadratic(equation)
        assert not is_balanced(equation)

    def test_duality_pairing_should_cover_sixteen_sources(self) -> None:
        assert len(DUAL_TARGETS) == 16
        assert len(set(DUAL_TARGETS.values())) == 16
        assert DUAL_TARGETS[23] == 10
