import pytest

from quasieq.domain.catalog import FAMILY_4, FAMILY_5, NAMED
from quasieq.domain.exceptions import ArityError, EquationSyntaxError, NotFunctionalEquationError
from quasieq.domain.terms import App, Var
from quasieq.infrastructure.equation_parser import format_equation, parse_equation, parse_term


class TestParseEquation:
    def test_parse_should_build_nested_applications(self) -> None:
        equation = parse_equation("f(f(x,y),z)=f(x,f(y,z))")

        assert equation.lhs == App("f", App("f", Var("x"), Var("y")), Var("z"))
        assert equation.rhs == App("f", Var("x"), App("f", Var("y"), Var("z")))

    def test_parse_should_ignore_whitespace_and_case(self) -> None:
        equation = parse_equation("  F( X , Y ) = f(y,x) ")

        assert format_equation(equation) == "f(x,y)=f(y,x)"

    @pytest.mark.parametrize("text", [*FAMILY_4, *FAMILY_5, *(t for _, t in NAMED.values())])
    def test_print_should_invert_parse_for_catalog_text(self, text: str) -> None:
        assert format_equation(parse_equation(text)) == text

    def test_parse_should_accept_a_bare_variable_side(self) -> None:
        equation = parse_equation("f(x,x)=x")

        assert equation.rhs == Var("x")


class TestParseErrors:
    def test_truncated_input_should_report_offset_of_end(self) -> None:
        with pytest.raises(EquationSyntaxError) as exc_info:
            parse_equation("f(x,")

        assert exc_info.value.position == 4
        assert "offset 4" in str(exc_info.value)

    def test_unexpected_character_should_report_its_offset(self) -> None:
        with pytest.raises(EquationSyntaxError) as exc_info:
            parse_equation("f(x,y)=f(y,x)!")

        assert exc_info.value.position == 13

    def test_missing_equals_should_raise(self) -> None:
        with pytest.raises(EquationSyntaxError):
            parse_equation("f(x,y)")

    @pytest.mark.parametrize("text", ["f(x)=x", "f(x,y,z)=f(x,y,z)"])
    def test_wrong_arity_should_raise_arity_error(self, text: str) -> None:
        with pytest.raises(ArityError):
            parse_equation(text)

    def test_arity_error_should_be_a_syntax_error(self) -> None:
        with pytest.raises(EquationSyntaxError):
            parse_equation("g(x)=x")

    def test_variable_only_equation_should_raise(self) -> None:
        with pytest.raises(NotFunctionalEquationError):
            parse_equation("x=y")

    def test_identifier_used_as_variable_and_symbol_should_raise(self) -> None:
        with pytest.raises(EquationSyntaxError) as exc_info:
            parse_equation("f(f(x,y),y)=f")

        assert exc_info.value.position == 12

    def test_role_clash_should_point_at_the_token_not_a_substring(self) -> None:
        # "f" first appears inside the variable "xf"
        with pytest.raises(EquationSyntaxError) as exc_info:
            parse_equation("g(xf,f)=f(xf,xf)")

        assert exc_info.value.position == 8


class TestParseTerm:
    def test_parse_term_should_return_application(self) -> None:
        assert parse_term("f1(x, f2(y,z))") == App("f1", Var("x"), App("f2", Var("y"), Var("z")))

    def test_parse_term_should_reject_trailing_input(self) -> None:
        with pytest.raises(EquationSyntaxError):
            parse_term("f(x,y)=x")
