"""Recursive-descent parser and printer for equation text."""

import re
from dataclasses import dataclass

from quasieq.domain.exceptions import ArityError, EquationSyntaxError
from quasieq.domain.terms import App, Equation, Term, Var
from quasieq.logging_config import get_logger

logger = get_logger(__name__)

_TOKEN_RE = re.compile(r"\s*(?:(?P<ident>[A-Za-z0-9]+)|(?P<punct>[(),=])|(?P<bad>\S))")


@dataclass(frozen=True)
class _Token:
    kind: str  # "ident", "(", ")", ",", "=", "end"
    text: str
    position: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    for match in _TOKEN_RE.finditer(text):
        if match.group("ident") is not None:
            tokens.append(_Token("ident", match.group("ident").lower(), match.start("ident")))
        elif match.group("punct") is not None:
            tokens.append(_Token(match.group("punct"), match.group("punct"), match.start("punct")))
        elif match.group("bad") is not None:
            raise EquationSyntaxError(f"unexpected character {match.group('bad')!r}", match.start("bad"))
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive-descent parser over the token list."""

    def __init__(self, tokens: list[_Token]) -> None:
        self._tokens = tokens
        self._pos = 0
        # first offset of each identifier in each role
        self.variable_offsets: dict[str, int] = {}
        self.symbol_offsets: dict[str, int] = {}

    @property
    def _peek(self) -> _Token:
        return self._tokens[self._pos]

    def _advance(self) -> _Token:
        token = self._tokens[self._pos]
        if token.kind != "end":
            self._pos += 1
        return token

    def expect(self, kind: str) -> _Token:
        token = self._peek
        if token.kind != kind:
            found = "end of input" if token.kind == "end" else repr(token.text)
            raise EquationSyntaxError(f"expected {kind!r}, found {found}", token.position)
        return self._advance()

    def equation(self) -> Equation:
        lhs = self.term()
        self.expect("=")
        rhs = self.term()
        self.expect("end")
        return Equation(lhs, rhs)

    def term(self) -> Term:
        token = self._peek
        if token.kind != "ident":
            found = "end of input" if token.kind == "end" else repr(token.text)
            raise EquationSyntaxError(f"expected a term, found {found}", token.position)
        self._advance()
        if self._peek.kind != "(":
            self.variable_offsets.setdefault(token.text, token.position)
            return Var(token.text)
        self.symbol_offsets.setdefault(token.text, token.position)
        self._advance()
        args = [self.term()]
        while self._peek.kind == ",":
            self._advance()
            args.append(self.term())
        self.expect(")")
        if len(args) != 2:
            raise ArityError(
                f"operation {token.text!r} applied to {len(args)} arguments, expected 2",
                token.position,
            )
        return App(token.text, args[0], args[1])


def parse_equation(text: str) -> Equation:
    """Parse ``term "=" term`` where term ::= var | op "(" term "," term ")".

    Identifiers are alphanumeric and case-insensitive (normalised to lowercase);
    whitespace is ignored.  Raises ``EquationSyntaxError`` (with the character
    offset), ``ArityError`` or ``NotFunctionalEquationError``.  An identifier used
    both as variable and operation symbol is reported at its first use in the
    later of the two roles.
    """
    parser = _Parser(_tokenize(text))
    equation = parser.equation()
    clash = sorted(parser.variable_offsets.keys() & parser.symbol_offsets.keys())
    if clash:
        name = clash[0]
        raise EquationSyntaxError(
            f"identifier {name!r} used both as variable and operation symbol",
            max(parser.variable_offsets[name], parser.symbol_offsets[name]),
        )
    logger.debug("equation_parsed", equation=str(equation))
    return equation


def parse_term(text: str) -> Term:
    """Parse a single term (no ``=``)."""
    parser = _Parser(_tokenize(text))
    term = parser.term()
    parser.expect("end")
    return term


def format_equation(equation: Equation) -> str:
    """Canonical printing: no whitespace, lowercase identifiers."""
    return str(equation)
