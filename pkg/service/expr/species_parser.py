import re
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from dto.enums.atom_name import AtomName
from dto.enums.restriction_kind import RestrictionKind
from dto.exceptions import SpeciesSyntaxError
from dto.species_ast import (Application, Atom, CatalogName, Composition, Difference, Literal, Negation,
                             Product, Restriction, SpeciesAst, Sum)
from service.expr.species_tokenizer import END, IDENT, NUMBER, OPERATOR, Token, tokenize

_PARAMETRIZED = {'E': AtomName.E_N, 'Cyc': AtomName.CYC_N, 'Dih': AtomName.DIH_N}
_PARAM_RE = re.compile(r"^(E|Cyc|Dih)_(\d+)$")
_PLAIN_ATOMS = {a.value: a for a in AtomName if a not in _PARAMETRIZED.values() and not a.value.isdigit()}


def atom_parts(identifier: str) -> Optional[Tuple[AtomName, Optional[int]]]:
    """(atom, parameter) for an atom identifier, None for any other name."""
    if identifier in _PLAIN_ATOMS:
        return _PLAIN_ATOMS[identifier], None
    match = _PARAM_RE.match(identifier)
    if match:
        return _PARAMETRIZED[match.group(1)], int(match.group(2))
    return None


class SpeciesParser:
    """Pratt parser for species expressions.

    Binding, loosest first: `+ -`, `*`, `o` (right-associative), unary `-`,
    postfix `[n]` / `[>=n]`, application `F(a, b)`, parentheses.
    """

    SUM_BP = 10
    PRODUCT_BP = 20
    COMPOSE_BP = 30
    PREFIX_BP = 40
    POSTFIX_BP = 50

    INFIX: Dict[str, Tuple[int, Callable]] = {
        '+': (SUM_BP, Sum),
        '-': (SUM_BP, Difference),
        '*': (PRODUCT_BP, Product),
        'o': (COMPOSE_BP, Composition),
    }

    def __init__(self, text: str):
        self.text = text
        self.tokens: List[Token] = tokenize(text)
        self.index = 0

    @classmethod
    def parse(cls, text: str) -> SpeciesAst:
        parser = cls(text)
        ast = parser.expression(0)
        token = parser.peek()
        if token.kind != END:
            raise SpeciesSyntaxError(f"Unexpected {token.text!r}", token.position)
        return ast

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, text: str) -> Token:
        token = self.advance()
        if token.text != text or token.kind == END:
            found = 'end of input' if token.kind == END else repr(token.text)
            raise SpeciesSyntaxError(f"Expected {text!r}, found {found}", token.position)
        return token

    def left_bp(self, token: Token) -> int:
        if token.kind != OPERATOR:
            return 0
        if token.text in self.INFIX:
            return self.INFIX[token.text][0]
        if token.text == '[':
            return self.POSTFIX_BP
        return 0

    def expression(self, rbp: int) -> SpeciesAst:
        left = self.prefix(self.advance())
        while self.left_bp(self.peek()) > rbp:
            token = self.advance()
            if token.text == '[':
                left = self.restriction(left)
                continue
            bp, node = self.INFIX[token.text]
            # composition is right-associative
            right = self.expression(bp - 1 if token.text == 'o' else bp)
            left = node(left, right)
        return left

    def prefix(self, token: Token) -> SpeciesAst:
        if token.kind == NUMBER:
            return Literal(self.literal(token))
        if token.kind == IDENT:
            head = Atom(token.text) if atom_parts(token.text) else CatalogName(token.text)
            if self.peek().text == '(' and self.peek().kind == OPERATOR:
                return self.application(head)
            return head
        if token.text == '-' and token.kind == OPERATOR:
            return Negation(self.expression(self.PREFIX_BP))
        if token.text == '(' and token.kind == OPERATOR:
            inner = self.expression(0)
            self.expect(')')
            return inner
        found = 'end of input' if token.kind == END else repr(token.text)
        raise SpeciesSyntaxError(f"Unexpected {found}", token.position)

    def literal(self, token: Token) -> Fraction:
        num, _, den = token.text.partition('/')
        if den and int(den) == 0:
            raise SpeciesSyntaxError("Zero denominator", token.position)
        return Fraction(int(num), int(den) if den else 1)

    def application(self, head) -> Application:
        self.expect('(')
        args = [self.expression(0)]
        while self.peek().text == ',':
            self.advance()
            args.append(self.expression(0))
        self.expect(')')
        return Application(head, tuple(args))

    def restriction(self, operand: SpeciesAst) -> Restriction:
        kind = RestrictionKind.EXACTLY
        if self.peek().text == '>=':
            self.advance()
            kind = RestrictionKind.AT_LEAST
        token = self.advance()
        if token.kind != NUMBER or '/' in token.text:
            raise SpeciesSyntaxError("Restriction bound must be a nonnegative integer", token.position)
        self.expect(']')
        return Restriction(operand, kind, int(token.text))
