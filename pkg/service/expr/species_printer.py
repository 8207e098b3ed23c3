from dto.enums.restriction_kind import RestrictionKind
from dto.species_ast import (Application, Atom, CatalogName, Composition, Difference, Literal, Negation,
                             Product, Restriction, SpeciesAst, Sum)

_SYMBOLS = {Sum: '+', Difference: '-', Product: '*', Composition: 'o'}


class SpeciesPrinter:
    """Renders an AST back to the expression grammar with every binary node parenthesized."""

    @classmethod
    def to_text(cls, ast: SpeciesAst) -> str:
        if isinstance(ast, (Atom, CatalogName)):
            return ast.name
        if isinstance(ast, Literal):
            v = ast.value
            return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        if isinstance(ast, Negation):
            return f"-{cls.to_text(ast.operand)}"
        if isinstance(ast, Restriction):
            operand = cls.to_text(ast.operand)
            if isinstance(ast.operand, Negation):
                operand = f"({operand})"
            bound = f">={ast.n}" if ast.kind == RestrictionKind.AT_LEAST else str(ast.n)
            return f"{operand}[{bound}]"
        if isinstance(ast, Application):
            return f"{ast.head.name}({', '.join(cls.to_text(a) for a in ast.args)})"
        if type(ast) in _SYMBOLS:
            left = ast.outer if isinstance(ast, Composition) else ast.left
            right = ast.inner if isinstance(ast, Composition) else ast.right
            return f"({cls.to_text(left)} {_SYMBOLS[type(ast)]} {cls.to_text(right)})"
        raise TypeError(f"Not a species expression node: {ast!r}")
