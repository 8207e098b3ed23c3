import logging
from fractions import Fraction

from dto.atom_spec import AtomSpec
from dto.cycle_index import CycleIndex
from dto.enums.atom_name import AtomName
from dto.exceptions import SortMismatchError
from dto.species_ast import (Application, Atom, CatalogName, Composition, Difference, Literal, Negation,
                             Product, Restriction, SpeciesAst, Sum)
from service.catalog.species_catalog import SpeciesCatalog
from service.core.cycle_index_ring import CycleIndexRing
from service.expr.species_parser import SpeciesParser, atom_parts
from service.species.atom_factory import TWO_SORT_ATOMS, AtomFactory
from service.species.sort_operations import SortOperations

logger = logging.getLogger(__name__)


class SpeciesEvaluator:
    """Evaluates species expressions to cycle indices.

    The result lives in as many sorts as the expression needs: two when `Y` or a
    two-sort species is used as a value, one otherwise. One-sort values in a
    two-sort context sit in the X sort.
    """

    @classmethod
    def evaluate_text(cls, text: str, maxdeg: int) -> CycleIndex:
        return cls.evaluate(SpeciesParser.parse(text), maxdeg)

    @classmethod
    def evaluate(cls, ast: SpeciesAst, maxdeg: int) -> CycleIndex:
        if maxdeg < 0:
            raise ValueError(f"Truncation degree must be nonnegative, got {maxdeg}")
        return cls._eval(ast, cls.required_sorts(ast), maxdeg)

    @classmethod
    def identifier_sorts(cls, node) -> int:
        if isinstance(node, Atom):
            name, _ = atom_parts(node.name)
            return 2 if name in TWO_SORT_ATOMS or name == AtomName.Y else 1
        return SpeciesCatalog.entry(node.name).sorts

    @classmethod
    def required_sorts(cls, ast: SpeciesAst) -> int:
        if isinstance(ast, (Atom, CatalogName)):
            return cls.identifier_sorts(ast)
        if isinstance(ast, Literal):
            return 1
        if isinstance(ast, (Negation, Restriction)):
            return cls.required_sorts(ast.operand)
        if isinstance(ast, Composition):
            return cls.required_sorts(ast.inner)
        if isinstance(ast, Application):
            return max(cls.required_sorts(a) for a in ast.args)
        return max(cls.required_sorts(ast.left), cls.required_sorts(ast.right))

    @classmethod
    def _identifier(cls, node, sorts: int, maxdeg: int) -> CycleIndex:
        if isinstance(node, Atom):
            name, param = atom_parts(node.name)
            return AtomFactory.atom(AtomSpec(name, param, sort=0, sorts=sorts), maxdeg)
        f = SpeciesCatalog.species_ci(node.name, maxdeg)
        if f.sorts == sorts:
            return f
        if f.sorts == 1:
            return SortOperations.sort_inject(f, 0, sorts)
        raise SortMismatchError(f"{node.name} has {f.sorts} sorts, expected {sorts}")

    @classmethod
    def _eval(cls, ast: SpeciesAst, sorts: int, maxdeg: int) -> CycleIndex:
        if isinstance(ast, (Atom, CatalogName)):
            return cls._identifier(ast, sorts, maxdeg)
        if isinstance(ast, Literal):
            return CycleIndex.constant(ast.value, sorts, maxdeg)
        if isinstance(ast, Negation):
            return CycleIndexRing.scale(Fraction(-1), cls._eval(ast.operand, sorts, maxdeg))
        if isinstance(ast, Sum):
            return CycleIndexRing.add(cls._eval(ast.left, sorts, maxdeg), cls._eval(ast.right, sorts, maxdeg))
        if isinstance(ast, Difference):
            right = CycleIndexRing.scale(Fraction(-1), cls._eval(ast.right, sorts, maxdeg))
            return CycleIndexRing.add(cls._eval(ast.left, sorts, maxdeg), right)
        if isinstance(ast, Product):
            return CycleIndexRing.mul(cls._eval(ast.left, sorts, maxdeg), cls._eval(ast.right, sorts, maxdeg))
        if isinstance(ast, Restriction):
            return SortOperations.restrict(cls._eval(ast.operand, sorts, maxdeg), ast.kind, ast.n)
        if isinstance(ast, Composition):
            outer_sorts = cls.required_sorts(ast.outer)
            if outer_sorts != 1:
                raise SortMismatchError(f"The left side of 'o' must be a one-sort species, got {outer_sorts} sorts")
            outer = cls._eval(ast.outer, 1, maxdeg)
            return CycleIndexRing.compose(outer, [cls._eval(ast.inner, sorts, maxdeg)])
        if isinstance(ast, Application):
            head = cls._identifier(ast.head, cls.identifier_sorts(ast.head), maxdeg)
            if head.sorts != len(ast.args):
                raise SortMismatchError(
                    f"{ast.head.name} takes {head.sorts} argument(s), got {len(ast.args)}")
            args = [cls._eval(a, sorts, maxdeg) for a in ast.args]
            return CycleIndexRing.compose(head, args)
        raise TypeError(f"Not a species expression node: {ast!r}")
