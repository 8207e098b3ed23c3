import re
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from dto.cycle_index import CycleIndex, PMonomial, make_monomial, monomial_degree
from dto.exceptions import SpeciesError, SpeciesSyntaxError

SORT_TAGS = 'xyz'

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<sign>[+-])|(?P<num>\d+(?:/\d+)?)|(?P<star>\*)"
    r"|(?P<factor>p(?P<k>\d+)(?:\[(?P<tag>[a-z]\w*)\])?(?:\^(?P<e>\d+))?))")


def sort_tag(sort: int) -> str:
    return SORT_TAGS[sort] if sort < len(SORT_TAGS) else f"s{sort}"


def _tag_sort(tag: str, position: int) -> int:
    if tag in SORT_TAGS:
        return SORT_TAGS.index(tag)
    if re.fullmatch(r"s\d+", tag):
        return int(tag[1:])
    raise SpeciesSyntaxError(f"Unknown sort tag [{tag}]", position)


def format_monomial(mon: PMonomial, sorts: int) -> str:
    factors = []
    for s, k, e in mon:
        tag = f"[{sort_tag(s)}]" if sorts > 1 else ""
        factors.append(f"p{k}{tag}" + (f"^{e}" if e > 1 else ""))
    return " ".join(factors)


def format_cycle_index(f: CycleIndex) -> str:
    """Canonical text form: terms by degree then monomial order, e.g. `1 + p1 + 1/2 * p1^2 + 1/2 * p2`."""
    if f.is_zero():
        return "0"
    parts = []
    for mon, c in f.sorted_terms():
        magnitude = abs(c)
        if not mon:
            body = str(magnitude)
        elif magnitude == 1:
            body = format_monomial(mon, f.sorts)
        else:
            body = f"{magnitude} * {format_monomial(mon, f.sorts)}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(parts)


def parse_cycle_index(text: str, sorts: Optional[int] = None, maxdeg: Optional[int] = None) -> CycleIndex:
    """Read the text form back into a cycle index.

    Args:
        text: Sum of terms `c * p_k[s]^e ...`; the coefficient and `*` are optional.
        sorts: Sort count; inferred from the sort tags when omitted.
        maxdeg: Truncation degree; the largest term degree when omitted.

    Returns:
        The parsed cycle index; repeated monomials are summed.

    Raises:
        SpeciesSyntaxError: On malformed input, with the character position.
    """
    terms: List[Tuple[Fraction, list]] = []
    sign, coef, factors, seen_star = 1, None, [], False
    pos = 0

    def close_term(at: int):
        if coef is None and not factors:
            raise SpeciesSyntaxError("Empty term", at)
        terms.append((sign * (coef if coef is not None else Fraction(1)), factors))

    started = False
    while pos < len(text) and text[pos:].strip():
        match = _TOKEN_RE.match(text, pos)
        if not match:
            raise SpeciesSyntaxError(f"Unexpected character {text[pos:].lstrip()[0]!r}",
                                     pos + len(text[pos:]) - len(text[pos:].lstrip()))
        at = match.end() - len(match.group(0).lstrip())
        if match.group('sign'):
            if started:
                close_term(at)
            sign = -1 if match.group('sign') == '-' else 1
            coef, factors, seen_star, started = None, [], False, True
        elif match.group('num'):
            if coef is not None or factors:
                raise SpeciesSyntaxError("Coefficient must come first in a term", at)
            num, _, den = match.group('num').partition('/')
            if den and int(den) == 0:
                raise SpeciesSyntaxError("Zero denominator", at)
            coef = Fraction(int(num), int(den) if den else 1)
            started = True
        elif match.group('star'):
            if coef is None or factors or seen_star:
                raise SpeciesSyntaxError("Misplaced '*'", at)
            seen_star = True
        elif match.group('factor'):
            k = int(match.group('k'))
            if k < 1:
                raise SpeciesSyntaxError("Power-sum index must be positive", at)
            tag = match.group('tag')
            s = _tag_sort(tag, at) if tag else 0
            e = int(match.group('e')) if match.group('e') else 1
            factors.append((s, k, e))
            started = True
        else:
            raise SpeciesSyntaxError("Unexpected token", at)
        pos = match.end()
    if not started:
        raise SpeciesSyntaxError("Empty cycle index text", 0)
    close_term(len(text))

    acc: Dict[PMonomial, Fraction] = {}
    for c, fs in terms:
        mon = make_monomial(fs)
        acc[mon] = acc.get(mon, 0) + c
    used_sorts = max((s + 1 for mon in acc for s, _, _ in mon), default=1)
    if sorts is None:
        sorts = used_sorts
    if maxdeg is None:
        maxdeg = max((monomial_degree(mon) for mon in acc), default=0)
    return CycleIndex(sorts, maxdeg, acc)


def cycle_index_to_json(f: CycleIndex) -> dict:
    """JSON-ready dict; integers are decimal strings."""
    return {
        'sorts': f.sorts,
        'maxdeg': f.maxdeg,
        'terms': [{'mon': [list(factor) for factor in mon], 'num': str(c.numerator), 'den': str(c.denominator)}
                  for mon, c in f.sorted_terms()],
    }


def cycle_index_from_json(data: dict) -> CycleIndex:
    try:
        terms = {make_monomial(tuple(factor) for factor in term['mon']): Fraction(int(term['num']), int(term['den']))
                 for term in data['terms']}
        return CycleIndex(int(data['sorts']), int(data['maxdeg']), terms)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise SpeciesError(f"Malformed cycle index JSON: {e}") from e
