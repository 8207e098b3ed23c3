from fractions import Fraction
from typing import Tuple

from dto.type_series import TypeSeries

VARIABLES = 'xyz'


def _monomial(degrees: Tuple[int, ...]) -> str:
    out = []
    for s, d in enumerate(degrees):
        if d == 0:
            continue
        var = VARIABLES[s] if s < len(VARIABLES) else f"t{s}"
        out.append(var if d == 1 else f"{var}^{d}")
    return "".join(out)


def _term(c: Fraction, degrees: Tuple[int, ...]) -> str:
    mon = _monomial(degrees)
    if not mon:
        return str(c)
    if c == 1:
        return mon
    if c.denominator == 1:
        return f"{c}{mon}"
    return f"{c} {mon}"


def format_series(series: TypeSeries) -> str:
    """Text form of an EGF or OGF, e.g. `1 + x + x^4 + 6x^5` or `x - 1/2 x^2`."""
    items = series.sorted_items()
    if not items:
        return "0"
    parts = []
    for degrees, c in items:
        body = _term(abs(c), degrees)
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(parts)


def series_to_json(series: TypeSeries) -> dict:
    return {
        'kind': series.kind.value,
        'sorts': series.sorts,
        'maxdeg': series.maxdeg,
        'terms': [{'degrees': list(d), 'num': str(c.numerator), 'den': str(c.denominator)}
                  for d, c in series.sorted_items()],
    }
