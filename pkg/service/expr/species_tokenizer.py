import re
from dataclasses import dataclass
from typing import List

from dto.exceptions import SpeciesSyntaxError

NUMBER = 'number'
IDENT = 'ident'
OPERATOR = 'operator'
END = 'end'

_TOKEN_RE = re.compile(r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<operator>>=|[-+*()\[\],]))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    """Split an expression into tokens; the keyword `o` comes back as an operator."""
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == '':
            break
        match = _TOKEN_RE.match(text, pos)
        if not match:
            offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise SpeciesSyntaxError(f"Unexpected character {text[offset]!r}", offset)
        kind = match.lastgroup
        start = match.start(kind)
        value = match.group(kind)
        if kind == IDENT and value == 'o':
            kind = OPERATOR
        tokens.append(Token(kind, value, start))
        pos = match.end()
    tokens.append(Token(END, '', len(text)))
    return tokens
