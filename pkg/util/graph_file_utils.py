import json
from typing import Iterable, List, Tuple

from dto.exceptions import GraphFormatError
from dto.graph import Graph
from dto.kernel_result import KernelResult


def _content_lines(lines: Iterable[str]) -> List[Tuple[int, List[str]]]:
    """Non-blank lines with `#` comments stripped, paired with their 1-based line number."""
    result = []
    for number, line in enumerate(lines, start=1):
        text = line.split('#', 1)[0].strip()
        if text:
            result.append((number, text.split()))
    return result


def _ints(fields: List[str], count: int, line: int) -> List[int]:
    if len(fields) != count:
        raise GraphFormatError(f"Expected {count} integers, got {len(fields)}", line)
    try:
        return [int(f) for f in fields]
    except ValueError as e:
        raise GraphFormatError(f"Not an integer: {e}", line) from e


def parse_graph(text: str) -> Graph:
    """Parse `n` followed by one `u v` edge per line (0-indexed)."""
    lines = _content_lines(text.splitlines())
    if not lines:
        raise GraphFormatError("Empty graph file")
    header_line, header = lines[0]
    n, = _ints(header, 1, header_line)
    edges = []
    for number, fields in lines[1:]:
        u, v = _ints(fields, 2, number)
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"Invalid edge ({u}, {v}) for {n} vertices", number)
        edges.append((u, v))
    try:
        return Graph.from_edges(n, edges)
    except ValueError as e:
        raise GraphFormatError(str(e), header_line) from e


def read_graph(path: str) -> Graph:
    try:
        with open(path, encoding='utf-8') as fh:
            text = fh.read()
    except UnicodeDecodeError as e:
        raise GraphFormatError(f"Graph file {path} is not UTF-8 text: {e}") from e
    return parse_graph(text)


def format_graph(g: Graph) -> str:
    """Inverse of `parse_graph`."""
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()])


def graph_to_json(g: Graph) -> dict:
    return {'n': g.n, 'edges': [list(edge) for edge in g.edges()]}


def kernel_to_json(result: KernelResult) -> str:
    """`{"kernel": {...}, "fibers": [[...], ...]}` with stable key order."""
    return json.dumps({'kernel': graph_to_json(result.kernel),
                       'fibers': [list(fiber) for fiber in result.fibers]})
