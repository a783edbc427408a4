"""Edge-list and matrix text formats.

Edge list::

    # comment
    nodes 4
    0 1
    1 2

Matrix: a line with the order ``n`` followed by ``n`` rows of ``n``
space-separated 0/1 digits.
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, SymBitMatrix


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1, source: str = "<text>"):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.line = line
        self.column = column


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield no, raw


def _column(raw: str, token_index: int) -> int:
    col = 0
    for k, tok in enumerate(raw.split()):
        col = raw.index(tok, col)
        if k == token_index:
            return col + 1
        col += len(tok)
    return len(raw) + 1


def parse_edge_list(text: str, source: str = "<text>") -> Graph:
    lines = _content_lines(text)
    try:
        no, raw = next(lines)
    except StopIteration:
        raise ParseError("missing 'nodes <n>' header", 1, 1, source) from None
    head = raw.split()
    if len(head) != 2 or head[0] != "nodes":
        raise ParseError("expected 'nodes <n>'", no, _column(raw, 0), source)
    try:
        n = int(head[1])
    except ValueError:
        raise ParseError(f"bad node count {head[1]!r}", no, _column(raw, 1), source) from None
    if n < 0:
        raise ParseError("node count must be non-negative", no, _column(raw, 1), source)
    edges = []
    seen = set()
    for no, raw in lines:
        toks = raw.split()
        if len(toks) != 2:
            raise ParseError(f"expected '<u> <v>', got {len(toks)} fields", no, _column(raw, 0), source)
        ends = []
        for k, tok in enumerate(toks):
            try:
                x = int(tok)
            except ValueError:
                raise ParseError(f"bad node id {tok!r}", no, _column(raw, k), source) from None
            if not 0 <= x < n:
                raise ParseError(f"node {x} out of range 0..{n - 1}", no, _column(raw, k), source)
            ends.append(x)
        u, v = ends
        if u == v:
            raise ParseError(f"self-loop at node {u}", no, _column(raw, 0), source)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", no, _column(raw, 0), source)
        seen.add(key)
        edges.append(key)
    return Graph(n, tuple(edges))


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    out = []
    if comment:
        out += [f"# {line}\n" for line in comment.splitlines()]
    out.append(f"nodes {g.node_count}\n")
    out += [f"{u} {v}\n" for u, v in g.edges]
    return "".join(out)


def parse_matrix(text: str, source: str = "<text>") -> SymBitMatrix:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("missing matrix order", 1, 1, source)
    no, raw = lines[0]
    try:
        n = int(raw.strip())
    except ValueError:
        raise ParseError(f"bad matrix order {raw.strip()!r}", no, 1, source) from None
    if len(lines) - 1 != n:
        where = lines[-1][0] if lines else 1
        raise ParseError(f"expected {n} matrix rows, found {len(lines) - 1}", where, 1, source)
    rows = []
    for no, raw in lines[1:]:
        toks = raw.split()
        if len(toks) != n:
            raise ParseError(f"expected {n} entries, found {len(toks)}", no, 1, source)
        row = []
        for k, tok in enumerate(toks):
            if tok not in ("0", "1"):
                raise ParseError(f"entry {tok!r} is not 0 or 1", no, _column(raw, k), source)
            row.append(int(tok))
        rows.append((no, raw, row))
    for i, (no, raw, row) in enumerate(rows):
        if row[i]:
            raise ParseError("diagonal entry must be 0", no, _column(raw, i), source)
        for j in range(i + 1, n):
            if row[j] != rows[j][2][i]:
                raise ParseError(f"matrix not symmetric at ({i}, {j})", no, _column(raw, j), source)
    edges = [(i, j) for i, (_, _, row) in enumerate(rows) for j in range(i + 1, n) if row[j]]
    return SymBitMatrix.from_edges(n, edges)


def format_matrix(c: SymBitMatrix) -> str:
    dense = c.to_dense()
    return f"{c.order}\n" + "".join(" ".join(str(int(x)) for x in row) + "\n" for row in dense)


def parse_graph_text(text: str, source: str = "<text>") -> Graph:
    """Edge list or matrix, told apart by the first content line."""
    first = next(_content_lines(text), (1, ""))[1].split()
    if first and first[0] == "nodes":
        return parse_edge_list(text, source)
    return parse_matrix(text, source).to_graph()


def read_graph(path: str | Path) -> Graph:
    path = Path(path)
    return parse_graph_text(path.read_text(), str(path))


def read_sections(text: str, source: str = "<text>") -> list[Graph]:
    """Several edge lists separated by blank lines."""
    blocks, cur, start, start_line = [], [], None, 1
    for no, raw in enumerate(text.splitlines(), start=1):
        if raw.strip():
            if not cur:
                start_line = no
            cur.append(raw)
        elif cur:
            blocks.append((start_line, cur))
            cur = []
    if cur:
        blocks.append((start_line, cur))
    out = []
    for first_line, lines in blocks:
        # keep line numbers meaningful in diagnostics
        padded = "\n" * (first_line - 1) + "\n".join(lines)
        if all(l.strip().startswith("#") for l in lines):
            continue
        out.append(parse_edge_list(padded, source))
    return out
