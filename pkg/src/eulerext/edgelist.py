"""Plain-text edge lists: an ``n <count>`` header, then one ``u v`` per line.

Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from .graph import Graph


class ParseError(ValueError):
    pass


def parse_edge_list(text: str) -> tuple[int, list[tuple[int, int]]]:
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError(f"line {lineno}: expected header 'n <count>', got {raw!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {raw!r}") from None
    if n is None:
        raise ParseError("missing 'n <count>' header")
    return n, pairs


def serialize(g: Graph, comments: list[str] | tuple[str, ...] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"n {g.n}")
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path) as fh:
        n, pairs = parse_edge_list(fh.read())
    return Graph.from_edge_list(n, pairs)


def write_graph(path, g: Graph, comments=()) -> None:
    with open(path, "w") as fh:
        fh.write(serialize(g, comments))
