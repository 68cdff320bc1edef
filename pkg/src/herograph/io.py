"""Text formats for digraphs (.dg) and undirected graphs (.ug).

.dg:  ``d <n> <m>`` then m lines ``a <u> <v>``; an optional block
      ``parts <k>`` followed by k lines ``part <v1> <v2> ...`` records an
      ordered multipartite structure.
.ug:  ``u <n> <m>`` then m lines ``e <a> <b>``; the vertex order is the
      index order.

Lines starting with '#' are comments.  Serialization is canonical (sorted
arcs/edges), so parse(serialize(x)) round-trips bit-exactly.
"""

from __future__ import annotations

from .core import Digraph, MultipartiteStructure, UndirectedGraph


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _ints(lineno, fields, count):
    if len(fields) != count:
        raise ParseError(lineno, f"expected {count} integers, got {len(fields)}")
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(lineno, f"not an integer in {fields!r}") from None


def parse_digraph(text: str) -> tuple[Digraph, MultipartiteStructure | None]:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "empty digraph file")
    lineno, fields = lines[0]
    if fields[0] != "d":
        raise ParseError(lineno, f"expected 'd <n> <m>' header, got {fields[0]!r}")
    n, m = _ints(lineno, fields[1:], 2)
    pos = 1
    arcs = []
    for _ in range(m):
        if pos >= len(lines):
            raise ParseError(lineno, f"expected {m} arc lines, file ended early")
        lineno, fields = lines[pos]
        pos += 1
        if fields[0] != "a":
            raise ParseError(lineno, f"expected arc line 'a <u> <v>', got {fields[0]!r}")
        u, v = _ints(lineno, fields[1:], 2)
        arcs.append((u, v))
    try:
        G = Digraph(n, arcs)
    except ValueError as exc:
        raise ParseError(lineno, str(exc)) from None
    structure = None
    if pos < len(lines):
        lineno, fields = lines[pos]
        pos += 1
        if fields[0] != "parts":
            raise ParseError(lineno, f"expected 'parts <k>' block, got {fields[0]!r}")
        (k,) = _ints(lineno, fields[1:], 1)
        parts = []
        for _ in range(k):
            if pos >= len(lines):
                raise ParseError(lineno, f"expected {k} part lines, file ended early")
            lineno, fields = lines[pos]
            pos += 1
            if fields[0] != "part":
                raise ParseError(lineno, f"expected 'part <v...>' line, got {fields[0]!r}")
            try:
                parts.append(frozenset(int(f) for f in fields[1:]))
            except ValueError:
                raise ParseError(lineno, f"not an integer in {fields!r}") from None
        structure = MultipartiteStructure(tuple(parts))
    if pos < len(lines):
        lineno, fields = lines[pos]
        raise ParseError(lineno, f"trailing content {fields!r}")
    return G, structure


def serialize_digraph(G: Digraph, structure: MultipartiteStructure | None = None) -> str:
    out = [f"d {G.n} {len(G.arcs)}"]
    out.extend(f"a {u} {v}" for u, v in G.arcs)
    if structure is not None:
        out.append(f"parts {len(structure.parts)}")
        for part in structure.parts:
            out.append("part " + " ".join(str(v) for v in sorted(part)))
    return "\n".join(out) + "\n"


def parse_undirected(text: str) -> UndirectedGraph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "empty graph file")
    lineno, fields = lines[0]
    if fields[0] != "u":
        raise ParseError(lineno, f"expected 'u <n> <m>' header, got {fields[0]!r}")
    n, m = _ints(lineno, fields[1:], 2)
    if len(lines) - 1 != m:
        raise ParseError(lineno, f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for lineno, fields in lines[1:]:
        if fields[0] != "e":
            raise ParseError(lineno, f"expected edge line 'e <a> <b>', got {fields[0]!r}")
        a, b = _ints(lineno, fields[1:], 2)
        edges.append((a, b))
    try:
        return UndirectedGraph(n, edges)
    except ValueError as exc:
        raise ParseError(lineno, str(exc)) from None


def serialize_undirected(H: UndirectedGraph) -> str:
    out = [f"u {H.n} {len(H.edges)}"]
    out.extend(f"e {a} {b}" for a, b in H.edges)
    return "\n".join(out) + "\n"
