"""Line-oriented text formats for representations, graphs and posets.

Representation files hold one ``<vertex> <left> <right>`` line per vertex,
with endpoints written ``p/q`` or ``p``.  ``#`` starts a comment.
"""

from __future__ import annotations

import os
import re
import tempfile
from pathlib import Path

import networkx as nx

from .core import Graph, Interval, Rational, Representation
from .orders import Poset

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class ParseError(ValueError):
    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where = f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_rational(token: str, line=None):
    if not _RATIONAL.match(token):
        raise ParseError(f"not a rational: {token!r}", line)
    num, _, den = token.partition("/")
    den = int(den) if den else 1
    if den == 0:
        raise ParseError(f"zero denominator in {token!r}", line)
    return Rational(int(num), den)


def parse_representation(text: str, source=None) -> Representation:
    found = {}
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 3:
            raise ParseError("expected '<vertex> <left> <right>'", lineno, source)
        try:
            v = int(parts[0])
        except ValueError:
            raise ParseError(f"bad vertex id {parts[0]!r}", lineno, source) from None
        if v < 0:
            raise ParseError(f"negative vertex id {v}", lineno, source)
        if v in found:
            raise ParseError(f"vertex {v} listed twice", lineno, source)
        left = parse_rational(parts[1], lineno)
        right = parse_rational(parts[2], lineno)
        if left > right:
            raise ParseError(f"left endpoint {left} exceeds right endpoint {right}", lineno, source)
        found[v] = (Interval(left, right), lineno)
    n = len(found)
    for v, (_, lineno) in found.items():
        if v >= n:
            raise ParseError(f"vertex ids must be 0..{n - 1}, got {v}", lineno, source)
    return Representation(found[v][0] for v in range(n))


def format_representation(rep: Representation, comments=()) -> str:
    out = [f"# {c}" for c in comments]
    out.extend(f"{v} {iv.left} {iv.right}" for v, iv in enumerate(rep))
    return "\n".join(out) + "\n"


def parse_edge_list(text: str, source=None) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("missing vertex-count header", None, source)
    lineno, header = lines[0]
    try:
        n = int(header)
    except ValueError:
        raise ParseError(f"header must be the vertex count, got {header!r}", lineno, source) from None
    if n < 0:
        raise ParseError("negative vertex count", lineno, source)
    edges = set()
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected 'u v'", lineno, source)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"bad edge {line!r}", lineno, source) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) out of range 0..{n - 1}", lineno, source)
        if u == v:
            raise ParseError(f"self-loop at {u}", lineno, source)
        edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges))


def format_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def parse_graph6(text: str, source=None) -> list[Graph]:
    graphs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith(">>graph6<<"):
            line = line[len(">>graph6<<"):]
        try:
            nxg = nx.from_graph6_bytes(line.encode("ascii"))
        except (nx.NetworkXError, ValueError, IndexError, UnicodeEncodeError) as exc:
            raise ParseError(f"bad graph6 string: {exc}", lineno, source) from None
        graphs.append(Graph(nxg.number_of_nodes(), nxg.edges()))
    return graphs


def format_graph6(g: Graph) -> str:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    return nx.to_graph6_bytes(nxg, header=False).decode("ascii").strip()


def parse_graphs(text: str, fmt: str = "edges", source=None) -> list[Graph]:
    if fmt == "edges":
        return [parse_edge_list(text, source)]
    if fmt == "graph6":
        return parse_graph6(text, source)
    raise ValueError(f"unknown graph format {fmt!r}")


def parse_poset(text: str, source=None) -> Poset:
    """Relation file: ``x < y`` per line, optional ``n <count>`` header.

    A line holding a single id declares an element without relations.  The
    transitive closure is taken; a cycle raises ``orders.CycleError``.
    """
    n = None
    pairs = []
    top = -1
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) == 2 and parts[0] == "n":
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"bad element count {parts[1]!r}", lineno, source) from None
            continue
        if len(parts) == 1:
            ids = parts
        elif len(parts) == 3 and parts[1] == "<":
            ids = [parts[0], parts[2]]
        else:
            raise ParseError("expected 'x < y'", lineno, source)
        try:
            ids = [int(t) for t in ids]
        except ValueError:
            raise ParseError(f"bad element id in {line!r}", lineno, source) from None
        if any(i < 0 for i in ids):
            raise ParseError("negative element id", lineno, source)
        if len(ids) == 2:
            if ids[0] == ids[1]:
                raise ParseError(f"{ids[0]} < {ids[0]} is not irreflexive", lineno, source)
            pairs.append(tuple(ids))
        top = max([top, *ids])
    if n is None:
        n = top + 1
    elif top >= n:
        raise ParseError(f"element {top} out of range for n={n}", None, source)
    return Poset.from_relation(n, pairs)


def read_text(path) -> str:
    return Path(path).read_text(encoding="utf-8")


def write_atomic(path, text: str) -> None:
    """Write ``text`` to ``path`` through a temporary file and a rename."""
    path = Path(path)
    directory = path.parent if str(path.parent) else Path(".")
    directory.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
