"""graph6, edge-list, DOT and label-sidecar input/output."""

from __future__ import annotations

import logging
import sys
from collections.abc import Sequence
from pathlib import Path

import networkx as nx

from .errors import Graph6Error, ParameterError
from .graph import Graph, from_edge_list

log = logging.getLogger(__name__)

GRAPH6_HEADER = b">>graph6<<"
FORMATS = ("g6", "edgelist", "dot")
_EXTENSIONS = {".g6": "g6", ".el": "edgelist", ".txt": "edgelist", ".dot": "dot"}


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def graph6_encode(g: Graph) -> bytes:
    """Encode ``g`` as graph6 (no header, no trailing newline)."""
    return nx.to_graph6_bytes(to_networkx(g), header=False).rstrip(b"\n")


def _check_graph6(data: bytes, start: int) -> None:
    """Raise ``Graph6Error`` with the byte offset of the first malformed position."""
    if start >= len(data):
        raise Graph6Error("empty graph6 record", start)
    for pos in range(start, len(data)):
        if not 63 <= data[pos] <= 126:
            raise Graph6Error(f"invalid graph6 character {chr(data[pos])!r}", pos)
    pos = start
    if data[pos] < 126:
        n = data[pos] - 63
        pos += 1
    else:
        if pos + 4 > len(data) or data[pos + 1] == 126:
            raise Graph6Error("unsupported or truncated graph6 size header", pos)
        n = 0
        for b in data[pos + 1:pos + 4]:
            n = n << 6 | (b - 63)
        pos += 4
    expected = (n * (n - 1) // 2 + 5) // 6
    if len(data) - pos != expected:
        raise Graph6Error(
            f"graph6 body for n={n} needs {expected} bytes, found {len(data) - pos}", pos
        )


def graph6_decode(data: bytes | str) -> Graph:
    """Decode one graph6 record. A ``>>graph6<<`` prefix and trailing whitespace are ignored."""
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.rstrip()
    start = len(GRAPH6_HEADER) if data.startswith(GRAPH6_HEADER) else 0
    _check_graph6(data, start)
    h = nx.from_graph6_bytes(data[start:])
    return from_edge_list(h.number_of_nodes(), list(h.edges()))


def edgelist_encode(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def edgelist_decode(text: str) -> Graph:
    """Parse an ``n m`` header followed by ``u v`` lines. ``#`` starts a comment."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            rows.append((lineno, [int(x) for x in fields]))
        except ValueError:
            raise ParameterError(f"edge list line {lineno}: non-integer field in {line!r}") from None
    if not rows:
        raise ParameterError("edge list: missing 'n m' header")
    lineno, header = rows[0]
    if len(header) != 2:
        raise ParameterError(f"edge list line {lineno}: header must be 'n m'")
    n, m = header
    edges = []
    for lineno, fields in rows[1:]:
        if len(fields) != 2:
            raise ParameterError(f"edge list line {lineno}: expected 'u v'")
        edges.append(tuple(fields))
    if len(edges) != m:
        log.warning("Edge list header declares %d edges, found %d", m, len(edges))
    return from_edge_list(n, edges)


def format_config(config: Sequence[int]) -> str:
    return ",".join(map(str, config))


def dot_export(g: Graph, labels: Sequence[Sequence[int]] | None = None, name: str = "G") -> str:
    """Undirected DOT text; vertices carry their token configuration when ``labels`` is given."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if labels is not None:
            lines.append(f'  {v} [label="{{{format_config(labels[v])}}}"];')
        else:
            lines.append(f"  {v};")
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def labels_encode(labels: Sequence[Sequence[int]]) -> str:
    return "".join(format_config(c) + "\n" for c in labels)


def labels_decode(text: str) -> list[tuple[int, ...]]:
    configs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        try:
            configs.append(tuple(int(x) for x in line.split(",")))
        except ValueError:
            raise ParameterError(f"labels line {lineno}: malformed config {line!r}") from None
    return configs


def detect_format(path: str | Path) -> str:
    """Format name from the file extension; stdin (``-``) defaults to graph6."""
    if str(path) == "-":
        return "g6"
    suffix = Path(path).suffix.lower()
    fmt = _EXTENSIONS.get(suffix)
    if fmt is None:
        raise ParameterError(f"input: cannot infer format from extension {suffix!r}; pass --in-format")
    return fmt


def parse_graph(data: bytes, fmt: str) -> Graph:
    if fmt == "g6":
        return graph6_decode(data)
    if fmt == "edgelist":
        return edgelist_decode(data.decode("utf-8"))
    if fmt == "dot":
        raise ParameterError("input: DOT is an export-only format")
    raise ParameterError(f"format: unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    """Read a graph from ``path`` (``-`` for stdin)."""
    fmt = fmt or detect_format(path)
    if str(path) == "-":
        data = sys.stdin.buffer.read()
    else:
        data = Path(path).read_bytes()
    g = parse_graph(data, fmt)
    log.info("Read %s: %d vertices, %d edges", path, g.n, g.edge_count)
    return g


def render_graph(g: Graph, fmt: str, labels: Sequence[Sequence[int]] | None = None) -> bytes:
    if fmt == "g6":
        return graph6_encode(g) + b"\n"
    if fmt == "edgelist":
        return edgelist_encode(g).encode("utf-8")
    if fmt == "dot":
        return dot_export(g, labels).encode("utf-8")
    raise ParameterError(f"format: unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def write_graph(
    g: Graph,
    path: str | Path | None,
    fmt: str,
    labels: Sequence[Sequence[int]] | None = None,
) -> None:
    """Write ``g`` to ``path``; ``None`` or ``-`` means stdout."""
    payload = render_graph(g, fmt, labels)
    if path is None or str(path) == "-":
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
        return
    Path(path).write_bytes(payload)
    log.info("Wrote %s (%s, %d vertices)", path, fmt, g.n)
