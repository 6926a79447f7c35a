"""Text adjacency-list graph files, and format-sniffing readers.

The adjacency format: a header line with the vertex count n, then one line
per vertex ``u: v1 v2 ...`` with 1-based labels.  Vertices with no
neighbours still get a line (``u:``).  ``#`` comments and blank lines are
allowed.  Symmetry and zero diagonal are validated on read.
"""

from __future__ import annotations

import numpy as np

from . import bits, graph6
from .errors import GraphFormatError, InputError
from .graphs import Graph


def parse_adjacency(text: str) -> Graph:
    n = None
    rows = None
    seen = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r").strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise GraphFormatError(f"line {lineno}: expected the vertex count, got {line!r}") from None
            if n < 1:
                raise GraphFormatError(f"line {lineno}: vertex count must be positive")
            rows = bits.zeros(n, n)
            seen = np.zeros(n, dtype=bool)
            continue
        head, _, tail = line.partition(":")
        if not _:
            raise GraphFormatError(f"line {lineno}: expected 'u: v1 v2 ...', got {line!r}")
        try:
            u = int(head) - 1
            nbrs = [int(tok) - 1 for tok in tail.split()]
        except ValueError:
            raise GraphFormatError(f"line {lineno}: bad vertex label in {line!r}") from None
        if not 0 <= u < n:
            raise GraphFormatError(f"line {lineno}: vertex {u + 1} out of range 1..{n}")
        if seen[u]:
            raise GraphFormatError(f"line {lineno}: vertex {u + 1} listed twice")
        seen[u] = True
        for v in nbrs:
            if not 0 <= v < n:
                raise GraphFormatError(f"line {lineno}: neighbour {v + 1} out of range 1..{n}")
            if v == u:
                raise GraphFormatError(f"line {lineno}: self-loop at vertex {u + 1}")
            bits.set_bit(rows[u], v)
    if n is None:
        raise GraphFormatError("no vertex-count line found")
    g = Graph(n, rows)
    if not np.array_equal(g.rows, bits.transpose(g.rows, n)):
        t = bits.transpose(g.rows, n)
        diff = np.nonzero(g.rows != t)
        x = int(diff[0][0])
        raise GraphFormatError(f"adjacency lists are not symmetric around vertex {x + 1}")
    return g


def format_adjacency(g: Graph) -> str:
    lines = [str(g.n)]
    for u in range(g.n):
        nbrs = " ".join(str(v + 1) for v in g.neighbors(u))
        lines.append(f"{u + 1}:" + (" " + nbrs if nbrs else ""))
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    """Read a graph file; graph6 if the extension or content says so."""
    name = str(path)
    if name.endswith(".g6") or name.endswith(".graph6"):
        return graph6.read_file(path)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read graph file {path}: {exc}") from None
    stripped = text.lstrip()
    if stripped.startswith(graph6.HEADER):
        lines = [ln for ln in stripped.splitlines() if ln.strip() and ln.strip() != graph6.HEADER]
        if not lines:
            raise GraphFormatError(f"no graph6 line found in {path}")
        return graph6.decode(lines[0])
    return parse_adjacency(text)


def write_graph(g: Graph, path) -> None:
    """Write by extension: .g6/.graph6 for graph6, anything else adjacency."""
    name = str(path)
    if name.endswith(".g6") or name.endswith(".graph6"):
        graph6.write_file(g, path)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(format_adjacency(g))
