"""graph6 encoding and decoding.

The format: an optional ``>>graph6<<`` header, then per graph one line of
printable ASCII.  The vertex count is N(n): a single byte n+63 for n <= 62,
``chr(126)`` plus three bytes holding an 18-bit big-endian value for
n <= 258047, or ``chr(126) chr(126)`` plus six bytes (36 bits) beyond that.
The upper triangle of the adjacency matrix is then read column by column
(x < y, y ascending), padded with zeros to a multiple of six bits, and each
6-bit group (most significant bit first) is emitted as ``chr(group + 63)``.
"""

from __future__ import annotations

import numpy as np

from . import bits
from .errors import GraphFormatError, InputError
from .graphs import Graph

HEADER = ">>graph6<<"

_SIX = np.array([32, 16, 8, 4, 2, 1], dtype=np.uint8)

#: decoding goes through a dense boolean matrix; refuse unreasonable sizes.
DECODE_CAP = 1 << 13


def _encode_size(n: int) -> str:
    if n < 0:
        raise InputError("vertex count must be non-negative")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return chr(126) + chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise InputError("vertex count too large for graph6")


def _decode_size(line: str) -> tuple[int, int]:
    """Return (n, number of characters consumed)."""
    if not line:
        raise GraphFormatError("empty graph6 line")
    if line[0] != chr(126):
        return ord(line[0]) - 63, 1
    if len(line) >= 2 and line[1] == chr(126):
        chars, start = 6, 2
    else:
        chars, start = 3, 1
    if len(line) < start + chars:
        raise GraphFormatError("truncated graph6 size field")
    n = 0
    for ch in line[start : start + chars]:
        n = (n << 6) | (ord(ch) - 63)
    return n, start + chars


def encode(g: Graph) -> str:
    """One graph6 line (no header, no newline)."""
    n = g.n
    chunks = [bits.unpack_rows(g.rows[y][None, :], n)[0][:y] for y in range(n)]
    tri = np.concatenate(chunks) if chunks else np.zeros(0, dtype=bool)
    pad = (-tri.size) % 6
    if pad:
        tri = np.concatenate([tri, np.zeros(pad, dtype=bool)])
    groups = tri.reshape(-1, 6).astype(np.uint8) @ _SIX
    body = (groups + 63).tobytes().decode("ascii")
    return _encode_size(n) + body


def decode(line: str) -> Graph:
    """Parse one graph6 line (the ``>>graph6<<`` header may be attached)."""
    line = line.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    n, consumed = _decode_size(line)
    if n > DECODE_CAP:
        raise InputError(
            f"refusing to decode graph6 with {n} vertices (cap {DECODE_CAP}); use the adjacency format"
        )
    body = line[consumed:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphFormatError(f"graph6 body has {len(body)} characters, expected {need}")
    codes = np.frombuffer(body.encode("ascii"), dtype=np.uint8).astype(np.int32) - 63
    if codes.size and (codes.min() < 0 or codes.max() > 63):
        raise GraphFormatError("graph6 body contains characters outside chr(63)..chr(126)")
    tri = ((codes[:, None] >> np.array([5, 4, 3, 2, 1, 0])) & 1).astype(bool).ravel()
    tri = tri[: n * (n - 1) // 2]
    dense = np.zeros((n, n), dtype=bool)
    pos = 0
    for y in range(n):
        dense[:y, y] = tri[pos : pos + y]
        pos += y
    dense |= dense.T
    return Graph.from_dense(dense, validate=False)


def write_file(g: Graph, path, header: bool = True) -> None:
    with open(path, "w", encoding="ascii") as fh:
        if header:
            fh.write(HEADER + "\n")
        fh.write(encode(g) + "\n")


def read_file(path) -> Graph:
    """Read the first graph from a graph6 file."""
    try:
        with open(path, "r", encoding="ascii") as fh:
            for raw in fh:
                line = raw.strip()
                if not line or line == HEADER:
                    continue
                return decode(line)
    except OSError as exc:
        raise InputError(f"cannot read graph file {path}: {exc}") from None
    raise GraphFormatError(f"no graph6 line found in {path}")
