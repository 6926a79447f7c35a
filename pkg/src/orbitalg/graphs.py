"""Simple graphs over packed bit-rows, and the regularity ladder.

All classification is exact integer counting on the bit rows; no floating
point is involved anywhere.  The checks return either a parameter object or
a :class:`Rejection` naming the reason and a witness, so "not strongly
regular" is an ordinary result rather than an exception.

The ladder: ``check_regular`` -> connectivity -> ``check_srg`` (common
neighbour counts over all pairs) -> ``check_drg`` (per-vertex distance
partitions, b/c counts over all pairs).  A strongly regular graph with
``mu > 0`` is exactly a distance-regular graph of diameter 2; callers can
cross-check the two routes with :func:`srg_to_array`.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import bits
from .errors import ConsistencyError, InputError

__all__ = [
    "Graph",
    "Rejection",
    "SrgParams",
    "IntersectionArray",
    "DesignParams",
    "DeadlineExceeded",
    "union_graph",
    "check_regular",
    "connected_components",
    "bfs_levels",
    "check_srg",
    "check_drg",
    "srg_to_array",
    "verify_srg_matrix_identity",
    "check_symmetric_design",
    "complement",
]


class DeadlineExceeded(Exception):
    """Raised by the long-running checks when a cooperative deadline passes."""


@dataclass
class Rejection:
    """A check that failed honestly: why, and on which vertices."""

    reason: str
    witness: tuple | None = None

    def __str__(self) -> str:
        if self.witness is None:
            return self.reason
        return f"{self.reason} (witness {self.witness})"


class SrgParams(NamedTuple):
    v: int
    k: int
    lam: int
    mu: int

    def __str__(self) -> str:
        return f"srg({self.v},{self.k},{self.lam},{self.mu})"


class DesignParams(NamedTuple):
    v: int
    k: int
    lam: int

    def __str__(self) -> str:
        return f"2-({self.v},{self.k},{self.lam})"


@dataclass(frozen=True)
class IntersectionArray:
    """Distance-regular intersection array {b_0, ..., b_{d-1}; c_1, ..., c_d}."""

    b: tuple[int, ...]
    c: tuple[int, ...]
    d: int
    ki: tuple[int, ...]

    def __post_init__(self):
        if len(self.b) != self.d or len(self.c) != self.d or len(self.ki) != self.d + 1:
            raise ValueError("intersection array lengths do not match the diameter")
        if any(x <= 0 for x in self.b) or any(x <= 0 for x in self.c):
            raise ValueError("intersection array entries must be positive")
        if self.c[0] != 1:
            raise ValueError("c_1 must be 1")

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"


class Graph:
    """An undirected simple graph as packed adjacency bit-rows."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: np.ndarray, validate: bool = False):
        if rows.shape != (n, bits.words_for(n)):
            raise ValueError("row matrix shape does not match the vertex count")
        self.n = n
        self.rows = rows
        if validate:
            self.validate()

    @classmethod
    def from_dense(cls, mat: np.ndarray, validate: bool = True) -> "Graph":
        mat = np.asarray(mat, dtype=bool)
        return cls(mat.shape[0], bits.pack_rows(mat), validate=validate)

    @classmethod
    def from_edges(cls, n: int, edges, validate: bool = True) -> "Graph":
        rows = bits.zeros(n, n)
        for u, v in edges:
            bits.set_bit(rows[u], v)
            bits.set_bit(rows[v], u)
        return cls(n, rows, validate=validate)

    def validate(self) -> None:
        """Exact symmetry and zero-diagonal checks."""
        for v in range(self.n):
            if bits.get_bit(self.rows[v], v):
                raise ConsistencyError(f"self-loop at vertex {v}")
        if not np.array_equal(self.rows, bits.transpose(self.rows, self.n)):
            raise ConsistencyError("adjacency matrix is not symmetric")

    def neighbors(self, v: int) -> np.ndarray:
        return bits.to_indices(self.rows[v], self.n)

    def degrees(self) -> np.ndarray:
        return bits.popcount_rows(self.rows)

    def edge_count(self) -> int:
        return int(self.degrees().sum()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bits.get_bit(self.rows[u], v)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"


def union_graph(dec, subset) -> Graph:
    """OR together the selected non-diagonal orbitals of a decomposition.

    The subset must be transpose-closed (contain the pair of each member) so
    the result is symmetric; the diagonal orbital is not allowed.
    """
    subset = sorted(set(int(i) for i in subset))
    if not subset:
        raise InputError("empty orbital subset")
    pairing = dec.pairing()
    for i in subset:
        if not 0 < i < dec.rank:
            raise InputError(f"orbital index {i} out of range 1..{dec.rank - 1}")
        if pairing[i] not in subset:
            raise InputError(f"subset is not transpose-closed: missing pair {pairing[i]} of {i}")
    rows = bits.zeros(dec.n, dec.n)
    expected = 0
    for i in subset:
        o = dec.orbitals[i]
        rows |= o.rows
        expected += o.valency
    g = Graph(dec.n, rows, validate=True)
    degs = g.degrees()
    if not (degs == expected).all():
        v = int(np.nonzero(degs != expected)[0][0])
        raise ConsistencyError(
            f"union of orbitals {subset} is not {expected}-regular at vertex {v}"
        )
    return g


def check_regular(g: Graph):
    """Common degree, or a Rejection witnessing two different degrees."""
    degs = g.degrees()
    k = int(degs[0])
    if (degs == k).all():
        return k
    other = int(np.nonzero(degs != k)[0][0])
    return Rejection("not regular", (0, other))


def bfs_levels(g: Graph, v: int):
    """Distance array (-1 for unreachable) and the size of each level."""
    n = g.n
    dist = np.full(n, -1, dtype=np.int64)
    dist[v] = 0
    visited = bits.from_indices([v], n)
    frontier = visited.copy()
    sizes = [1]
    while True:
        idx = bits.to_indices(frontier, n)
        reach = np.bitwise_or.reduce(g.rows[idx], axis=0)
        fresh = reach & ~visited
        count = bits.popcount(fresh)
        if count == 0:
            return dist, sizes
        visited |= fresh
        dist[bits.to_indices(fresh, n)] = len(sizes)
        sizes.append(count)
        frontier = fresh


def connected_components(g: Graph):
    """Number of components and a component label per vertex."""
    labels = np.full(g.n, -1, dtype=np.int64)
    count = 0
    for v in range(g.n):
        if labels[v] >= 0:
            continue
        dist, _ = bfs_levels(g, v)
        labels[dist >= 0] = count
        count += 1
    return count, labels


def _check_deadline(deadline):
    if deadline is not None and time.monotonic() > deadline:
        raise DeadlineExceeded


def check_srg(g: Graph, deadline: float | None = None):
    """Strongly-regular parameters, or a Rejection with a witness pair.

    Every pair of vertices is counted; adjacent pairs must share lam common
    neighbours and distinct non-adjacent pairs mu.  Complete and empty
    graphs are rejected as degenerate.
    """
    reg = check_regular(g)
    if isinstance(reg, Rejection):
        return reg
    k, n = reg, g.n
    if k == 0 or k == n - 1:
        return Rejection("degenerate")
    lam = mu = None
    lam_at = mu_at = None
    everyone = np.arange(n)
    for x in range(n):
        if (x & 63) == 0:
            _check_deadline(deadline)
        common = bits.popcount_rows(g.rows & g.rows[x])
        adj = bits.unpack_rows(g.rows[x][None, :], n)[0]
        non = ~adj
        non[x] = False
        cvals = common[adj]
        if lam is None and cvals.size:
            lam = int(cvals[0])
            lam_at = (x, int(everyone[adj][0]))
        if cvals.size and not (cvals == lam).all():
            y = int(everyone[adj][np.nonzero(cvals != lam)[0][0]])
            return Rejection(
                f"common neighbours of adjacent pair differ: {int(common[y])} vs {lam} at {lam_at}",
                (x, y),
            )
        nvals = common[non]
        if mu is None and nvals.size:
            mu = int(nvals[0])
            mu_at = (x, int(everyone[non][0]))
        if nvals.size and not (nvals == mu).all():
            y = int(everyone[non][np.nonzero(nvals != mu)[0][0]])
            return Rejection(
                f"common neighbours of non-adjacent pair differ: {int(common[y])} vs {mu} at {mu_at}",
                (x, y),
            )
    if lam is None or mu is None:
        # k in 1..n-2 guarantees both kinds of pair exist
        raise ConsistencyError("pair kinds missing despite non-degenerate degree")
    params = SrgParams(n, k, lam, mu)
    if k * (k - lam - 1) != (n - k - 1) * mu:
        raise ConsistencyError(f"srg counting identity violated for {params}")
    return params


def check_drg(g: Graph, sample_vertices: int | None = None, deadline: float | None = None):
    """Distance-regular intersection array, or a Rejection with a witness.

    For every source vertex the distance partition is built and the counts
    b_i (neighbours one level out) and c_i (one level in) are verified for
    every vertex, in one vectorized pass per source.  ``sample_vertices``
    restricts the sources to a deterministic sample -- exploration only, a
    pass over a sample proves nothing.
    """
    reg = check_regular(g)
    if isinstance(reg, Rejection):
        return reg
    k, n = reg, g.n
    if k == 0:
        return Rejection("degenerate")
    dist0, sizes0 = bfs_levels(g, 0)
    if (dist0 < 0).any():
        far = int(np.nonzero(dist0 < 0)[0][0])
        return Rejection("disconnected", (0, far))
    d = len(sizes0) - 1
    if d == 0:
        return Rejection("degenerate")

    if sample_vertices is None or sample_vertices >= n:
        sources = range(n)
    else:
        rng = np.random.default_rng(20240 + n)
        sources = sorted(int(v) for v in rng.choice(n, size=sample_vertices, replace=False))

    W = bits.words_for(n)
    b_ref = np.full(d + 1, -1, dtype=np.int64)
    c_ref = np.full(d + 1, -1, dtype=np.int64)
    first = True
    for v in sources:
        _check_deadline(deadline)
        dist, sizes = (dist0, sizes0) if v == 0 else bfs_levels(g, v)
        if sizes != sizes0:
            return Rejection(f"distance distributions differ: {sizes0} from 0, {sizes} from {v}", (0, v))
        levels = np.zeros((d + 3, W), dtype=bits.WORD)
        levels[1 : d + 2] = bits.pack_rows(dist[None, :] == np.arange(d + 1)[:, None])
        bv = bits.popcount_rows(g.rows & levels[dist + 2])
        cv = bits.popcount_rows(g.rows & levels[dist])
        for i in range(d + 1):
            sel = dist == i
            bvals, cvals = bv[sel], cv[sel]
            if first:
                b_ref[i], c_ref[i] = int(bvals[0]), int(cvals[0])
            for vals, ref, kind in ((bvals, b_ref[i], "b"), (cvals, c_ref[i], "c")):
                if not (vals == ref).all():
                    w = int(np.nonzero(sel)[0][np.nonzero(vals != ref)[0][0]])
                    return Rejection(
                        f"{kind}_{i} differs: {int(vals[np.nonzero(vals != ref)[0][0]])} vs {int(ref)}",
                        (v, w),
                    )
        first = False

    if b_ref[d] != 0 or c_ref[0] != 0 or b_ref[0] != k or c_ref[1] != 1:
        raise ConsistencyError("distance-partition boundary counts are wrong")
    ki = tuple(sizes0)
    for i in range(d):
        if ki[i] * b_ref[i] != ki[i + 1] * c_ref[i + 1]:
            raise ConsistencyError("level sizes disagree with the intersection counts")
    return IntersectionArray(
        b=tuple(int(x) for x in b_ref[:d]),
        c=tuple(int(x) for x in c_ref[1 : d + 1]),
        d=d,
        ki=ki,
    )


def verify_srg_matrix_identity(g: Graph, p: SrgParams, sample_rows: int | None = None):
    """Entrywise check of A^2 = k I + lam A + mu (J - I - A) by bit counting.

    Row x of A^2 is the vector of common-neighbour counts with x, computed
    here from scratch.  Returns True, or a Rejection naming the first entry
    that differs.  ``sample_rows`` restricts to a deterministic row sample
    (meant for graphs too large to sweep; a full pass is the default).
    """
    n = g.n
    if sample_rows is None or sample_rows >= n:
        rows_iter = range(n)
    else:
        rng = np.random.default_rng(91 + n)
        rows_iter = sorted(int(v) for v in rng.choice(n, size=sample_rows, replace=False))
    for x in rows_iter:
        asq = bits.popcount_rows(g.rows & g.rows[x])
        adj = bits.unpack_rows(g.rows[x][None, :], n)[0]
        expected = np.full(n, p.mu, dtype=np.int64)
        expected[adj] = p.lam
        expected[x] = p.k
        if not np.array_equal(asq, expected):
            y = int(np.nonzero(asq != expected)[0][0])
            return Rejection(
                f"A^2 entry ({x},{y}) is {int(asq[y])}, identity demands {int(expected[y])}",
                (x, y),
            )
    return True


def srg_to_array(p: SrgParams) -> IntersectionArray:
    """The diameter-2 intersection array {k, k-1-lam; 1, mu} of an SRG.

    Only meaningful for connected SRGs, i.e. mu > 0.
    """
    if p.mu == 0:
        raise InputError("srg with mu = 0 is disconnected and has no diameter-2 array")
    return IntersectionArray(
        b=(p.k, p.k - 1 - p.lam),
        c=(1, p.mu),
        d=2,
        ki=(1, p.k, p.v - p.k - 1),
    )


def check_symmetric_design(g: Graph, diagonal: str):
    """Read the adjacency matrix as a symmetric 2-design incidence matrix.

    ``diagonal`` is ``"zero"`` (take N = A) or ``"one"`` (take N = A + I).
    Constant row sums k and constant pairwise row intersections lam make a
    2-(v, k, lam) design; anything else is a Rejection with a witness.
    """
    if diagonal not in ("zero", "one"):
        raise InputError(f"diagonal must be 'zero' or 'one', got {diagonal!r}")
    n = g.n
    rows = g.rows
    if diagonal == "one":
        rows = rows.copy()
        idx = np.arange(n)
        rows[idx, idx >> 6] |= np.uint64(1) << (idx & 63).astype(np.uint64)
    sums = bits.popcount_rows(rows)
    k = int(sums[0])
    if not (sums == k).all():
        other = int(np.nonzero(sums != k)[0][0])
        return Rejection(f"row sums differ: {k} vs {int(sums[other])}", (0, other))
    if k == 0 or k == n:
        return Rejection("degenerate")
    if n < 2:
        return Rejection("degenerate")
    lam = None
    lam_at = None
    mask = np.ones(n, dtype=bool)
    everyone = np.arange(n)
    for x in range(n):
        inter = bits.popcount_rows(rows & rows[x])
        mask[:] = True
        mask[x] = False
        if lam is None:
            y0 = 1 if x == 0 else 0
            lam, lam_at = int(inter[y0]), (x, y0)
        vals = inter[mask]
        if not (vals == lam).all():
            y = int(everyone[mask][np.nonzero(vals != lam)[0][0]])
            return Rejection(f"row intersections differ: {int(inter[y])} vs {lam} at {lam_at}", (x, y))
    if lam == 0:
        return Rejection("degenerate")
    params = DesignParams(n, k, lam)
    if lam * (n - 1) != k * (k - 1):
        raise ConsistencyError(f"design counting identity violated for {params}")
    return params


def complement(g: Graph) -> Graph:
    """The complement graph (no self-loops)."""
    rows = ~g.rows
    tail = bits.full_row(g.n)
    rows &= tail
    idx = np.arange(g.n)
    rows[idx, idx >> 6] &= ~(np.uint64(1) << (idx & 63).astype(np.uint64))
    return Graph(g.n, rows)
