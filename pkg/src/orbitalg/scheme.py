"""Coherent configurations as dense color matrices.

A configuration on n points is an n x n matrix of colors (relation indices)
such that: some colors tile the diagonal and appear nowhere else; the
transpose of every color class is again a color class.  Those two facts are
validated structurally at construction.  The computational content -- that
the number of z with colors[x,z] = i and colors[z,y] = j depends only on
(i, j, colors[x,y]) -- is checked by :func:`intersection_numbers`, first on
one representative pair per color and then over every pair.

Dense matrices keep this simple; the constructors refuse point counts above
a cap (default 5000) rather than degrade into swapping.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import bits
from .errors import ConsistencyError, InputError

DENSE_CAP = 5000


class CoherentConfiguration:
    """A color matrix with the structural axioms validated."""

    def __init__(self, colors: np.ndarray):
        colors = np.asarray(colors)
        if colors.ndim != 2 or colors.shape[0] != colors.shape[1]:
            raise InputError("colors must be a square matrix")
        n = colors.shape[0]
        if n > DENSE_CAP:
            raise InputError(f"{n} points exceeds the dense cap {DENSE_CAP}")
        colors = colors.astype(np.int16, copy=True)
        m = int(colors.max()) + 1
        if colors.min() < 0:
            raise InputError("colors must be non-negative")
        used = np.bincount(colors.ravel(), minlength=m)
        if (used == 0).any():
            raise InputError("color indices must be contiguous from 0")
        self.colors = colors
        self.n = n
        self.num_colors = m

        diag_colors = np.unique(colors.diagonal())
        off = np.isin(colors, diag_colors)
        np.fill_diagonal(off, False)
        if off.any():
            x, y = (int(v[0]) for v in np.nonzero(off))
            raise InputError(f"diagonal color reappears off the diagonal at ({x}, {y})")
        self.diagonal_colors = tuple(int(c) for c in diag_colors)

        pairing = np.full(m, -1, dtype=np.int64)
        flat_colors, first = np.unique(colors.ravel(), return_index=True)
        for c, pos in zip(flat_colors.tolist(), first.tolist()):
            x, y = divmod(pos, n)
            pairing[c] = int(colors[y, x])
        if not np.array_equal(pairing[colors], colors.T):
            bad = np.nonzero(pairing[colors] != colors.T)
            x, y = int(bad[0][0]), int(bad[1][0])
            raise InputError(f"transpose of color {int(colors[x, y])} is not a single color (pair ({x}, {y}))")
        self.pairing = tuple(int(p) for p in pairing)

        self._representatives = {
            int(c): divmod(int(pos), n) for c, pos in zip(flat_colors.tolist(), first.tolist())
        }

    @property
    def is_homogeneous(self) -> bool:
        return len(self.diagonal_colors) == 1

    @property
    def is_symmetric(self) -> bool:
        return all(self.pairing[i] == i for i in range(self.num_colors))

    def fibers(self) -> list[np.ndarray]:
        """Point classes induced by the diagonal colors."""
        d = self.colors.diagonal()
        return [np.nonzero(d == c)[0] for c in self.diagonal_colors]

    def color_counts(self) -> np.ndarray:
        return np.bincount(self.colors.ravel(), minlength=self.num_colors)

    def __repr__(self) -> str:
        return f"CoherentConfiguration(n={self.n}, colors={self.num_colors})"


def from_orbitals(dec, cap: int = DENSE_CAP) -> CoherentConfiguration:
    """Color the pair space by orbital index."""
    n = dec.n
    if n > cap:
        raise InputError(f"degree {n} exceeds the dense cap {cap}")
    colors = np.full((n, n), -1, dtype=np.int16)
    for o in dec.orbitals:
        dense = bits.unpack_rows(o.rows, n)
        if (colors[dense] >= 0).any():
            raise ConsistencyError(f"orbital {o.index} overlaps an earlier orbital")
        colors[dense] = o.index
    if (colors < 0).any():
        raise ConsistencyError("orbitals do not cover the pair space")
    return CoherentConfiguration(colors)


def from_distance_partition(graph, cap: int = DENSE_CAP) -> CoherentConfiguration:
    """Color pairs by graph distance.  Requires a connected graph."""
    from .graphs import bfs_levels

    n = graph.n
    if n > cap:
        raise InputError(f"{n} vertices exceeds the dense cap {cap}")
    colors = np.empty((n, n), dtype=np.int16)
    for v in range(n):
        dist, _ = bfs_levels(graph, v)
        if (dist < 0).any():
            raise InputError("distance partition requires a connected graph")
        colors[v] = dist.astype(np.int16)
    return CoherentConfiguration(colors)


def intersection_numbers(cfg: CoherentConfiguration):
    """Intersection tensor, representative-first.

    Returns ``(tensor, None)`` with ``tensor[k][i][j]`` = number of z with
    colors[x,z] = i, colors[z,y] = j for (any) pair of color k, or
    ``(None, witness)`` where ``witness = ((rx, ry), (x, y), i, j)`` names a
    representative pair and a second pair of the same color whose counts for
    (i, j) differ.
    """
    colors = cfg.colors
    n, m = cfg.n, cfg.num_colors
    wide = colors.astype(np.int64)

    tensor = np.zeros((m, m, m), dtype=np.int64)
    for k, (x, y) in cfg._representatives.items():
        joint = wide[x] * m + wide[:, y]
        tensor[k] = np.bincount(joint, minlength=m * m).reshape(m, m)

    row_masks = [bits.pack_rows(colors == i) for i in range(m)]
    chunk = max(1, 2_000_000 // (n * bits.words_for(n)))
    for j in range(m):
        col_masks = bits.pack_rows((colors == j).T)
        for i in range(m):
            ri = row_masks[i]
            for start in range(0, n, chunk):
                stop = min(n, start + chunk)
                joint = ri[start:stop, None, :] & col_masks[None, :, :]
                counts = np.bitwise_count(joint).sum(axis=2, dtype=np.int64)
                expected = tensor[wide[start:stop], i, j]
                if not np.array_equal(counts, expected):
                    dx, dy = np.nonzero(counts != expected)
                    x = int(dx[0]) + start
                    y = int(dy[0])
                    rep = cfg._representatives[int(colors[x, y])]
                    return None, (rep, (x, y), i, j)
    return tensor, None


@dataclass
class ConfigurationFlags:
    coherent: bool
    homogeneous: bool
    association_scheme: bool
    witness: tuple | None = None


def classify_configuration(cfg: CoherentConfiguration) -> ConfigurationFlags:
    """Flags for a configuration; association scheme implies the other two."""
    homogeneous = cfg.is_homogeneous
    tensor, witness = intersection_numbers(cfg)
    coherent = witness is None
    return ConfigurationFlags(
        coherent=coherent,
        homogeneous=homogeneous,
        association_scheme=coherent and homogeneous and cfg.is_symmetric,
        witness=witness,
    )
