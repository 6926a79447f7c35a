"""Deterministic stabilizer chains (Schreier-Sims).

A chain is a sequence of levels; level i holds a base point b_i, the strong
generators fixing b_0..b_{i-1}, and a Schreier vector for the orbit of b_i
under those generators.  Construction is fully deterministic: orbits are
grown breadth-first with generators in list order, Schreier generators are
processed in sorted-orbit-point order, and a new base point is always the
smallest point moved by the residue that forced it.  The same generator list
therefore always yields the same base, the same orbits and the same order.

Everything here works on raw image arrays (``np.int64``); the wrapper types
in :mod:`orbitalg.groups` convert at the boundary.
"""

from __future__ import annotations

from collections import deque

import numpy as np

from .perms import Permutation

_TABLE_BUDGET = 64_000_000  # transversal-table entries (~512 MB of int64)


class ChainLevel:
    """One level: base point, generators fixing the base prefix, orbit."""

    __slots__ = ("point", "gens", "schreier")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[np.ndarray] = []
        # orbit point -> (parent point, generator index); the root maps to None
        self.schreier: dict[int, tuple[int, int] | None] = {point: None}

    def recompute_orbit(self) -> None:
        sv: dict[int, tuple[int, int] | None] = {self.point: None}
        queue = deque([self.point])
        while queue:
            a = queue.popleft()
            for gi, g in enumerate(self.gens):
                b = int(g[a])
                if b not in sv:
                    sv[b] = (a, gi)
                    queue.append(b)
        self.schreier = sv

    def path(self, b: int) -> list[int]:
        """Generator indices along the Schreier tree from b up to the root."""
        out = []
        x = b
        while True:
            edge = self.schreier[x]
            if edge is None:
                return out
            parent, gi = edge
            out.append(gi)
            x = parent

    def coset_rep(self, b: int, n: int) -> np.ndarray:
        """Image array u with point . u = b, composed along the Schreier tree."""
        u = np.arange(n, dtype=np.int64)
        for gi in reversed(self.path(b)):
            u = self.gens[gi][u]
        return u

    def transversal(self, n: int) -> dict[int, np.ndarray]:
        """Full coset representative table for this level's orbit."""
        tv = {self.point: np.arange(n, dtype=np.int64)}
        for b, edge in self.schreier.items():
            if edge is None:
                continue
            parent, gi = edge
            tv[b] = self.gens[gi][tv[parent]]
        return tv


class StabilizerChain:
    """A complete strong generating set organised by levels."""

    def __init__(self, degree: int, levels: list[ChainLevel]):
        self.degree = degree
        self.levels = levels

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(lv.point for lv in self.levels)

    def order(self) -> int:
        out = 1
        for lv in self.levels:
            out *= len(lv.schreier)
        return out

    def sift(self, images: np.ndarray, start: int = 0) -> tuple[np.ndarray, int]:
        """Strip an element through the chain.

        Returns (residue, level): the residue after dividing out coset
        representatives, and the first level whose orbit could not absorb it
        (``len(self.levels)`` when it sifted all the way through).
        """
        h = np.asarray(images, dtype=np.int64)
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            b = int(h[lv.point])
            if b not in lv.schreier:
                return h, i
            u = lv.coset_rep(b, self.degree)
            inv_u = np.empty_like(u)
            inv_u[u] = np.arange(self.degree, dtype=np.int64)
            h = inv_u[h]
        return h, len(self.levels)

    def contains(self, perm: Permutation | np.ndarray) -> bool:
        images = perm.images if isinstance(perm, Permutation) else np.asarray(perm)
        if images.size != self.degree:
            return False
        residue, level = self.sift(images)
        return level == len(self.levels) and bool(
            (residue == np.arange(self.degree)).all()
        )

    def strong_generators(self, level: int = 0) -> list[np.ndarray]:
        """Strong generators fixing the first ``level`` base points."""
        if level >= len(self.levels):
            return []
        return list(self.levels[level].gens)


def build_chain(
    generators: list[np.ndarray], degree: int, base_prefix: tuple[int, ...] = ()
) -> StabilizerChain:
    """Run deterministic Schreier-Sims over the given image arrays.

    ``base_prefix`` forces the leading base points (used to read off point
    stabilizers); further base points are chosen as the smallest point moved
    by the residue that required them.
    """
    n = degree
    identity = np.arange(n, dtype=np.int64)
    levels: list[ChainLevel] = []
    seen_prefix = set()
    for p in base_prefix:
        if not 0 <= p < n:
            raise ValueError(f"base point {p} out of range for degree {n}")
        if p not in seen_prefix:
            seen_prefix.add(p)
            levels.append(ChainLevel(p))

    def add_strong(g: np.ndarray, first: int) -> int:
        """Insert g (which fixes base[0..first-1]) into every level it joins."""
        target = None
        for idx in range(first, len(levels)):
            if g[levels[idx].point] != levels[idx].point:
                target = idx
                break
        if target is None:
            moved = int(np.nonzero(g != identity)[0][0])
            levels.append(ChainLevel(moved))
            target = len(levels) - 1
        for idx in range(first, target + 1):
            levels[idx].gens.append(g)
            levels[idx].recompute_orbit()
        return target

    for g in generators:
        arr = np.asarray(g, dtype=np.int64)
        if not (arr == identity).all():
            add_strong(arr.copy(), 0)

    chain = StabilizerChain(n, levels)
    i = len(levels) - 1
    while i >= 0:
        lv = levels[i]
        # Full transversal tables are fastest but cost |orbit| * n words, so
        # above a budget fall back to composing along Schreier-tree paths.
        use_table = len(lv.schreier) * n <= _TABLE_BUDGET
        tv = lv.transversal(n) if use_table else None
        inv_gens = None
        if not use_table:
            inv_gens = []
            for g in lv.gens:
                inv = np.empty_like(g)
                inv[g] = identity
                inv_gens.append(inv)
        dirty = None
        for b in sorted(lv.schreier):
            u_b = tv[b] if use_table else lv.coset_rep(b, n)
            for x in lv.gens:
                c = int(x[b])
                g = x[u_b]
                if use_table:
                    u_c = tv[c]
                    if np.array_equal(g, u_c):
                        continue
                    inv_uc = np.empty_like(u_c)
                    inv_uc[u_c] = identity
                    schreier_gen = inv_uc[g]
                else:
                    schreier_gen = g
                    for gi in lv.path(c):
                        schreier_gen = inv_gens[gi][schreier_gen]
                    if (schreier_gen == identity).all():
                        continue
                residue, j = chain.sift(schreier_gen, i + 1)
                if not (residue == identity).all():
                    dirty = (residue, j)
                    break
            if dirty is not None:
                break
        if dirty is None:
            i -= 1
            continue
        residue, j = dirty
        landed = add_strong(residue, i + 1)
        if landed != j:
            # the residue must drop exactly where sifting stopped
            raise AssertionError("schreier-sims bookkeeping out of step")
        i = landed
    return chain
