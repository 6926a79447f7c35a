"""Permutations of {0, ..., n-1} stored as image arrays.

The action is on the right: ``x`` maps to ``images[x]``, and ``p * q`` is
"apply p, then q", so ``(p * q).apply(x) == q.apply(p.apply(x))``.  Points
are 0-based everywhere in code; the textual cycle and image-list forms used
in group files are 1-based.
"""

from __future__ import annotations

import re

import numpy as np

from .errors import GroupFormatError


class Permutation:
    """An immutable permutation given by its image array."""

    __slots__ = ("images",)

    def __init__(self, images):
        arr = np.array(images, dtype=np.int64)
        if arr.ndim != 1:
            raise ValueError("images must be a 1-D sequence")
        n = arr.size
        if n == 0:
            raise ValueError("degree must be at least 1")
        if arr.min() < 0 or arr.max() >= n or not (np.bincount(arr, minlength=n) == 1).all():
            raise ValueError("images do not describe a bijection of 0..n-1")
        arr.setflags(write=False)
        self.images = arr

    @property
    def degree(self) -> int:
        return self.images.size

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(np.arange(n))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Permutation":
        """Build from an iterable of cycles of 0-based points."""
        images = np.arange(n)
        seen = set()
        for cyc in cycles:
            cyc = list(cyc)
            for p in cyc:
                if not 0 <= p < n:
                    raise ValueError(f"point {p} out of range for degree {n}")
                if p in seen:
                    raise ValueError(f"point {p} appears in more than one cycle")
                seen.add(p)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(images)

    def apply(self, x: int) -> int:
        return int(self.images[x])

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(other.images[self.images])

    def inverse(self) -> "Permutation":
        inv = np.empty_like(self.images)
        inv[self.images] = np.arange(self.degree)
        return Permutation(inv)

    def is_identity(self) -> bool:
        return bool((self.images == np.arange(self.degree)).all())

    def smallest_moved(self):
        """Smallest non-fixed point, or None for the identity."""
        moved = np.nonzero(self.images != np.arange(self.degree))[0]
        return int(moved[0]) if moved.size else None

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point, sorted."""
        out = []
        seen = np.zeros(self.degree, dtype=bool)
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cyc = [start]
            seen[start] = True
            x = int(self.images[start])
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = int(self.images[x])
            out.append(tuple(cyc))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and np.array_equal(self.images, other.images)

    def __hash__(self) -> int:
        return hash((self.degree, self.images.tobytes()))

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"


def format_cycles(perm: Permutation) -> str:
    """1-based disjoint-cycle string, ``()`` for the identity."""
    cycs = perm.cycles()
    if not cycs:
        return "()"
    return "".join("(" + ",".join(str(p + 1) for p in cyc) + ")" for cyc in cycs)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse a 1-based disjoint-cycle string like ``(1,2,3)(4,5)``.

    Commas or whitespace may separate points inside a cycle.
    """
    stripped = _CYCLE_RE.sub("", text)
    if stripped.strip():
        raise GroupFormatError(f"unparseable cycle text: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        parts = [p for p in re.split(r"[,\s]+", body.strip()) if p]
        cyc = []
        for p in parts:
            try:
                v = int(p)
            except ValueError:
                raise GroupFormatError(f"bad point {p!r} in cycle {text!r}") from None
            if not 1 <= v <= degree:
                raise GroupFormatError(f"point {v} out of range 1..{degree}")
            cyc.append(v - 1)
        cycles.append(cyc)
    try:
        return Permutation.from_cycles(degree, cycles)
    except ValueError as exc:
        raise GroupFormatError(str(exc)) from None


def parse_image_list(text: str, degree: int) -> Permutation:
    """Parse a 1-based image list: n whitespace-separated integers."""
    parts = text.split()
    if len(parts) != degree:
        raise GroupFormatError(f"image list has {len(parts)} entries, expected {degree}")
    try:
        images = [int(p) - 1 for p in parts]
    except ValueError:
        raise GroupFormatError(f"bad integer in image list: {text!r}") from None
    for v in images:
        if not 0 <= v < degree:
            raise GroupFormatError(f"image {v + 1} out of range 1..{degree}")
    try:
        return Permutation(images)
    except ValueError as exc:
        raise GroupFormatError(str(exc)) from None
