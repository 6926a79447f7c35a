"""Finite permutation groups given by generators, plus their file format.

Group files are plain text:

* the first non-comment line is the degree n;
* every further non-comment line is one generator, either in 1-based
  disjoint-cycle notation ``(1,2,3)(4,5)`` or as a 1-based image list
  ``perm: 2 1 3 ...`` with exactly n entries;
* ``#`` starts a comment, blank lines are skipped, line endings may be LF or
  CRLF.  Comments of the form ``# key: value`` before the degree line are
  collected as metadata (``name`` and ``primitive`` are the keys reports
  echo back).

Degrees above 2^20 are rejected up front: dense n x n work beyond that is
out of scope and better met with a clear error than an allocation failure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .chain import StabilizerChain, build_chain
from .errors import GroupFormatError, InputError
from .perms import Permutation, format_cycles, parse_cycles, parse_image_list

MAX_DEGREE = 1 << 20


@dataclass
class Orbit:
    """An orbit with a coset representative per point (point . rep = point)."""

    points: list[int]
    transversal: dict[int, Permutation]


class PermutationGroup:
    """A group given by a finite generator list on {0, ..., n-1}."""

    def __init__(self, generators, degree: int | None = None, metadata: dict | None = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise InputError("degree required when the generator list is empty")
            degree = gens[0].degree
        if degree < 1:
            raise InputError("degree must be at least 1")
        if degree > MAX_DEGREE:
            raise InputError(f"degree {degree} exceeds the supported maximum {MAX_DEGREE}")
        for g in gens:
            if g.degree != degree:
                raise InputError("generators act on different point sets")
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self.metadata: dict[str, str] = dict(metadata or {})
        self._chain: StabilizerChain | None = None
        self._stab_chains: dict[int, StabilizerChain] = {}

    # -- stabilizer chain ------------------------------------------------

    def _gen_arrays(self) -> list[np.ndarray]:
        return [g.images for g in self.generators]

    @property
    def chain(self) -> StabilizerChain:
        """The default chain; its first base point is the smallest moved point."""
        if self._chain is None:
            first = None
            for g in self.generators:
                m = g.smallest_moved()
                if m is not None and (first is None or m < first):
                    first = m
            prefix = (first,) if first is not None else ()
            self._chain = build_chain(self._gen_arrays(), self.degree, prefix)
        return self._chain

    def chain_with_base(self, point: int) -> StabilizerChain:
        """A chain whose first base point is ``point``."""
        if not 0 <= point < self.degree:
            raise InputError(f"point {point} out of range for degree {self.degree}")
        default = self._chain
        if default is not None and default.base and default.base[0] == point:
            return default
        if point not in self._stab_chains:
            self._stab_chains[point] = build_chain(self._gen_arrays(), self.degree, (point,))
        return self._stab_chains[point]

    # -- queries ----------------------------------------------------------

    def order(self) -> int:
        return self.chain.order()

    def __contains__(self, perm: Permutation) -> bool:
        return self.chain.contains(perm)

    def orbit(self, point: int) -> Orbit:
        """BFS orbit of a point with coset representatives."""
        if not 0 <= point < self.degree:
            raise InputError(f"point {point} out of range for degree {self.degree}")
        points = [point]
        tv = {point: Permutation.identity(self.degree)}
        head = 0
        while head < len(points):
            a = points[head]
            head += 1
            for g in self.generators:
                b = g.apply(a)
                if b not in tv:
                    tv[b] = tv[a] * g
                    points.append(b)
        return Orbit(points, tv)

    def orbit_points(self, point: int) -> np.ndarray:
        """Orbit as a sorted array, without building representatives."""
        seen = np.zeros(self.degree, dtype=bool)
        seen[point] = True
        frontier = [point]
        gens = self._gen_arrays()
        while frontier:
            imgs = np.concatenate([g[frontier] for g in gens]) if gens else np.array([], dtype=np.int64)
            fresh = np.unique(imgs[~seen[imgs]]) if imgs.size else imgs
            seen[fresh] = True
            frontier = fresh.tolist()
        return np.nonzero(seen)[0]

    def is_transitive(self) -> bool:
        return self.orbit_points(0).size == self.degree

    def point_stabilizer(self, point: int) -> "PermutationGroup":
        """The subgroup fixing ``point``, from a chain based there."""
        ch = self.chain_with_base(point)
        gens = [Permutation(a) for a in ch.strong_generators(1)]
        if not gens:
            gens = [Permutation.identity(self.degree)]
        return PermutationGroup(gens, self.degree)

    def __repr__(self) -> str:
        return f"PermutationGroup(degree={self.degree}, generators={len(self.generators)})"


# -- file format -----------------------------------------------------------

_META_RE = re.compile(r"^#\s*([A-Za-z][\w-]*)\s*:\s*(.*?)\s*$")


def parse_group(text: str) -> PermutationGroup:
    """Parse the group file format described in the module docstring."""
    metadata: dict[str, str] = {}
    degree: int | None = None
    gens: list[Permutation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r").strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _META_RE.match(line)
            if m and degree is None:
                metadata[m.group(1).lower()] = m.group(2)
            continue
        if degree is None:
            try:
                degree = int(line)
            except ValueError:
                raise GroupFormatError(f"line {lineno}: expected the degree, got {line!r}") from None
            if degree < 1:
                raise GroupFormatError(f"line {lineno}: degree must be positive")
            if degree > MAX_DEGREE:
                raise InputError(f"degree {degree} exceeds the supported maximum {MAX_DEGREE}")
            continue
        try:
            if line.startswith("perm:"):
                gens.append(parse_image_list(line[len("perm:"):], degree))
            else:
                gens.append(parse_cycles(line, degree))
        except GroupFormatError as exc:
            raise GroupFormatError(f"line {lineno}: {exc}") from None
    if degree is None:
        raise GroupFormatError("no degree line found")
    if not gens:
        gens = [Permutation.identity(degree)]
    return PermutationGroup(gens, degree, metadata)


def format_group(group: PermutationGroup) -> str:
    """Serialize a group in the file format (cycle notation, 1-based)."""
    lines = []
    for key in sorted(group.metadata):
        lines.append(f"# {key}: {group.metadata[key]}")
    lines.append(str(group.degree))
    for g in group.generators:
        lines.append(format_cycles(g))
    return "\n".join(lines) + "\n"


def load_group(path) -> PermutationGroup:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read group file {path}: {exc}") from None
    group = parse_group(text)
    if "name" not in group.metadata:
        stem = re.sub(r"\.[^.]*$", "", str(path).rsplit("/", 1)[-1])
        group.metadata["name"] = stem
    return group


def save_group(group: PermutationGroup, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_group(group))
