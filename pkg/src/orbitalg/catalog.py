"""Built-in permutation group families.

Five parameterized families cover the usual smoke-test territory:

* ``symmetric(n)`` -- S_n in its natural action;
* ``subsets(n, k)`` -- S_n acting on k-element subsets, labelled in
  colexicographic order (so e.g. ``subsets(5, 2)`` is the rank-3 action
  behind the Petersen graph and ``subsets(7, 3)`` the one behind the
  Johnson graph J(7,3));
* ``cyclic(n)`` -- a single n-cycle;
* ``dihedral(n)`` -- the symmetries of an n-gon, n >= 3;
* ``grid(m)`` -- row permutations, column permutations and the transpose
  acting on the m x m cell grid (the rank-3 action behind the rook graph).

Every builder asserts transitivity of the result; a failure there is a bug
in the builder, not bad input.  ``DEFAULT_ENTRIES`` lists the concrete
instances shown by ``catalog list`` and swept by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial
from typing import Callable

from .errors import ConsistencyError, InputError
from .groups import MAX_DEGREE, PermutationGroup
from .perms import Permutation


def _finish(group: PermutationGroup, name: str) -> PermutationGroup:
    group.metadata["name"] = name
    if not group.is_transitive():
        raise ConsistencyError(f"catalog group {name} is not transitive")
    return group


def symmetric(n: int) -> PermutationGroup:
    if n < 1:
        raise InputError("symmetric: n must be at least 1")
    if n == 1:
        gens = [Permutation.identity(1)]
    else:
        gens = [Permutation.from_cycles(n, [(0, 1)]), Permutation.from_cycles(n, [tuple(range(n))])]
    return _finish(PermutationGroup(gens, n), f"symmetric-{n}")


def subset_labels(n: int, k: int) -> list[tuple[int, ...]]:
    """k-subsets of {0..n-1} in colexicographic order."""
    return sorted(combinations(range(n), k), key=lambda s: tuple(reversed(s)))


def subsets(n: int, k: int) -> PermutationGroup:
    if not 1 <= k <= n:
        raise InputError("subsets: need 1 <= k <= n")
    degree = comb(n, k)
    if degree > MAX_DEGREE:
        raise InputError(f"subsets: C({n},{k}) = {degree} exceeds the degree cap {MAX_DEGREE}")
    labels = subset_labels(n, k)
    position = {s: i for i, s in enumerate(labels)}

    def induced(g: Permutation) -> Permutation:
        images = [position[tuple(sorted(g.apply(x) for x in s))] for s in labels]
        return Permutation(images)

    gens = [induced(g) for g in symmetric(n).generators]
    return _finish(PermutationGroup(gens, degree), f"subsets-{n}-{k}")


def cyclic(n: int) -> PermutationGroup:
    if n < 1:
        raise InputError("cyclic: n must be at least 1")
    gen = Permutation.identity(1) if n == 1 else Permutation.from_cycles(n, [tuple(range(n))])
    return _finish(PermutationGroup([gen], n), f"cyclic-{n}")


def dihedral(n: int) -> PermutationGroup:
    if n < 3:
        raise InputError("dihedral: n must be at least 3")
    rotation = Permutation.from_cycles(n, [tuple(range(n))])
    reflection = Permutation([(n - x) % n for x in range(n)])
    return _finish(PermutationGroup([rotation, reflection], n), f"dihedral-{n}")


def grid(m: int) -> PermutationGroup:
    if m < 2:
        raise InputError("grid: m must be at least 2")
    n = m * m
    if n > MAX_DEGREE:
        raise InputError(f"grid: {m}^2 exceeds the degree cap {MAX_DEGREE}")

    def cell(r, c):
        return r * m + c

    def from_row_perm(p: Permutation) -> Permutation:
        return Permutation([cell(p.apply(r), c) for r in range(m) for c in range(m)])

    gens = [from_row_perm(g) for g in symmetric(m).generators]
    gens.append(Permutation([cell(c, r) for r in range(m) for c in range(m)]))
    return _finish(PermutationGroup(gens, n), f"grid-{m}")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    family: str
    params: tuple[int, ...]
    degree: int
    order: int
    note: str


_FAMILIES: dict[str, Callable[..., PermutationGroup]] = {
    "symmetric": symmetric,
    "subsets": subsets,
    "cyclic": cyclic,
    "dihedral": dihedral,
    "grid": grid,
}


def make_group(family: str, *params: int) -> PermutationGroup:
    """Instantiate a catalog family by name."""
    if family not in _FAMILIES:
        raise InputError(f"unknown catalog family {family!r}; known: {', '.join(sorted(_FAMILIES))}")
    try:
        return _FAMILIES[family](*params)
    except TypeError:
        raise InputError(f"wrong parameter count for catalog family {family!r}: {params}") from None


def _entry(family: str, *params: int, note: str) -> CatalogEntry:
    if family == "symmetric":
        degree, order = params[0], factorial(params[0])
    elif family == "subsets":
        degree, order = comb(params[0], params[1]), factorial(params[0])
    elif family == "cyclic":
        degree, order = params[0], params[0]
    elif family == "dihedral":
        degree, order = params[0], 2 * params[0]
    elif family == "grid":
        degree, order = params[0] ** 2, 2 * factorial(params[0]) ** 2
    else:
        raise InputError(f"unknown catalog family {family!r}")
    name = "-".join([family] + [str(p) for p in params])
    return CatalogEntry(name=name, family=family, params=params, degree=degree, order=order, note=note)


def catalog_entries() -> list[CatalogEntry]:
    """The concrete instances listed by the CLI and swept in tests."""
    return [
        _entry("symmetric", 4, note="natural action, 2-transitive (rank 2)"),
        _entry("symmetric", 5, note="natural action, 2-transitive (rank 2)"),
        _entry("symmetric", 6, note="natural action, 2-transitive (rank 2)"),
        _entry("cyclic", 1, note="trivial group on one point"),
        _entry("cyclic", 5, note="regular action, rank 5"),
        _entry("cyclic", 7, note="regular action, rank 7"),
        _entry("cyclic", 12, note="regular action, rank 12"),
        _entry("dihedral", 3, note="triangle symmetries"),
        _entry("dihedral", 5, note="pentagon symmetries, rank 3"),
        _entry("dihedral", 8, note="octagon symmetries"),
        _entry("dihedral", 12, note="12-gon symmetries"),
        _entry("subsets", 5, 2, note="rank 3; unions give the Petersen graph and its complement"),
        _entry("subsets", 6, 2, note="rank 3 on 15 points"),
        _entry("subsets", 6, 3, note="rank 4 on 20 points"),
        _entry("subsets", 7, 2, note="rank 3 on 21 points"),
        _entry("subsets", 7, 3, note="rank 4 on 35 points; distance-regular unions"),
        _entry("subsets", 8, 3, note="rank 4 on 56 points"),
        _entry("subsets", 9, 2, note="rank 3 on 36 points"),
        _entry("subsets", 10, 3, note="rank 4 on 120 points"),
        _entry("grid", 2, note="2x2 grid, rank 2"),
        _entry("grid", 3, note="3x3 grid, rank 3 (rook graph)"),
        _entry("grid", 4, note="4x4 grid, rank 3 (rook graph)"),
        _entry("grid", 5, note="5x5 grid, rank 3 (rook graph)"),
        _entry("grid", 6, note="6x6 grid, rank 3 (rook graph)"),
    ]


def make_entry_group(entry: CatalogEntry) -> PermutationGroup:
    return make_group(entry.family, *entry.params)


def parse_catalog_uri(text: str) -> PermutationGroup:
    """Parse ``catalog:family:p1,p2`` (e.g. ``catalog:subsets:5,2``)."""
    parts = text.split(":")
    if len(parts) < 2 or parts[0] != "catalog":
        raise InputError(f"not a catalog reference: {text!r}")
    family = parts[1]
    params: tuple[int, ...] = ()
    if len(parts) > 2 and parts[2]:
        try:
            params = tuple(int(tok) for tok in parts[2].replace(",", " ").split())
        except ValueError:
            raise InputError(f"bad catalog parameters in {text!r}") from None
    return make_group(family, *params)
