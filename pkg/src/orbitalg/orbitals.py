"""Orbital decomposition of a transitive permutation group.

The orbitals of G acting on points are the orbits of G on ordered pairs.
For a transitive group they correspond one-to-one to the orbits of the
stabilizer of the base point 0 (the suborbits): the orbital with
representative pair (0, beta) consists of all pairs (0 . u, beta . u).
Orbital 0 is always the diagonal {(x, x)}; the rest are ordered by
(valency, smallest suborbit member) so a decomposition is reproducible.

Each orbital is exposed as packed adjacency bit-rows, built lazily: row
gamma of orbital i is the suborbit S_i pushed through the coset
representative u_gamma (the group element with 0 . u_gamma = gamma), i.e.
the set {s . u_gamma : s in S_i}.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import bits
from .errors import ConsistencyError, InputError
from .groups import PermutationGroup

#: verify_axioms checks intersection-number constancy only up to this degree.
SCHEME_CAP = 500

#: above this degree, transpose-closure is spot-checked on sampled pairs.
TRANSPOSE_DENSE_CAP = 2048

_ROW_CHUNK = 2048


@dataclass
class Orbital:
    """One orbit of G on ordered pairs, with bit-row adjacency access."""

    index: int
    rep: tuple[int, int]
    valency: int
    suborbit: np.ndarray
    paired_index: int = -1
    _dec: "OrbitalDecomposition | None" = field(default=None, repr=False)
    _rows: np.ndarray | None = field(default=None, repr=False)

    @property
    def is_diagonal(self) -> bool:
        return self.rep[0] == self.rep[1]

    @property
    def is_self_paired(self) -> bool:
        return self.paired_index == self.index

    @property
    def rows(self) -> np.ndarray:
        """Packed bit matrix: bit beta of row gamma set iff (gamma, beta) is in the orbital."""
        if self._rows is None:
            self._rows = self._dec._materialize_rows(self.suborbit)
        return self._rows


class OrbitalDecomposition:
    """All orbitals of a transitive group, relative to base point 0."""

    def __init__(self, group: PermutationGroup, orbitals: list[Orbital]):
        self.group = group
        self.n = group.degree
        self.orbitals = orbitals
        self.rank = len(orbitals)
        self._transversal: np.ndarray | None = None

    @property
    def valencies(self) -> tuple[int, ...]:
        return tuple(o.valency for o in self.orbitals)

    def pairing(self) -> tuple[int, ...]:
        """Map i -> index of the transposed orbital; an involution fixing 0."""
        return tuple(o.paired_index for o in self.orbitals)

    def pairing_cycles(self) -> str:
        """The pairing as index cycles, e.g. ``(0)(1)(2 3)``."""
        out = []
        seen = set()
        for i, j in enumerate(self.pairing()):
            if i in seen:
                continue
            seen.update((i, j))
            out.append(f"({i})" if i == j else f"({i} {j})")
        return "".join(out)

    def transversal_matrix(self) -> np.ndarray:
        """Row gamma holds the image array of u_gamma (0 . u_gamma = gamma)."""
        if self._transversal is None:
            n = self.n
            dtype = np.uint16 if n <= 0xFFFF else np.int32
            U = np.empty((n, n), dtype=dtype)
            U[0] = np.arange(n, dtype=dtype)
            gens = [g.images for g in self.group.generators]
            done = np.zeros(n, dtype=bool)
            done[0] = True
            frontier = [0]
            while frontier:
                nxt = []
                for a in frontier:
                    ua = U[a]
                    for g in gens:
                        b = int(g[a])
                        if not done[b]:
                            done[b] = True
                            U[b] = g[ua]
                            nxt.append(b)
                frontier = nxt
            if not done.all():
                raise ConsistencyError("transversal did not cover the point set")
            self._transversal = U
        return self._transversal

    def _materialize_rows(self, suborbit: np.ndarray) -> np.ndarray:
        n = self.n
        U = self.transversal_matrix()
        out = bits.zeros(n, n)
        width = bits.words_for(n) * 64
        for start in range(0, n, _ROW_CHUNK):
            stop = min(n, start + _ROW_CHUNK)
            block = np.zeros((stop - start, width), dtype=bool)
            images = U[start:stop][:, suborbit].astype(np.int64)
            block[np.arange(stop - start)[:, None], images] = True
            out[start:stop] = bits.pack_rows(block)
        return out

    def drop_row_cache(self) -> None:
        """Free materialized rows and the transversal (they rebuild on demand)."""
        for o in self.orbitals:
            o._rows = None
        self._transversal = None


def decompose(group: PermutationGroup) -> OrbitalDecomposition:
    """Split the pair space into orbitals.  Requires a transitive group."""
    if not group.is_transitive():
        raise InputError("orbital decomposition requires a transitive group")
    n = group.degree
    stab = group.point_stabilizer(0)
    stab_gens = [g.images for g in stab.generators]

    orbit_of = np.full(n, -1, dtype=np.int64)
    suborbits: list[np.ndarray] = []
    for p in range(n):
        if orbit_of[p] >= 0:
            continue
        seen = np.zeros(n, dtype=bool)
        seen[p] = True
        frontier = [p]
        while frontier:
            imgs = np.concatenate([g[frontier] for g in stab_gens]) if stab_gens else np.array([], dtype=np.int64)
            fresh = np.unique(imgs[~seen[imgs]]) if imgs.size else imgs
            seen[fresh] = True
            frontier = fresh.tolist()
        members = np.nonzero(seen)[0]
        orbit_of[members] = len(suborbits)
        suborbits.append(members)

    if orbit_of.min() < 0:
        raise ConsistencyError("suborbits do not cover the point set")
    diag = int(orbit_of[0])
    if suborbits[diag].size != 1:
        raise ConsistencyError("the suborbit of the base point is not a singleton")
    rest = [i for i in range(len(suborbits)) if i != diag]
    rest.sort(key=lambda i: (suborbits[i].size, int(suborbits[i][0])))
    ordering = [diag] + rest

    orbitals = []
    for new_index, old in enumerate(ordering):
        members = suborbits[old]
        beta = int(members[0])
        orbitals.append(
            Orbital(index=new_index, rep=(0, beta), valency=int(members.size), suborbit=members)
        )
    dec = OrbitalDecomposition(group, orbitals)
    for o in orbitals:
        o._dec = dec

    # pairing: the transpose of the orbital of (0, beta) contains (beta, 0),
    # which is equivalent to (0, 0 . u_beta^-1) under the stabilizer.
    old_to_new = {old: new for new, old in enumerate(ordering)}
    level0 = group.chain_with_base(0).levels[0]
    for o in orbitals:
        beta = o.rep[1]
        u = level0.coset_rep(beta, n)
        z = int(np.nonzero(u == 0)[0][0])
        o.paired_index = old_to_new[int(orbit_of[z])]

    pairing = dec.pairing()
    if pairing[0] != 0:
        raise ConsistencyError("the diagonal orbital is not self-paired")
    for i, j in enumerate(pairing):
        if pairing[j] != i:
            raise ConsistencyError(f"orbital pairing is not an involution at {i} -> {j}")
        if orbitals[i].valency != orbitals[j].valency:
            raise ConsistencyError(f"paired orbitals {i}, {j} have different valencies")
    if sum(dec.valencies) != n:
        raise ConsistencyError("suborbit valencies do not sum to the degree")
    return dec


@dataclass
class AxiomCheck:
    name: str
    status: str  # "ok" | "failed" | "skipped"
    detail: str = ""
    witness: tuple | None = None


@dataclass
class AxiomReport:
    checks: list[AxiomCheck]

    @property
    def ok(self) -> bool:
        return all(c.status != "failed" for c in self.checks)

    def failed(self) -> list[AxiomCheck]:
        return [c for c in self.checks if c.status == "failed"]


def verify_axioms(dec: OrbitalDecomposition, scheme_cap: int = SCHEME_CAP, rng_seed: int = 7) -> AxiomReport:
    """Check the coherent-configuration axioms on a decomposition.

    Verified directly on the bit rows: the diagonal orbital is the identity
    relation; the orbitals partition the pair space; transposes map orbital
    i onto its paired orbital.  Constancy of the intersection numbers is
    delegated to the scheme module and skipped (reported as such) above
    ``scheme_cap`` points, where the dense tensor check is out of reach.
    """
    checks: list[AxiomCheck] = []
    n = dec.n

    diag = dec.orbitals[0]
    ident_ok = diag.is_diagonal and diag.valency == 1
    witness = None
    if ident_ok:
        counts = bits.popcount_rows(diag.rows)
        if not (counts == 1).all():
            ident_ok = False
            witness = (int(np.nonzero(counts != 1)[0][0]),)
        else:
            for gamma in range(n):
                if not bits.get_bit(diag.rows[gamma], gamma):
                    ident_ok = False
                    witness = (gamma,)
                    break
    checks.append(
        AxiomCheck(
            "diagonal-is-identity",
            "ok" if ident_ok else "failed",
            "orbital 0 equals the identity relation",
            witness,
        )
    )

    union = bits.zeros(n, n)
    total = np.zeros(n, dtype=np.int64)
    for o in dec.orbitals:
        union |= o.rows
        total += bits.popcount_rows(o.rows)
    full = bits.full_row(n)
    part_ok = True
    witness = None
    row_pop = bits.popcount_rows(union)
    bad = np.nonzero((row_pop != n) | (total != n))[0]
    if bad.size:
        part_ok = False
        x = int(bad[0])
        missing = np.nonzero(~bits.unpack_rows(union[x][None, :], n)[0])[0]
        y = int(missing[0]) if missing.size else -1
        witness = (x, y)
    elif not np.array_equal(union[0], full):
        part_ok = False
        witness = (0, -1)
    checks.append(
        AxiomCheck(
            "pairs-partitioned",
            "ok" if part_ok else "failed",
            "every ordered pair lies in exactly one orbital",
            witness,
        )
    )

    pair_ok = True
    witness = None
    rng = np.random.default_rng(rng_seed)
    for o in dec.orbitals:
        mate = dec.orbitals[o.paired_index]
        if n <= TRANSPOSE_DENSE_CAP:
            dense = bits.unpack_rows(o.rows, n)
            dense_mate = bits.unpack_rows(mate.rows, n)
            if not np.array_equal(dense.T, dense_mate):
                diff = np.nonzero(dense.T != dense_mate)
                pair_ok = False
                witness = (int(diff[0][0]), int(diff[1][0]), o.index)
                break
        else:
            xs = rng.integers(0, n, size=100_000)
            ys = rng.integers(0, n, size=100_000)
            for x, y in zip(xs.tolist(), ys.tolist()):
                if bits.get_bit(o.rows[x], y) != bits.get_bit(mate.rows[y], x):
                    pair_ok = False
                    witness = (x, y, o.index)
                    break
            if not pair_ok:
                break
    checks.append(
        AxiomCheck(
            "transpose-closure",
            "ok" if pair_ok else "failed",
            "the transpose of each orbital is its paired orbital",
            witness,
        )
    )

    if not (ident_ok and part_ok and pair_ok):
        checks.append(
            AxiomCheck(
                "intersection-numbers-constant",
                "skipped",
                "a prerequisite axiom already failed",
            )
        )
    elif n <= scheme_cap:
        from . import scheme

        cfg = scheme.from_orbitals(dec)
        tensor, wit = scheme.intersection_numbers(cfg)
        checks.append(
            AxiomCheck(
                "intersection-numbers-constant",
                "ok" if wit is None else "failed",
                "counts depend only on the orbital triple",
                wit,
            )
        )
    else:
        checks.append(
            AxiomCheck(
                "intersection-numbers-constant",
                "skipped",
                f"degree {n} exceeds the dense-check cap {scheme_cap}",
            )
        )
    return AxiomReport(checks)
