"""Enumerate transpose-closed orbital unions and classify the union graphs.

Atoms are the minimal transpose-closed non-diagonal unions: a self-paired
orbital alone, or a mutually-paired orbital couple.  Candidates are the
proper non-empty subsets of the atom set (the full union is the complete
graph, the empty one has no edges; neither is interesting), enumerated in
lexicographic order of their atom-index tuples.  Every union graph is, by
construction, a regular vertex-transitive graph; that regularity is
asserted for every candidate and a failure is a ConsistencyError, not a
rejection.

Classification per candidate: strongly regular first; otherwise the full
distance-regularity check.  A connected SRG must agree with the diameter-2
intersection array -- the two routes are computed independently and
compared, and disagreement aborts the run.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .errors import ConsistencyError, InputError
from .graphs import (
    DeadlineExceeded,
    IntersectionArray,
    Rejection,
    SrgParams,
    bfs_levels,
    check_drg,
    check_regular,
    check_srg,
    connected_components,
    srg_to_array,
    union_graph,
    verify_srg_matrix_identity,
)
from .groups import PermutationGroup
from .orbitals import OrbitalDecomposition, decompose

MAX_ATOMS_DEFAULT = 20


def atoms(dec: OrbitalDecomposition) -> list[tuple[int, ...]]:
    """Minimal transpose-closed unions: singletons and paired couples."""
    pairing = dec.pairing()
    out = []
    for i in range(1, dec.rank):
        j = pairing[i]
        if j == i:
            out.append((i,))
        elif i < j:
            out.append((i, j))
    return out


@dataclass(frozen=True)
class CandidateUnion:
    """One transpose-closed union: which atoms, which orbitals."""

    index: int
    atom_indices: tuple[int, ...]
    subset: tuple[int, ...]

    def bit_string(self, rank: int) -> str:
        """Characteristic string over orbital indices 1..rank-1."""
        chosen = set(self.subset)
        return "".join("1" if i in chosen else "0" for i in range(1, rank))


def enumerate_unions(
    dec: OrbitalDecomposition,
    max_atoms: int = MAX_ATOMS_DEFAULT,
    halves: bool = False,
) -> list[CandidateUnion]:
    """All candidate unions, in lexicographic order of atom-index tuples.

    With ``halves`` only the representative of each complementary pair is
    kept (the one containing atom 0); the partner is recoverable from the
    atom set and is annotated in search reports.
    """
    at = atoms(dec)
    a = len(at)
    if a > max_atoms:
        raise InputError(
            f"{a} atoms would mean {2 ** a - 2} candidates; raise max_atoms past {a} to allow this"
        )
    masks = []
    for mask in range(1, (1 << a) - 1):
        if halves and not (mask & 1):
            continue
        masks.append(mask)
    keyed = sorted(
        masks, key=lambda m: tuple(t for t in range(a) if m & (1 << t))
    )
    out = []
    for index, mask in enumerate(keyed):
        atom_idx = tuple(t for t in range(a) if mask & (1 << t))
        subset = tuple(sorted(i for t in atom_idx for i in at[t]))
        out.append(CandidateUnion(index=index, atom_indices=atom_idx, subset=subset))
    return out


@dataclass
class CandidateResult:
    candidate: CandidateUnion
    degree: int = 0
    connected: bool = False
    components: int = 0
    kind: str = "none"  # srg | drg | disconnected | none | skipped
    srg: SrgParams | None = None
    drg: IntersectionArray | None = None
    distance_distribution: tuple[int, ...] = ()
    complement_index: int | None = None
    complement_atoms: tuple[int, ...] | None = None
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0


@dataclass
class SearchOptions:
    srg_only: bool = False
    drg_min_diameter: int = 3
    halves: bool = False
    max_atoms: int = MAX_ATOMS_DEFAULT
    threads: int = 1
    timeout: float | None = None  # per-candidate, seconds
    sample: int | None = None  # source-vertex sample for exploration only
    export_dir: str | None = None

    def validate(self) -> None:
        if self.drg_min_diameter < 1:
            raise InputError("drg-min-diameter must be at least 1")
        if self.max_atoms < 1:
            raise InputError("max-atoms must be at least 1")
        if self.threads < 1:
            raise InputError("threads must be at least 1")
        if self.timeout is not None and self.timeout <= 0:
            raise InputError("timeout must be positive")
        if self.sample is not None and self.sample < 1:
            raise InputError("sample must be at least 1")


@dataclass
class SearchReport:
    group_name: str
    degree: int
    order: int
    rank: int
    valencies: tuple[int, ...]
    pairing: tuple[int, ...]
    primitive: str | None
    atoms: list[tuple[int, ...]]
    options: SearchOptions
    results: list[CandidateResult]

    def summary(self) -> dict:
        srg_sets: list[SrgParams] = []
        drg_arrays: list[IntersectionArray] = []
        pairs = []
        counts = {"total": len(self.results), "srg": 0, "drg": 0, "disconnected": 0, "none": 0, "skipped": 0}
        for r in self.results:
            counts[r.kind] = counts.get(r.kind, 0) + 1
            if r.kind == "srg" and r.srg not in srg_sets:
                srg_sets.append(r.srg)
            if (
                r.drg is not None
                and r.drg.d >= self.options.drg_min_diameter
                and r.drg not in drg_arrays
            ):
                drg_arrays.append(r.drg)
            if r.complement_index is not None and r.candidate.index < r.complement_index:
                pairs.append((r.candidate.index, r.complement_index))
        return {
            "srg_parameter_sets": srg_sets,
            "drg_arrays": drg_arrays,
            "complement_pairs": pairs,
            "counts": counts,
        }

    def to_json_dict(self) -> dict:
        summ = self.summary()
        return {
            "group": {
                "name": self.group_name,
                "degree": self.degree,
                "order": self.order,
                "rank": self.rank,
                "valencies": list(self.valencies),
                "pairing": list(self.pairing),
                "primitive": self.primitive,
            },
            "options": {
                "srg_only": self.options.srg_only,
                "drg_min_diameter": self.options.drg_min_diameter,
                "halves": self.options.halves,
                "threads": self.options.threads,
                "timeout": self.options.timeout,
                "sample": self.options.sample,
            },
            "atoms": [list(a) for a in self.atoms],
            "candidates": [
                {
                    "index": r.candidate.index,
                    "atoms": list(r.candidate.atom_indices),
                    "subset": list(r.candidate.subset),
                    "bits": r.candidate.bit_string(self.rank),
                    "degree": r.degree,
                    "connected": r.connected,
                    "components": r.components,
                    "classification": r.kind,
                    "srg": {"v": r.srg.v, "k": r.srg.k, "lambda": r.srg.lam, "mu": r.srg.mu}
                    if r.srg
                    else None,
                    "drg": {"b": list(r.drg.b), "c": list(r.drg.c), "d": r.drg.d, "ki": list(r.drg.ki)}
                    if r.drg
                    else None,
                    "distance_distribution": list(r.distance_distribution),
                    "complement_index": r.complement_index,
                    "complement_atoms": list(r.complement_atoms) if r.complement_atoms is not None else None,
                    "notes": list(r.notes),
                }
                for r in self.results
            ],
            "summary": {
                "srg_parameter_sets": [
                    {"v": p.v, "k": p.k, "lambda": p.lam, "mu": p.mu} for p in summ["srg_parameter_sets"]
                ],
                "drg_arrays": [
                    {"b": list(a.b), "c": list(a.c), "d": a.d, "ki": list(a.ki)} for a in summ["drg_arrays"]
                ],
                "complement_pairs": [list(p) for p in summ["complement_pairs"]],
                "counts": summ["counts"],
            },
            "invariant_groups": dedup_by_invariants(self),
        }


def _classify_one(
    dec: OrbitalDecomposition, cand: CandidateUnion, options: SearchOptions
) -> CandidateResult:
    started = time.monotonic()
    deadline = started + options.timeout if options.timeout else None
    res = CandidateResult(candidate=cand)
    g = union_graph(dec, cand.subset)
    reg = check_regular(g)
    if isinstance(reg, Rejection):
        raise ConsistencyError(f"orbital union {cand.subset} is not regular: {reg}")
    res.degree = reg
    try:
        ncomp, _ = connected_components(g)
        res.components = ncomp
        res.connected = ncomp == 1
        if not res.connected:
            res.notes.append(f"disconnected({ncomp})")
        dist, sizes = bfs_levels(g, 0)
        unreachable = int((dist < 0).sum())
        res.distance_distribution = tuple(sizes) + ((unreachable,) if unreachable else ())

        srg = check_srg(g, deadline=deadline)
        if isinstance(srg, SrgParams):
            res.kind = "srg"
            res.srg = srg
            sample = None if g.n <= 5000 else 1024
            identity = verify_srg_matrix_identity(g, srg, sample_rows=sample)
            if identity is not True:
                raise ConsistencyError(
                    f"matrix identity fails for accepted {srg} on {cand.subset}: {identity}"
                )
            if res.connected:
                drg = check_drg(g, deadline=deadline)
                if not isinstance(drg, IntersectionArray) or drg != srg_to_array(srg):
                    raise ConsistencyError(
                        f"srg {srg} and distance check disagree on {cand.subset}: {drg}"
                    )
                res.drg = drg
        elif not options.srg_only:
            drg = check_drg(g, sample_vertices=options.sample, deadline=deadline)
            if isinstance(drg, IntersectionArray):
                res.drg = drg
                if drg.d >= options.drg_min_diameter:
                    res.kind = "drg"
                else:
                    res.kind = "none"
                    res.notes.append(f"distance-regular but diameter {drg.d} below threshold")
            else:
                res.kind = "disconnected" if not res.connected else "none"
                res.notes.append(str(drg))
        else:
            res.kind = "disconnected" if not res.connected else "none"
            res.notes.append(str(srg))
    except DeadlineExceeded:
        res.kind = "skipped"
        res.notes.append(f"skipped(timeout) after {options.timeout}s")
    res.seconds = time.monotonic() - started
    return res


def run_search(
    group: PermutationGroup,
    options: SearchOptions | None = None,
    dec: OrbitalDecomposition | None = None,
) -> SearchReport:
    """Decompose, enumerate, classify; returns the full report."""
    options = options or SearchOptions()
    options.validate()
    if dec is None:
        dec = decompose(group)
    at = atoms(dec)
    candidates = enumerate_unions(dec, max_atoms=options.max_atoms, halves=options.halves)

    # materialize every orbital's rows up front: all candidates reuse them,
    # and the lazy caches must not be written from worker threads
    for o in dec.orbitals:
        _ = o.rows

    if options.threads > 1 and len(candidates) > 1:
        with ThreadPoolExecutor(max_workers=options.threads) as pool:
            results = list(pool.map(lambda c: _classify_one(dec, c, options), candidates))
    else:
        results = [_classify_one(dec, c, options) for c in candidates]

    full_mask = (1 << len(at)) - 1
    by_mask = {}
    for r in results:
        mask = 0
        for t in r.candidate.atom_indices:
            mask |= 1 << t
        by_mask[mask] = r
    for r in results:
        mask = 0
        for t in r.candidate.atom_indices:
            mask |= 1 << t
        partner_mask = full_mask ^ mask
        partner_atoms = tuple(t for t in range(len(at)) if partner_mask & (1 << t))
        partner = by_mask.get(partner_mask)
        r.complement_index = partner.candidate.index if partner is not None else None
        r.complement_atoms = partner_atoms

    name = group.metadata.get("name", f"group-deg{group.degree}")
    report = SearchReport(
        group_name=name,
        degree=group.degree,
        order=group.order(),
        rank=dec.rank,
        valencies=dec.valencies,
        pairing=dec.pairing(),
        primitive=group.metadata.get("primitive"),
        atoms=at,
        options=options,
        results=results,
    )
    if options.export_dir:
        from . import graph6

        export_kinds = {"srg"} if options.srg_only else {"srg", "drg"}
        os.makedirs(options.export_dir, exist_ok=True)
        for r in results:
            if r.kind not in export_kinds:
                continue
            g = union_graph(dec, r.candidate.subset)
            fname = f"{_safe_name(name)}_{r.candidate.bit_string(dec.rank)}.g6"
            graph6.write_file(g, os.path.join(options.export_dir, fname))
            r.notes.append(f"exported {fname}")
    return report


def _safe_name(name: str) -> str:
    return "".join(ch if ch.isalnum() or ch in "-._" else "-" for ch in name)


def dedup_by_invariants(report: SearchReport) -> dict:
    """Bucket candidates by cheap invariants.

    Same bucket means same classification, parameters and distance
    distribution -- necessary for isomorphism, nowhere near sufficient.  No
    isomorphism testing happens anywhere in this package.
    """
    buckets: dict[tuple, list[int]] = {}
    for r in report.results:
        key = (
            r.kind,
            r.degree,
            tuple(r.srg) if r.srg else None,
            (r.drg.b, r.drg.c) if r.drg else None,
            r.distance_distribution,
        )
        buckets.setdefault(key, []).append(r.candidate.index)
    out = []
    for key, members in buckets.items():
        kind, degree, srg, drg, dist = key
        out.append(
            {
                "classification": kind,
                "degree": degree,
                "srg": list(srg) if srg else None,
                "drg": [list(drg[0]), list(drg[1])] if drg else None,
                "distance_distribution": list(dist),
                "members": members,
            }
        )
    return {
        "note": "same invariants, isomorphism not checked",
        "buckets": out,
    }
