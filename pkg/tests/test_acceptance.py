"""End-to-end acceptance runs, one test per criterion.

Each criterion prints a single PASS/FAIL line (run with ``-s`` or ``-rA`` to
see them on success).  The desk-scale criteria (1-5) run on built-in groups
and enforce their stated wall-clock limits.  The large-group criteria (6-9)
need externally fetched generator files -- see ``docs/data.md`` -- and are
skipped when the files are absent; their time targets are printed, not
asserted, since they were set for desktop hardware.
"""

import time
from contextlib import contextmanager

import pytest

from orbitalg import (
    Graph,
    IntersectionArray,
    SearchOptions,
    SrgParams,
    bits,
    check_drg,
    check_regular,
    check_srg,
    check_symmetric_design,
    decompose,
    from_distance_partition,
    intersection_numbers,
    load_group,
    run_search,
    union_graph,
    verify_axioms,
    verify_srg_matrix_identity,
)
from orbitalg.catalog import catalog_entries, cyclic, grid, make_entry_group, subsets
from orbitalg.graphs import Rejection

from conftest import data_file


@contextmanager
def criterion(num: int, detail: str, limit: float | None = None, target: float | None = None):
    t0 = time.monotonic()
    status = "FAIL"
    try:
        yield
        elapsed = time.monotonic() - t0
        if limit is not None and elapsed >= limit:
            raise AssertionError(f"criterion {num} took {elapsed:.2f}s, limit {limit}s")
        status = "PASS"
    except pytest.skip.Exception:
        status = "SKIP"
        raise
    finally:
        elapsed = time.monotonic() - t0
        goal = f", limit {limit}s" if limit is not None else (f", target {target}s" if target else "")
        print(f"criterion {num}: {status} ({elapsed:.2f}s{goal}) -- {detail}")


def test_criterion_1_petersen_pipeline():
    with criterion(1, "rank-3 action on 2-subsets of 5: both srg unions, drg array", limit=1.0):
        group = subsets(5, 2)
        dec = decompose(group)
        assert dec.rank == 3
        assert dec.valencies == (1, 3, 6)
        report = run_search(group, SearchOptions(), dec=dec)
        assert report.summary()["srg_parameter_sets"] == [
            SrgParams(10, 3, 0, 1),
            SrgParams(10, 6, 3, 4),
        ]
        petersen = union_graph(dec, [1])
        arr = check_drg(petersen)
        assert isinstance(arr, IntersectionArray)
        assert str(arr) == "{3,2;1,1}"


def test_criterion_2_johnson_distance_partition():
    with criterion(2, "J(7,3): drg {12,6,2;1,4,9}, scheme c_k = p[k][k-1][1]", limit=5.0):
        group = subsets(7, 3)
        dec = decompose(group)
        twelve = next(o.index for o in dec.orbitals if o.valency == 12)
        g = union_graph(dec, [twelve])
        arr = check_drg(g)
        assert isinstance(arr, IntersectionArray)
        assert str(arr) == "{12,6,2;1,4,9}"
        assert arr.d == 3
        cfg = from_distance_partition(g)
        tensor, witness = intersection_numbers(cfg)
        assert witness is None
        c = [int(tensor[k][k - 1][1]) for k in range(1, arr.d + 1)]
        assert tuple(c) == arr.c


def test_criterion_3_rook_matrix_identity():
    with criterion(3, "grid m=4: srg(16,6,2,2), A^2 identity entrywise", limit=1.0):
        group = grid(4)
        report = run_search(group)
        params = report.summary()["srg_parameter_sets"]
        assert SrgParams(16, 6, 2, 2) in params
        dec = decompose(group)
        six = next(o.index for o in dec.orbitals if o.valency == 6)
        g = union_graph(dec, [six])
        p = check_srg(g)
        assert p == SrgParams(16, 6, 2, 2)
        assert verify_srg_matrix_identity(g, p) is True


def test_criterion_4_axiom_suite_over_catalog():
    entries = [e for e in catalog_entries() if e.degree <= 200]
    with criterion(4, f"axioms, tensors and identities on {len(entries)} catalog groups", limit=30.0):
        for entry in entries:
            group = make_entry_group(entry)
            dec = decompose(group)
            report = verify_axioms(dec)
            assert report.ok, f"{entry.name}: {report.failed()}"
            tensor_check = next(
                c for c in report.checks if c.name == "intersection-numbers-constant"
            )
            assert tensor_check.status == "ok", entry.name
            assert sum(dec.valencies) == entry.degree
            pairing = dec.pairing()
            assert all(pairing[j] == i for i, j in enumerate(pairing)), entry.name
            orbit = group.orbit(0)
            stab = group.point_stabilizer(0)
            assert len(orbit.points) * stab.order() == group.order(), entry.name


def test_criterion_5_negative_fixtures():
    with criterion(5, "P_3, K_5, 2-component union, perturbed decomposition"):
        p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
        reg = check_regular(p3)
        assert isinstance(reg, Rejection) and reg.reason.startswith("not regular")

        k5 = Graph.from_edges(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
        srg = check_srg(k5)
        assert isinstance(srg, Rejection) and srg.reason == "degenerate"

        dec6 = decompose(cyclic(6))
        two_triangles = union_graph(dec6, [2, 4])
        drg = check_drg(two_triangles)
        assert isinstance(drg, Rejection) and drg.reason == "disconnected"

        dec = decompose(subsets(5, 2))
        target = dec.orbitals[1]
        _ = target.rows
        y = int(target.suborbit[0])
        bits.clear_bit(target._rows[0], y)
        report = verify_axioms(dec)
        partition = next(c for c in report.checks if c.name == "pairs-partitioned")
        assert partition.status == "failed"
        assert partition.witness == (0, y)


G24_ORDER = 251_596_800
TITS_ORDER = 17_971_200


@pytest.mark.requires_data
def test_criterion_6_g24_416():
    path = data_file("g24_416.grp")
    with criterion(6, "G2(4) on 416 points: exactly one srg (416,100,36,20)", target=120):
        group = load_group(path)
        assert group.degree == 416
        assert group.order() == G24_ORDER
        report = run_search(group, SearchOptions(threads=2))
        srgs = [r for r in report.results if r.kind == "srg"]
        assert len(srgs) == 1
        assert srgs[0].srg == SrgParams(416, 100, 36, 20)


@pytest.mark.requires_data
def test_criterion_7_g24_1365_rank4():
    path = data_file("g24_1365.grp")
    with criterion(
        7,
        "G2(4) on 1365 points: srg(1365,340,83,85), drg {20,16,16;1,1,5}, "
        "design 2-(1365,341,85) (85 forced by the counting identity; "
        "the published table prints 58)",
        target=900,
    ):
        group = load_group(path)
        assert group.degree == 1365
        assert group.order() == G24_ORDER
        dec = decompose(group)
        assert dec.rank == 4
        stab = group.point_stabilizer(0)
        assert stab.order() == 184320
        report = run_search(group, SearchOptions(threads=2, drg_min_diameter=3), dec=dec)
        summ = report.summary()
        assert SrgParams(1365, 340, 83, 85) in summ["srg_parameter_sets"]
        assert "{20,16,16;1,1,5}" in {str(a) for a in summ["drg_arrays"]}
        srg_result = next(r for r in report.results if r.srg == SrgParams(1365, 340, 83, 85))
        g = union_graph(dec, srg_result.candidate.subset)
        design = check_symmetric_design(g, "one")
        assert (design.v, design.k, design.lam) == (1365, 341, 85)


@pytest.mark.requires_data
@pytest.mark.parametrize(
    "fname,degree,array",
    [
        ("tits_1755.grp", 1755, "{10,8,8,8;1,1,1,5}"),
        ("tits_2925.grp", 2925, "{12,8,8,8;1,1,1,3}"),
    ],
)
def test_criterion_8_tits_group(fname, degree, array):
    path = data_file(fname)
    with criterion(8, f"Tits group on {degree} points: drg {array}", target=1800):
        group = load_group(path)
        assert group.degree == degree
        assert group.order() == TITS_ORDER
        report = run_search(group, SearchOptions(threads=2, drg_min_diameter=3))
        assert array in {str(a) for a in report.summary()["drg_arrays"]}


@pytest.mark.requires_data
def test_criterion_9_g24_4095():
    path = data_file("g24_4095.grp")
    with criterion(
        9, "G2(4) on 4095 points: srg(4095,2046,1021,1023), design 2-(4095,2047,1023)", target=3600
    ):
        group = load_group(path)
        assert group.degree == 4095
        assert group.order() == G24_ORDER
        dec = decompose(group)
        report = run_search(group, SearchOptions(threads=2, srg_only=True), dec=dec)
        target_params = SrgParams(4095, 2046, 1021, 1023)
        assert target_params in report.summary()["srg_parameter_sets"]
        srg_result = next(r for r in report.results if r.srg == target_params)
        g = union_graph(dec, srg_result.candidate.subset)
        design = check_symmetric_design(g, "one")
        assert (design.v, design.k, design.lam) == (4095, 2047, 1023)
