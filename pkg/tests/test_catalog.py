import pytest

from orbitalg import InputError, catalog_entries, make_group
from orbitalg.catalog import (
    dihedral,
    grid,
    make_entry_group,
    parse_catalog_uri,
    subset_labels,
    subsets,
    symmetric,
)

from _oracles import mulclose, petersen_edges


@pytest.mark.parametrize("entry", catalog_entries(), ids=lambda e: e.name)
def test_entry_matches_built_group(entry):
    g = make_entry_group(entry)
    assert g.degree == entry.degree
    assert g.order() == entry.order
    assert g.is_transitive()
    assert g.metadata["name"] == entry.name


def test_entry_names_unique():
    names = [e.name for e in catalog_entries()]
    assert len(names) == len(set(names))


def test_all_entries_fit_small_sweep():
    assert all(e.degree <= 200 for e in catalog_entries())


def test_subset_labels_colex():
    labels = subset_labels(4, 2)
    assert labels == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]


def test_subsets_action_is_induced():
    g = subsets(5, 2)
    labels = subset_labels(5, 2)
    # the 5-cycle generator maps {a,b} to {a+1,b+1} mod 5
    cyc = g.generators[1]
    for i, s in enumerate(labels):
        image = tuple(sorted((x + 1) % 5 for x in s))
        assert labels[cyc.apply(i)] == image


def test_petersen_adjacency_agrees_with_disjointness():
    # orbital of disjoint pairs under subsets(5,2) = the standard labelling
    from orbitalg import decompose, union_graph

    dec = decompose(subsets(5, 2))
    g = union_graph(dec, [1])
    n, edges = petersen_edges()
    expected = set(map(tuple, map(sorted, edges)))
    got = {(u, int(v)) for u in range(n) for v in g.neighbors(u) if u < v}
    assert got == expected


def test_dihedral_order_by_closure():
    g = dihedral(6)
    assert g.order() == len(mulclose([tuple(p.images) for p in g.generators]))


def test_grid_contains_transpose_and_is_rank_3():
    from orbitalg import decompose

    g = grid(3)
    dec = decompose(g)
    assert dec.rank == 3
    assert dec.valencies == (1, 4, 4)


def test_make_group_errors():
    with pytest.raises(InputError):
        make_group("nope", 3)
    with pytest.raises(InputError):
        make_group("cyclic")  # missing parameter
    with pytest.raises(InputError):
        make_group("cyclic", 0)
    with pytest.raises(InputError):
        make_group("dihedral", 2)
    with pytest.raises(InputError):
        make_group("subsets", 3, 9)
    with pytest.raises(InputError):
        make_group("grid", 1)


def test_symmetric_1_is_trivial():
    g = symmetric(1)
    assert g.degree == 1 and g.order() == 1


def test_parse_catalog_uri():
    g = parse_catalog_uri("catalog:subsets:5,2")
    assert g.degree == 10
    assert g.metadata["name"] == "subsets-5-2"
    g = parse_catalog_uri("catalog:cyclic:6")
    assert g.degree == 6
    with pytest.raises(InputError):
        parse_catalog_uri("catalogue:cyclic:6")
    with pytest.raises(InputError):
        parse_catalog_uri("catalog:cyclic:x")
