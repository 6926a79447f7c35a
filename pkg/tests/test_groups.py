import numpy as np
import pytest

from orbitalg import (
    GroupFormatError,
    Permutation,
    PermutationGroup,
    load_group,
    parse_group,
    save_group,
)
from orbitalg.groups import format_group

from _oracles import mulclose, point_orbit


CYCLIC_5 = """\
# name: c5
5
(1 2 3 4 5)
"""


def test_parse_basic():
    g = parse_group(CYCLIC_5)
    assert g.degree == 5
    assert len(g.generators) == 1
    assert g.order() == 5
    assert g.metadata["name"] == "c5"


def test_parse_image_list_line():
    # image lists are 1-based, like the cycle notation
    text = "3\nperm: 2 3 1\n"
    g = parse_group(text)
    assert g.generators[0] == Permutation([1, 2, 0])


def test_parse_comments_and_blank_lines():
    text = "# a comment\n\n4\n# another\n(1 2)\n\n(3 4)\n"
    g = parse_group(text)
    assert len(g.generators) == 2
    assert g.order() == 4


def test_parse_crlf():
    g = parse_group(CYCLIC_5.replace("\n", "\r\n"))
    assert g.order() == 5


def test_parse_no_generators_gives_trivial_group():
    g = parse_group("6\n")
    assert g.order() == 1
    assert g.generators[0].is_identity()


def test_metadata_only_before_degree():
    text = "# name: x\n# primitive: yes\n7\n(1 2 3 4 5 6 7)\n"
    g = parse_group(text)
    assert g.metadata == {"name": "x", "primitive": "yes"}


def test_parse_errors():
    with pytest.raises(GroupFormatError):
        parse_group("")
    with pytest.raises(GroupFormatError):
        parse_group("abc\n(1 2)\n")
    with pytest.raises(GroupFormatError):
        parse_group("0\n")
    with pytest.raises(GroupFormatError):
        parse_group("4\n(1 5)\n")  # point out of range
    with pytest.raises(GroupFormatError):
        parse_group("4\n(1 2\n")  # unbalanced
    with pytest.raises(GroupFormatError):
        parse_group("4\nperm: 0 1 2\n")  # wrong length
    with pytest.raises(GroupFormatError):
        parse_group("4\n(1 1 2)\n")  # repeated point


def test_degree_cap():
    from orbitalg import InputError

    with pytest.raises(InputError):
        parse_group(f"{(1 << 20) + 1}\n")


def test_round_trip(tmp_path):
    gens = [Permutation([1, 2, 3, 0, 4, 5]), Permutation([0, 1, 2, 3, 5, 4])]
    g = PermutationGroup(gens, 6, metadata={"name": "demo"})
    path = tmp_path / "demo.grp"
    save_group(g, path)
    h = load_group(path)
    assert h.degree == g.degree
    assert h.generators == g.generators
    assert h.metadata["name"] == "demo"


def test_load_sets_name_from_stem(tmp_path):
    path = tmp_path / "mygroup.grp"
    path.write_text("3\n(1 2 3)\n")
    g = load_group(path)
    assert g.metadata["name"] == "mygroup"


def test_format_is_parseable():
    g = parse_group(CYCLIC_5)
    again = parse_group(format_group(g))
    assert again.generators == g.generators
    assert again.metadata == g.metadata


def test_orbit_and_transitivity():
    g = parse_group("6\n(1 2 3)(4 5)\n")
    orb = g.orbit(0)
    expected = point_orbit([p.images for p in g.generators], 0)
    assert set(orb.points) == expected
    assert not g.is_transitive()
    # transversal really maps 0 to each orbit point
    for pt, perm in orb.transversal.items():
        assert perm.apply(0) == pt


def test_order_matches_closure():
    g = parse_group("5\n(1 2 3 4 5)\n(1 2)\n")
    elems = mulclose([tuple(p.images) for p in g.generators])
    assert g.order() == len(elems) == 120


def test_point_stabilizer():
    g = parse_group("5\n(1 2 3 4 5)\n(1 2)\n")
    stab = g.point_stabilizer(0)
    assert stab.order() == 24
    for p in stab.generators:
        assert p.apply(0) == 0


def test_contains():
    g = parse_group("4\n(1 2 3 4)\n")
    assert Permutation([2, 3, 0, 1]) in g
    assert Permutation([1, 0, 2, 3]) not in g


def test_orbit_points_matches_orbit():
    g = parse_group("7\n(1 2 3 4 5 6 7)\n(2 4 3 7 5 6)\n")
    assert np.array_equal(np.sort(g.orbit_points(0)), np.sort(g.orbit(0).points))
