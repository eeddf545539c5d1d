import pytest

from aalpha.families import Family, FamilySpec, build_family
from aalpha.graph import canonical_form


def test_complete():
    g = build_family(FamilySpec(Family.COMPLETE, (4,)))
    assert g.m == 6 and set(g.degrees) == {3}


def test_complete_split_degrees():
    g = build_family(FamilySpec(Family.COMPLETE_SPLIT, (2, 4)))
    assert g.degrees == (3, 3, 2, 2)


def test_complete_minus_edge_degrees():
    g = build_family(FamilySpec(Family.COMPLETE_MINUS_EDGE, (4,)))
    assert sorted(g.degrees, reverse=True) == [3, 3, 2, 2]


@pytest.mark.parametrize("n", range(2, 9))
def test_star_coincidences(n):
    star = build_family(FamilySpec(Family.STAR, (n,)))
    assert star == build_family(FamilySpec(Family.COMPLETE_BIPARTITE, (1, n - 1)))
    assert star == build_family(FamilySpec(Family.COMPLETE_SPLIT, (1, n)))


@pytest.mark.parametrize("n", range(2, 9))
def test_split_with_full_clique_is_complete(n):
    assert build_family(FamilySpec(Family.COMPLETE_SPLIT, (n - 1, n))) == build_family(FamilySpec(Family.COMPLETE, (n,)))


def test_c4_is_k22():
    c4 = build_family(FamilySpec.parse("cycle:4"))
    k22 = build_family(FamilySpec.parse("complete-bipartite:2,2"))
    assert canonical_form(c4) == canonical_form(k22)


@pytest.mark.parametrize(
    "text",
    ["cycle:2", "complete-split:0,4", "complete-split:4,4", "star:1", "complete-bipartite:0,3", "nosuch:3", "cycle:x", "cycle:3,4"],
)
def test_infeasible_specs(text):
    with pytest.raises(ValueError):
        FamilySpec.parse(text)


def test_parse_roundtrip():
    spec = FamilySpec.parse("complete_split:2,5")
    assert spec.kind is Family.COMPLETE_SPLIT and spec.params == (2, 5) and spec.order == 5
    assert FamilySpec.parse(str(spec)) == spec
