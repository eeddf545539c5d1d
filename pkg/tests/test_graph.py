import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aalpha.families import complete_bipartite_graph, complete_graph, cycle_graph, path_graph, star_graph
from aalpha.graph import (
    ScaleError,
    _pair_order,
    add_edge,
    canonical_form,
    circumference,
    complement,
    components,
    disjoint_union,
    empty_graph,
    format_edge_list,
    graph_from_canonical,
    graph_from_edges,
    is_bipartite,
    is_forest,
    matching_number,
    parse_edge_list,
    pendant_counts,
    remove_edge,
    twin_classes,
)

from .conftest import graphs, to_nx


def test_graph_from_edges_examples():
    k2 = graph_from_edges(2, [(0, 1)])
    assert k2.edges == ((0, 1),) and k2.degrees == (1, 1)
    e3 = graph_from_edges(3, [])
    assert e3.m == 0 and e3.degrees == (0, 0, 0)
    c4 = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.degrees == (2, 2, 2, 2)


def test_duplicate_edges_collapse():
    g = graph_from_edges(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edges == ((0, 1),)


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_graph_from_edges_rejects_bad_pairs(edges):
    with pytest.raises(ValueError):
        graph_from_edges(3, edges)


def test_order_cap():
    with pytest.raises(ScaleError):
        empty_graph(65)


def test_add_remove_edge():
    p3 = path_graph(3)
    assert add_edge(p3, (0, 2)) == complete_graph(3)
    assert remove_edge(complete_graph(3), (0, 2)) == p3
    assert remove_edge(add_edge(p3, (0, 2)), (0, 2)) == p3
    with pytest.raises(ValueError):
        add_edge(p3, (0, 1))
    with pytest.raises(ValueError):
        remove_edge(p3, (0, 2))
    # pure: the input is untouched
    assert p3.edges == ((0, 1), (1, 2))


def test_complement_examples():
    assert complement(complete_graph(5)).m == 0
    c4c = complement(cycle_graph(4))
    assert c4c.m == 2 and c4c.degrees == (1, 1, 1, 1)
    assert canonical_form(complement(cycle_graph(5))) == canonical_form(cycle_graph(5))


@given(graphs())
def test_complement_involution_and_partition(g):
    gc = complement(g)
    assert complement(gc) == g
    assert set(g.edges).isdisjoint(gc.edges)
    assert g.m + gc.m == g.n * (g.n - 1) // 2


@given(graphs())
def test_degree_sum(g):
    assert sum(g.degrees) == 2 * g.m


def test_components_examples():
    assert sorted(map(len, components(disjoint_union(complete_graph(2), complete_graph(1))))) == [1, 2]
    assert len(components(cycle_graph(5))) == 1
    three_k2 = disjoint_union(*[complete_graph(2)] * 3)
    assert [len(c) for c in components(three_k2)] == [2, 2, 2]


@given(graphs())
def test_components_match_networkx(g):
    ours = sorted(sorted(c) for c in components(g))
    theirs = sorted(sorted(c) for c in nx.connected_components(to_nx(g)))
    assert ours == theirs


def test_bipartite_examples():
    assert sorted(map(len, is_bipartite(cycle_graph(4)))) == [2, 2]
    assert is_bipartite(cycle_graph(5)) is None
    assert sorted(map(len, is_bipartite(star_graph(4)))) == [1, 3]


@given(graphs())
def test_bipartition_is_valid(g):
    parts = is_bipartite(g)
    assert (parts is not None) == nx.is_bipartite(to_nx(g))
    if parts is not None:
        x, y = parts
        assert x | y == set(range(g.n)) and not x & y
        assert all((u in x) != (v in x) for u, v in g.edges)
        assert matching_number(g) <= min(len(x), len(y))


def test_circumference_examples():
    assert circumference(star_graph(6)) == 0
    assert circumference(path_graph(5)) == 0
    assert circumference(cycle_graph(7)) == 7
    assert circumference(complete_graph(4)) == 4


def _nx_circumference(g):
    return max((len(c) for c in nx.simple_cycles(to_nx(g))), default=0)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_circumference_matches_cycle_enumeration(g):
    c = circumference(g)
    assert c == _nx_circumference(g)
    assert (c == 0) == is_forest(g)


def test_matching_examples():
    assert matching_number(complete_graph(2)) == 1
    assert matching_number(cycle_graph(5)) == 2
    assert matching_number(star_graph(5)) == 1


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_matching_matches_networkx(g):
    assert matching_number(g) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))


def test_exact_routines_cap():
    big = cycle_graph(13)
    with pytest.raises(ScaleError):
        circumference(big)
    with pytest.raises(ScaleError):
        matching_number(big)


def test_pendant_counts_examples():
    assert pendant_counts(star_graph(6)) == (5, 1)
    assert pendant_counts(path_graph(4)) == (2, 2)
    assert pendant_counts(cycle_graph(6)) == (0, 0)


def test_twin_classes():
    classes = dict((kind, set(v)) for kind, v in twin_classes(star_graph(4)))
    assert classes == {"independent": {1, 2, 3}}
    k4e = graph_from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert sorted(twin_classes(k4e)) == [("clique", (0, 1)), ("independent", (2, 3))]


# -- canonical form ------------------------------------------------------------------


def brute_force_canonical(g):
    pairs = _pair_order(g.n)
    best = None
    for perm in itertools.permutations(range(g.n)):
        # perm[i] = original vertex placed at position i
        code = "".join("1" if g.has_edge(perm[i], perm[j]) else "0" for i, j in pairs)
        best = code if best is None or code < best else best
    return best or ""


def test_canonical_examples():
    p3 = path_graph(3)
    relabelled = graph_from_edges(3, [(2, 0), (0, 1)])
    assert canonical_form(p3) == canonical_form(relabelled)
    assert canonical_form(cycle_graph(4)) != canonical_form(path_graph(4))
    assert canonical_form(complete_graph(3)) == "111"


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=6))
def test_canonical_is_global_minimum(g):
    assert canonical_form(g) == brute_force_canonical(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_canonical_permutation_invariance(g, rnd):
    code = canonical_form(g)
    for _ in range(20):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == code
    assert canonical_form(graph_from_canonical(g.n, code)) == code


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_canonical_separates_non_isomorphic(g, h):
    if g.n == h.n:
        same = canonical_form(g) == canonical_form(h)
        assert same == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_canonical_scale_cap():
    with pytest.raises(ScaleError):
        canonical_form(empty_graph(9))


def test_canonical_worst_case_symmetric_graphs():
    # no pruning possible for these, the search must still finish
    assert canonical_form(empty_graph(8)) == "0" * 28
    assert canonical_form(complete_graph(8)) == "1" * 28
    assert canonical_form(complete_bipartite_graph(4, 4)).count("1") == 16


def test_edge_list_roundtrip():
    g = cycle_graph(5)
    text = format_edge_list(g)
    assert text.splitlines()[0] == "5 5"
    assert parse_edge_list(text) == g


@pytest.mark.parametrize("text", ["", "3\n", "2 1\n", "2 1\n0 0\n", "2 1\n0 x\n", "2 1\n0 5\n"])
def test_edge_list_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_edge_list(text)
