"""Graph layer: cliques, components, purity, perfection, stable sets."""

from itertools import combinations

import pytest

from gstab.errors import FormatError, SizeGuardError
from gstab.graphs import (
    Graph,
    chromatic_number,
    clique_number,
    complement,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    graphs_up_to_iso,
    has_odd_hole,
    is_perfect,
    is_pure,
    maximal_cliques,
    parse_graph_json,
    path_graph,
    paw_graph,
    stable_sets,
)


# -- independent brute-force oracles ----------------------------------------

def brute_maximal_cliques(g: Graph):
    """All subsets, keep cliques, keep the inclusion-maximal ones."""
    verts = range(1, g.n + 1)
    cliques = [set(s) for size in range(1, g.n + 1)
               for s in combinations(verts, size)
               if all(g.has_edge(i, j) for i, j in combinations(s, 2))]
    maximal = [c for c in cliques if not any(c < d for d in cliques)]
    return sorted(tuple(sorted(c)) for c in maximal)


def brute_stable_sets(g: Graph):
    verts = range(1, g.n + 1)
    out = [s for size in range(g.n + 1) for s in combinations(verts, size)
           if not any(g.has_edge(i, j) for i, j in combinations(s, 2))]
    return sorted(out, key=lambda s: (len(s), s))


def brute_clique_count(g: Graph):
    """Number of cliques including the empty one."""
    verts = range(1, g.n + 1)
    return sum(1 for size in range(g.n + 1) for s in combinations(verts, size)
               if all(g.has_edge(i, j) for i, j in combinations(s, 2)))


# -- maximal cliques ---------------------------------------------------------

def test_maximal_cliques_complete():
    cx = maximal_cliques(complete_graph(3))
    assert cx.maximal_cliques == ((1, 2, 3),)
    assert cx.dim == 2


def test_maximal_cliques_path():
    cx = maximal_cliques(path_graph(3))
    assert cx.maximal_cliques == ((1, 2), (2, 3))
    assert cx.dim == 1


def test_maximal_cliques_paw_against_brute():
    cx = maximal_cliques(paw_graph())
    assert list(cx.maximal_cliques) == brute_maximal_cliques(paw_graph())
    assert cx.maximal_cliques == ((1, 2, 3), (3, 4))
    assert cx.dim == 2


def test_maximal_cliques_match_brute_on_all_small_graphs():
    for n in range(1, 6):
        for g in graphs_up_to_iso(n):
            assert list(maximal_cliques(g).maximal_cliques) == brute_maximal_cliques(g)


def test_isolated_vertex_is_a_maximal_clique():
    g = disjoint_union(complete_graph(2), complete_graph(1))
    assert (3,) in maximal_cliques(g).maximal_cliques


def test_every_vertex_in_some_maximal_clique():
    for n in range(1, 6):
        for g in graphs_up_to_iso(n):
            covered = {v for c in maximal_cliques(g).maximal_cliques for v in c}
            assert covered == set(range(1, n + 1))


# -- components --------------------------------------------------------------

def test_components_k3_plus_k1():
    comps = connected_components(disjoint_union(complete_graph(3), complete_graph(1)))
    assert [c.graph.n for c in comps] == [3, 1]
    assert comps[0].vertices == (1, 2, 3)
    assert comps[1].vertices == (4,)


def test_components_connected_graph_is_itself():
    g = path_graph(4)
    comps = connected_components(g)
    assert len(comps) == 1
    assert comps[0].graph == g


def test_components_sorted_by_dim():
    # K1 u K2 must come back as [K2, K1] (dims 1 >= 0)
    comps = connected_components(disjoint_union(complete_graph(1), complete_graph(2)))
    assert [c.graph.n for c in comps] == [2, 1]
    assert comps[0].vertices == (2, 3)


def test_component_relabeling_preserves_edges():
    g = Graph.from_edges(5, [(2, 4), (1, 5)])
    for comp in connected_components(g):
        for i, j in comp.graph.edges:
            assert g.has_edge(comp.vertices[i - 1], comp.vertices[j - 1])


# -- purity ------------------------------------------------------------------

def test_is_pure():
    assert is_pure(path_graph(3))
    assert not is_pure(paw_graph())
    assert not is_pure(disjoint_union(complete_graph(2), complete_graph(1)))


# -- perfection --------------------------------------------------------------

def test_c5_not_perfect():
    c5 = cycle_graph(5)
    assert chromatic_number(c5) == 3
    assert clique_number(c5) == 2
    assert not is_perfect(c5)


def test_complete_graphs_perfect():
    for n in range(1, 7):
        assert is_perfect(complete_graph(n))


def test_c4_perfect():
    assert is_perfect(cycle_graph(4))


def test_perfection_routes_agree_up_to_five_vertices():
    for n in range(1, 6):
        for g in graphs_up_to_iso(n):
            via_holes = not (has_odd_hole(g) or has_odd_hole(complement(g)))
            assert is_perfect(g) == via_holes


def test_perfection_self_complementary():
    for n in range(1, 6):
        for g in graphs_up_to_iso(n):
            assert is_perfect(g) == is_perfect(complement(g))


def test_perfection_size_guard():
    with pytest.raises(SizeGuardError):
        is_perfect(empty_graph(13))
    assert is_perfect(empty_graph(13), limit=13)


def test_chromatic_number_size_guard():
    with pytest.raises(SizeGuardError):
        chromatic_number(empty_graph(13))
    assert chromatic_number(empty_graph(13), limit=13) == 1


# -- stable sets -------------------------------------------------------------

def test_stable_sets_k2():
    assert stable_sets(complete_graph(2)) == ((), (1,), (2,))


def test_stable_sets_empty_graph():
    assert len(stable_sets(empty_graph(2))) == 4


def test_stable_sets_path():
    assert stable_sets(path_graph(3)) == ((), (1,), (2,), (3,), (1, 3))


def test_stable_sets_match_brute():
    for n in range(1, 6):
        for g in graphs_up_to_iso(n):
            assert list(stable_sets(g)) == brute_stable_sets(g)


def test_stable_set_count_equals_complement_clique_count():
    for n in range(1, 6):
        for g in graphs_up_to_iso(n):
            assert len(stable_sets(g)) == brute_clique_count(complement(g))


# -- complement --------------------------------------------------------------

def test_complement_involution():
    for n in range(1, 6):
        for g in graphs_up_to_iso(n):
            assert complement(complement(g)) == g


# -- construction and parsing ------------------------------------------------

def test_graph_rejects_loops_and_bad_range():
    with pytest.raises(FormatError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(FormatError):
        Graph.from_edges(3, [(1, 4)])


def test_parse_graph_json_roundtrip():
    g = parse_graph_json('{"n": 3, "edges": [[1, 2], [2, 3]]}')
    assert g == path_graph(3)


def test_parse_graph_json_rejects_duplicates():
    with pytest.raises(FormatError):
        parse_graph_json('{"n": 3, "edges": [[1, 2], [1, 2]]}')
    with pytest.raises(FormatError):
        parse_graph_json('{"n": 3, "edges": [[1, 2], [2, 1]]}')


def test_parse_graph_json_rejects_garbage():
    with pytest.raises(FormatError):
        parse_graph_json("not json")
    with pytest.raises(FormatError):
        parse_graph_json('{"n": 2}')
    with pytest.raises(FormatError):
        parse_graph_json('{"n": 2, "edges": [[1, 1]]}')
    with pytest.raises(FormatError):
        parse_graph_json('{"n": -1, "edges": []}')


# -- enumeration up to isomorphism -------------------------------------------

def test_graph_counts_up_to_iso():
    # standard counts of graphs on n unlabeled vertices
    assert [sum(1 for _ in graphs_up_to_iso(n)) for n in range(1, 6)] == \
        [1, 2, 4, 11, 34]


def test_only_c5_imperfect_on_five_vertices():
    bad = [g for g in graphs_up_to_iso(5) if not is_perfect(g)]
    assert len(bad) == 1
    assert clique_number(bad[0]) == 2
    assert len(bad[0].edges) == 5
