import math
import random

import pytest

from quandles import InputError, ResourceLimitError, SimpleGraph
from quandles.graphs import (
    complete,
    cycle,
    empty,
    find_graph_isomorphism,
    graph_automorphisms,
    graph_from_dict,
    graph_to_dict,
    is_vertex_transitive,
    johnson,
    parity_difference,
    path,
    star,
    to_dot,
)

from helpers import petersen_edges, random_edge_set


def test_adjacency_basics():
    k3 = complete(3)
    assert k3.adjacency(0, 1) == k3.adjacency(1, 0) == 1
    for v in range(3):
        assert k3.adjacency(v, v) == 0
    p3 = path(3)
    assert p3.adjacency(0, 2) == 0 and p3.adjacency(0, 1) == 1
    with pytest.raises(InputError):
        k3.adjacency(0, 3)


def test_construction_rejects_bad_edges():
    with pytest.raises(InputError):
        SimpleGraph(3, [(0, 0)])
    with pytest.raises(InputError):
        SimpleGraph(3, [(0, 3)])
    with pytest.raises(InputError):
        SimpleGraph(3, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        SimpleGraph(-1)


def test_builders_shapes():
    assert len(empty(5).edges) == 0
    assert len(complete(5).edges) == 10
    assert len(cycle(5).edges) == 5
    assert len(path(4).edges) == 3
    assert len(star(4).edges) == 3 and star(4).degree(0) == 3
    with pytest.raises(InputError):
        cycle(2)
    with pytest.raises(InputError):
        empty(0)
    with pytest.raises(InputError):
        johnson(3, 4)


def test_parity_difference_with_singletons_is_complete():
    for n in range(1, 6):
        assert parity_difference(n, 1).edges == complete(n).edges


def test_parity_difference_pairs_match_johnson():
    for n in range(2, 8):
        assert parity_difference(n, 2).edges == johnson(n, 2).edges


def test_octahedron_structure():
    g = parity_difference(4, 2)
    assert g.vertex_count == 6 and len(g.edges) == 12
    # {1,2} is vertex 0 and {3,4} is vertex 5 in lexicographic order
    assert g.labels[0] == "{1,2}" and g.labels[5] == "{3,4}"
    assert g.adjacency(0, 5) == 0


def test_adjacency_symmetry_on_random_graphs():
    rng = random.Random(3)
    for _ in range(10):
        n = rng.randint(1, 8)
        g = SimpleGraph(n, random_edge_set(rng, n))
        for v in range(n):
            for w in range(n):
                assert g.adjacency(v, w) == g.adjacency(w, v)


# ------------------------------------------------------------ automorphisms

def test_empty_graph_automorphisms_are_all_bijections():
    for n in range(1, 5):
        assert graph_automorphisms(empty(n)).order() == math.factorial(n)


def test_complete3_automorphisms():
    assert graph_automorphisms(complete(3)).order() == 6


def test_path3_automorphisms():
    assert graph_automorphisms(path(3)).order() == 2


def test_automorphisms_preserve_adjacency():
    g = SimpleGraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)])
    for p in graph_automorphisms(g).closure():
        for v in range(5):
            for w in range(5):
                assert g.adjacency(v, w) == g.adjacency(p(v), p(w))


def test_petersen_automorphism_count():
    g = SimpleGraph(10, petersen_edges())
    assert graph_automorphisms(g).order() == 120


def test_vertex_cap():
    with pytest.raises(ResourceLimitError):
        graph_automorphisms(empty(13))


def test_vertex_transitivity():
    assert is_vertex_transitive(cycle(5))
    assert not is_vertex_transitive(path(3))
    for n in range(1, 5):
        assert is_vertex_transitive(complete(n))
    assert is_vertex_transitive(SimpleGraph(10, petersen_edges()))


def test_vertex_transitive_implies_regular():
    rng = random.Random(5)
    for _ in range(15):
        n = rng.randint(1, 7)
        g = SimpleGraph(n, random_edge_set(rng, n))
        if is_vertex_transitive(g):
            degrees = {g.degree(v) for v in range(n)}
            assert len(degrees) == 1


# -------------------------------------------------------------- isomorphism

def test_graph_isomorphism_found_for_relabeled_cycle():
    g1 = cycle(5)
    g2 = SimpleGraph(5, [(0, 2), (2, 4), (1, 4), (1, 3), (0, 3)])
    p = find_graph_isomorphism(g1, g2)
    assert p is not None
    for v in range(5):
        for w in range(5):
            assert g1.adjacency(v, w) == g2.adjacency(p(v), p(w))


def test_graph_isomorphism_none_for_different_graphs():
    assert find_graph_isomorphism(cycle(5), path(5)) is None
    assert find_graph_isomorphism(path(3), star(3)) is not None


# ------------------------------------------------------------ serialization

def test_graph_json_round_trip():
    g = johnson(4, 2)
    assert graph_from_dict(graph_to_dict(g)) == g


def test_graph_json_validation():
    for d in (
        {"vertices": 2},
        {"vertices": 2, "edges": [[1, 0]]},
        {"vertices": 2, "edges": [[0, 0]]},
        {"vertices": 2, "edges": [[0, 2]]},
        {"vertices": 2, "edges": [[0, 1], [0, 1]]},
        {"vertices": "2", "edges": []},
    ):
        with pytest.raises(InputError):
            graph_from_dict(d)


def test_dot_output_is_stable_and_lists_isolated_vertices():
    g = SimpleGraph(4, [(2, 1), (0, 1)])
    assert to_dot(g) == (
        "graph {\n"
        "  0;\n"
        "  1;\n"
        "  2;\n"
        "  3;\n"
        "  0 -- 1;\n"
        "  1 -- 2;\n"
        "}\n"
    )
    labeled = to_dot(johnson(3, 2))
    assert '0 [label="{1,2}"];' in labeled
