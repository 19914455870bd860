from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import from_nx, graphs, to_nx
from psdthrottle.errors import DisconnectedError, EdgeError, ParameterError, UsageError
from psdthrottle.graph import (
    INF,
    Graph,
    cartesian_product,
    complement,
    delete_edge,
    disjoint_union,
    empty_graph,
    generate,
    independence_number,
    k_radius,
    metrics,
    parse_edge_list,
    petersen_graph,
    project_to_factor,
    radius,
    subdivide_edge,
    to_edge_list_text,
)


def test_from_edges_normalises_and_rejects_bad_input():
    G = Graph.from_edges(3, [(1, 0), (2, 1)])
    assert G.edges == frozenset({(0, 1), (1, 2)})
    with pytest.raises(EdgeError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(EdgeError):
        Graph.from_edges(3, [(0, 3)])


def test_families_have_expected_sizes():
    assert generate("path", [5]).m == 4
    assert generate("cycle", [6]).m == 6
    assert generate("complete", [5]).m == 10
    star = generate("star", [4])
    assert star.n == 5 and star.degree(0) == 4
    assert generate("complete_bipartite", [2, 3]).m == 6
    Q = generate("hypercube", [3])
    assert (Q.n, Q.m) == (8, 12)
    assert all(Q.has_edge(u, u ^ 4) for u in range(4))
    K = generate("complete_multipartite", [1, 2, 3])
    assert K.m == 1 * 2 + 1 * 3 + 2 * 3


def test_family_parameter_errors():
    with pytest.raises(ParameterError):
        generate("cycle", [2])
    with pytest.raises(ParameterError):
        generate("path", [0])
    with pytest.raises(ParameterError):
        generate("nope", [3])


def test_random_tree_is_seeded():
    a = generate("random_tree", [9], seed=5)
    b = generate("random_tree", [9], seed=5)
    assert a == b and a.m == 8 and a.is_connected()


def test_metrics_examples():
    assert radius(generate("path", [5])) == 2
    assert radius(generate("cycle", [7])) == 3
    assert radius(petersen_graph()) == 2
    with pytest.raises(DisconnectedError):
        radius(empty_graph(2))
    assert metrics(empty_graph(2)).radius == INF


def test_k_radius_and_alpha():
    P7 = generate("path", [7])
    assert [k_radius(P7, k) for k in (1, 2, 3, 7)] == [3, 2, 1, 0]
    assert independence_number(petersen_graph()) == 4
    assert independence_number(generate("cycle", [7])) == 3


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_metrics_agree_with_networkx(G):
    H = to_nx(G)
    assert G.is_connected() == nx.is_connected(H)
    assert independence_number(G) == len(max(nx.find_cliques(nx.complement(H)), key=len))
    if G.is_connected():
        assert radius(G) == nx.radius(H)


def test_product_layout_and_projection():
    P = cartesian_product(generate("path", [2]), generate("path", [3]))
    assert (P.n, P.m) == (6, 7)
    assert P.layout == (2, 3)
    # vertex (x, y) is x * 3 + y
    assert project_to_factor(P, {1, 5}, "left") == frozenset({0, 1})
    assert project_to_factor(P, {1, 5}, "right") == frozenset({1, 2})
    with pytest.raises(UsageError):
        project_to_factor(generate("path", [3]), {0})


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=4), graphs(max_n=4))
def test_product_matches_networkx(G, H):
    P = cartesian_product(G, H)
    assert nx.is_isomorphic(to_nx(P), nx.cartesian_product(to_nx(G), to_nx(H)))


def test_subdivide_and_delete():
    C = subdivide_edge(generate("cycle", [5]), (0, 1))
    assert nx.is_isomorphic(to_nx(C), nx.cycle_graph(6))
    assert nx.is_isomorphic(to_nx(subdivide_edge(generate("path", [2]), (0, 1))), nx.path_graph(3))
    K = delete_edge(generate("complete", [3]), (0, 2))
    assert nx.is_isomorphic(to_nx(K), nx.path_graph(3))
    with pytest.raises(EdgeError):
        delete_edge(generate("path", [3]), (0, 2))
    with pytest.raises(EdgeError):
        subdivide_edge(generate("path", [3]), (0, 2))


def test_complement_and_union():
    assert complement(generate("complete", [4])) == empty_graph(4)
    U = disjoint_union(generate("path", [2]), empty_graph(1))
    assert U.n == 3 and len(U.components()) == 2


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=10))
def test_edge_list_text_round_trip(G):
    assert parse_edge_list(to_edge_list_text(G)) == G


def test_relabel_and_induced():
    P = generate("path", [4])
    R = P.relabel([3, 2, 1, 0])
    assert R == P
    sub, ids = P.induced_subgraph([1, 2, 3])
    assert sub == generate("path", [3]) and ids == [1, 2, 3]
    assert from_nx(nx.path_graph(4)) == P
