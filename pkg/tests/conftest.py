from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import strategies as st

from psdthrottle.graph import Graph


def from_nx(H) -> Graph:
    H = nx.convert_node_labels_to_integers(H)
    return Graph.from_edges(H.number_of_nodes(), H.edges())


def to_nx(G: Graph):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edge_list())
    return H


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        # a random spanning path keeps things connected
        perm = draw(st.permutations(range(n)))
        chosen = list(chosen) + [tuple(sorted(e)) for e in zip(perm, perm[1:])]
    return Graph.from_edges(n, chosen)


@pytest.fixture
def seven_vertex_tree():
    """Seven vertex tree: root 0, children 1 and 2, each with two leaves."""
    return Graph.from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])


# acceptance criteria record one line each here; printed at the end of the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[key])
