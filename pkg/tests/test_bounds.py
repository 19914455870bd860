from __future__ import annotations

import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from psdthrottle.bounds import (
    bound_report,
    degree_capacity,
    log_bound_ceiling,
    log_bound_holds,
    operation_bound_checks,
    product_bound_checks,
)
from psdthrottle.errors import PreconditionError
from psdthrottle.graph import Graph, empty_graph, generate, petersen_graph
from psdthrottle.throttling import th_times


def _entry(rep, name):
    return next(e for e in rep.entries if e.name == name)


def test_examples():
    rep = bound_report(generate("path", [5]))
    e = _entry(rep, "radius_bound")
    assert (e.lhs, e.rhs, e.holds) == (3, 3, True)
    rep = bound_report(generate("complete_bipartite", [3, 4]))
    e = _entry(rep, "alpha_bound")
    assert (e.lhs, e.rhs) == (6, 6)
    rep = bound_report(generate("complete", [4]))
    e = _entry(rep, "delta3_log_bound")
    assert (e.lhs, e.rhs, e.holds) == (4, 4, True)


def test_log_bound_by_hand():
    # K_4: Z = 3, D = 3, R = (4 + 6) / 9; need 2^(c - 3) >= (10/9)^3, first at c = 4
    assert log_bound_ceiling(4, 3, 3) == 4
    assert log_bound_holds(4, 4, 3, 3) and not log_bound_holds(3, 4, 3, 3)
    with pytest.raises(PreconditionError):
        log_bound_ceiling(5, 1, 2)


@settings(max_examples=300, deadline=None)
@given(st.integers(3, 12), st.integers(1, 10), st.integers(1, 200))
def test_log_ceiling_matches_high_precision_float(delta, z, extra):
    n = z + extra
    c = log_bound_ceiling(n, z, delta)
    r = Fraction((delta - 2) * n + 2 * z, delta * z)
    x = z * (1 + math.log(r) / math.log(delta - 1))
    # away from integer boundaries the float and exact answers must agree
    if abs(x - round(x)) > 1e-9:
        assert c == math.ceil(x)
    assert log_bound_holds(c, n, z, delta) and not log_bound_holds(c - 1, n, z, delta)


def test_degree_capacity():
    assert degree_capacity(1, 2, 2) == 5
    # a 3-regular tree ball of radius 2 has 1 + 3 + 6 vertices
    assert degree_capacity(1, 2, 3) == 10


def test_disconnected_graph_marks_entries_inapplicable():
    rep = bound_report(empty_graph(3))
    assert rep.ok
    assert not _entry(rep, "radius_bound").applicable


def test_single_vertex():
    rep = bound_report(empty_graph(1))
    assert rep.ok


@pytest.mark.parametrize("G", [generate("cycle", [9]), petersen_graph(), generate("hypercube", [3])])
def test_named_graphs_have_no_violations(G):
    assert bound_report(G).ok


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8, connected=True))
def test_random_connected_graphs(G):
    rep = bound_report(G)
    assert rep.ok, rep.violations


def test_serialisation():
    rep = bound_report(generate("path", [4]), graph_id="P4")
    rows = rep.to_tsv().strip().split("\n")
    assert rows[0].split("\t")[:3] == ["graph", "bound", "lhs"]
    assert len(rows) == len(rep.entries) + 1
    d = json.loads(rep.to_json())
    assert d["ok"] and d["graph"] == "P4"


def test_seven_vertex_tree_operations(seven_vertex_tree):
    assert th_times(seven_vertex_tree).value == 3
    rep = operation_bound_checks(seven_vertex_tree, (2, 5))
    assert rep.ok
    assert (_entry(rep, "subdivision_proposition").lhs, _entry(rep, "deletion_proposition").lhs) == (4, 6)
    assert operation_bound_checks(seven_vertex_tree, (2, 5), exhaustive_lemma=True).ok


def test_grid_products():
    P2, P3, P4 = (generate("path", [n]) for n in (2, 3, 4))
    rep = product_bound_checks(P2, P4)
    assert rep.ok
    # th_times(P_4) * |V(P_2)| = 3 * 2 is attained
    e = _entry(rep, "product_upper[H]")
    assert (e.lhs, e.rhs) == (6, 6)
    rep = product_bound_checks(P3, P3)
    assert rep.ok
    assert "forcing sets" in _entry(rep, "projection_failures[left]").note


def test_complete_graph_subdivision_is_tight():
    K = generate("complete", [5])
    rep = operation_bound_checks(K, (0, 1))
    assert _entry(rep, "subdivision_proposition").lhs == 6
