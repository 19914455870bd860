from __future__ import annotations

import random

import networkx as nx
import pytest

from conftest import from_nx, to_nx
from psdthrottle.errors import Graph6Error
from psdthrottle.graph import Graph, empty_graph, generate
from psdthrottle.graph6 import _size_header, decode, encode, read_graph6_lines


def test_small_examples():
    assert encode(empty_graph(1)) == "@"
    assert encode(empty_graph(0)) == "?"
    G = decode("D?{")
    assert encode(G) == "D?{"
    assert G.n == 5 and G.degree(4) == 4 and G.m == 4


def test_header_is_optional():
    G = generate("cycle", [5])
    assert decode(encode(G, header=True)) == G
    assert encode(G, header=True).startswith(">>graph6<<")


def test_random_round_trip_against_networkx():
    rng = random.Random(2024)
    for _ in range(1000):
        n = rng.randint(0, 20)
        p = rng.random()
        G = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        s = encode(G)
        assert decode(s) == G
        assert encode(decode(s)) == s
        assert s == nx.to_graph6_bytes(to_nx(G), header=False).decode().strip()


@pytest.mark.parametrize("n", [62, 63, 100, 300])
def test_multi_byte_size_header(n):
    G = from_nx(nx.cycle_graph(n))
    s = encode(G)
    assert s == nx.to_graph6_bytes(to_nx(G), header=False).decode().strip()
    assert decode(s) == G


@pytest.mark.parametrize("n", [258047, 258048, 2 ** 30])
def test_size_header_forms(n):
    # the body would be gigabytes, so only the header encoding is compared
    expected = nx.readwrite.graph6.n_to_data(n)
    assert list(_size_header(n)) == [b + 63 for b in expected]


@pytest.mark.parametrize("bad", ["garbage\x01", "", "D?", "D?{?", "Bw\x7f", "A`"])
def test_malformed_strings_raise(bad):
    with pytest.raises(Graph6Error):
        decode(bad)


def test_error_reports_offset():
    with pytest.raises(Graph6Error) as exc:
        decode("D?\x01")
    assert exc.value.offset == 2
    assert "byte offset 2" in str(exc.value)


def test_read_lines_skips_blanks():
    gs = list(read_graph6_lines(["@", "", "A_\n"]))
    assert [g.n for g in gs] == [1, 2]
