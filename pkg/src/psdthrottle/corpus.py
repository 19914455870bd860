"""Bundled small-graph corpora (graph6, one graph per line)."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .graph import Graph
from .graph6 import decode


@lru_cache(maxsize=None)
def _load(name: str) -> tuple[Graph, ...]:
    text = resources.files(__package__).joinpath("data").joinpath(name).read_text()
    return tuple(decode(line) for line in text.split())


def all_graphs(max_n: int = 7, min_n: int = 1) -> list[Graph]:
    """Every graph with min_n <= n <= max_n (max_n <= 7) up to isomorphism."""
    if max_n > 7:
        raise ValueError("the full corpus stops at 7 vertices")
    return [G for G in _load("graphs_le7.g6") if min_n <= G.n <= max_n]


def connected_graphs(max_n: int = 8, min_n: int = 1) -> list[Graph]:
    """Every connected graph with min_n <= n <= max_n (max_n <= 8) up to isomorphism."""
    if max_n > 8:
        raise ValueError("the connected corpus stops at 8 vertices")
    out = [G for G in all_graphs(min(max_n, 7), min_n) if G.is_connected()]
    if max_n == 8:
        out += list(_load("connected_8.g6"))
    return out
