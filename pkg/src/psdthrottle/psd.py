"""Positive semidefinite zero forcing: rounds, traces and forcing forests.

One round takes the current blue set B, splits G - B into components, and lets
every blue vertex u force w whenever w is the only neighbour of u inside some
component.  All such forces fire simultaneously; components are recomputed
from the cumulative blue set at the start of every round.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreconditionError
from .graph import INF, Graph, component_masks, from_mask, metrics, to_mask

FORCED_ALL = "forced_all"
STALLED = "stalled"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _round_forces(adj: Sequence[int], full: int, blue: int) -> list[tuple[int, int]]:
    """Every rule-enabled (forcer, forced) pair for one round, forcers ascending."""
    white = full & ~blue
    if not white:
        return []
    comps = component_masks(adj, white)
    out = []
    for u in _bits(blue):
        nb = adj[u] & white
        if not nb:
            continue
        for W in comps:
            x = nb & W
            if x and not x & (x - 1):
                out.append((u, x.bit_length() - 1))
    return out


def _forced_mask(adj: Sequence[int], full: int, blue: int) -> int:
    white = full & ~blue
    forced = 0
    comps = None
    for u in _bits(blue):
        nb = adj[u] & white
        if not nb:
            continue
        if not nb & (nb - 1):
            # a single white neighbour is forced whatever the components are
            forced |= nb
            continue
        if comps is None:
            comps = component_masks(adj, white)
        for W in comps:
            x = nb & W
            if x and not x & (x - 1):
                forced |= x
    return forced


def pt_capped(adj: Sequence[int], full: int, start: int, cap: float = INF) -> float | None:
    """Propagation time of the bitmask ``start``; ``None`` once it exceeds ``cap``.

    Returns ``INF`` when the process stalls within ``cap`` rounds.
    """
    blue = start
    t = 0
    while blue != full:
        if t >= cap:
            return None
        new = _forced_mask(adj, full, blue)
        if not new:
            return INF
        blue |= new
        t += 1
    return t


def psd_round(G: Graph, blue: Iterable[int] | int) -> set[tuple[int, int]]:
    """All forces enabled by one simultaneous application of the rule."""
    return set(_round_forces(G.adj, G.full_mask, to_mask(blue)))


@dataclass(frozen=True)
class PropagationTrace:
    initial: frozenset[int]
    rounds: tuple[frozenset[int], ...]
    cumulative: tuple[frozenset[int], ...]
    rd: dict[int, int]
    forces: tuple[tuple[int, int, int], ...]
    status: str

    @property
    def p(self) -> int:
        return len(self.rounds)

    @property
    def derived_set(self) -> frozenset[int]:
        return self.cumulative[-1]

    @property
    def prop_time(self) -> float:
        return self.p if self.status == FORCED_ALL else INF

    def to_text(self) -> str:
        """One line per round: ``<round>: u->v u->v ...``."""
        lines = []
        for i in range(1, self.p + 1):
            fs = " ".join(f"{u}->{v}" for u, v, r in self.forces if r == i)
            lines.append(f"{i}: {fs}")
        return "\n".join(lines) + ("\n" if lines else "")


def propagate(G: Graph, S: Iterable[int] | int) -> PropagationTrace:
    """Run the process to its fixpoint.  Ties go to the lowest-index forcer."""
    full = G.full_mask
    blue = to_mask(S)
    initial = from_mask(blue)
    rd = {v: 0 for v in initial}
    rounds, cumulative, forces = [], [initial], []
    i = 0
    while blue != full:
        chosen: dict[int, int] = {}
        for u, w in _round_forces(G.adj, full, blue):
            chosen.setdefault(w, u)
        if not chosen:
            break
        i += 1
        for w in sorted(chosen):
            forces.append((chosen[w], w, i))
            rd[w] = i
            blue |= 1 << w
        rounds.append(frozenset(chosen))
        cumulative.append(from_mask(blue))
    status = FORCED_ALL if blue == full else STALLED
    return PropagationTrace(initial, tuple(rounds), tuple(cumulative), rd, tuple(forces), status)


def prop_time(G: Graph, S: Iterable[int] | int) -> float:
    """pt+(G;S), or ``math.inf`` when S is not a PSD forcing set."""
    return pt_capped(G.adj, G.full_mask, to_mask(S))


def is_forcing_set(G: Graph, S: Iterable[int] | int) -> bool:
    return prop_time(G, S) != INF


@dataclass(frozen=True)
class ForcingTree:
    root: int
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]
    radius: int


@dataclass(frozen=True)
class ForcingForest:
    trees: tuple[ForcingTree, ...]

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(e for t in self.trees for e in t.edges)

    @property
    def max_radius(self) -> int:
        return max((t.radius for t in self.trees), default=0)


def forcing_forest(trace: PropagationTrace, G: Graph) -> ForcingForest:
    """The forcing tree cover induced by the forces recorded in ``trace``."""
    if trace.status != FORCED_ALL:
        raise PreconditionError("forcing forest needs a trace that colours every vertex")
    root_of = {v: v for v in trace.initial}
    members: dict[int, set[int]] = {v: {v} for v in trace.initial}
    tree_edges: dict[int, set[tuple[int, int]]] = {v: set() for v in trace.initial}
    for u, w, _ in trace.forces:
        r = root_of[u]
        root_of[w] = r
        members[r].add(w)
        tree_edges[r].add((min(u, w), max(u, w)))
    trees = []
    for r in sorted(trace.initial):
        T, _ = Graph(G.n, frozenset(tree_edges[r])).induced_subgraph(members[r])
        trees.append(ForcingTree(r, frozenset(members[r]), frozenset(tree_edges[r]), int(metrics(T).radius)))
    return ForcingForest(tuple(trees))
