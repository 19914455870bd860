"""Cops and robbers: capture times by retrograde analysis.

Round accounting: the cops are placed, then the robber picks a free vertex.
Each round the cops move (each to a neighbour or staying put), then the
robber does.  The robber is caught the moment a cop shares its vertex, so a
cop adjacent to the robber's start gives capture time 1 and a placement that
covers every vertex gives 0.

Two solvers share the rules.  :func:`solve_game` builds the full value table
for k cops (cop positions are canonical sorted multisets) by backward
induction from capture positions; positions it never reaches are escapes.
:func:`capture_time` can instead run an iterative deepening search from one
placement, which stays cheap for many cops on small graphs where the table
would be huge.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence

from .errors import SizeLimitError
from .graph import INF, Graph, metrics

STATE_BUDGET = 10 ** 7
TRANSITION_BUDGET = 3 * 10 ** 6


def _closed(G: Graph) -> list[tuple[int, ...]]:
    return [tuple(sorted(G.closed_neighborhood(v))) for v in range(G.n)]


def _cop_moves(closed: Sequence[Sequence[int]], cops: Sequence[int]) -> set[tuple[int, ...]]:
    """Distinct multisets reachable when every cop moves or stays."""
    partial = {()}
    for c in cops:
        partial = {tuple(sorted(p + (x,))) for p in partial for x in closed[c]}
    return partial


def multiset_count(n: int, k: int) -> int:
    return math.comb(n + k - 1, k)


@dataclass
class GameValue:
    """Value table for k cops on G.

    ``cop_turn[i][r]`` is the number of rounds the cops need, with cops on
    multiset ``positions[i]`` to move and the robber on r; ``None`` marks an
    escape and ``0`` a position where a cop already holds r.
    """

    n: int
    k: int
    positions: list[tuple[int, ...]]
    index: dict[tuple[int, ...], int]
    successors: list[list[int]]
    cop_turn: list[list[int | None]]
    robber_turn: list[list[int | None]]

    def value(self, cops: Iterable[int], robber: int, to_move: str = "cops") -> float:
        i = self.index[tuple(sorted(cops))]
        table = self.cop_turn if to_move == "cops" else self.robber_turn
        v = table[i][robber]
        return INF if v is None else v

    def capture_time(self, cops: Iterable[int]) -> float:
        cops = tuple(sorted(cops))
        i = self.index[cops]
        free = [r for r in range(self.n) if r not in cops]
        if not free:
            return 0
        worst = 0
        for r in free:
            v = self.cop_turn[i][r]
            if v is None:
                return INF
            worst = max(worst, v)
        return worst

    def best_cop_move(self, cops: Iterable[int], robber: int) -> tuple[int, ...] | None:
        """A successor multiset realising the value of a cops-to-move position."""
        i = self.index[tuple(sorted(cops))]
        target = self.cop_turn[i][robber]
        if target is None or target == 0:
            return None
        for j in self.successors[i]:
            if robber in self.positions[j]:
                if target == 1:
                    return self.positions[j]
                continue
            v = self.robber_turn[j][robber]
            if v is not None and v + 1 == target:
                return self.positions[j]
        raise AssertionError("value table is inconsistent")


def solve_game(G: Graph, k: int, budget: int = STATE_BUDGET) -> GameValue:
    """Backward induction over every (cop multiset, robber vertex, side to move)."""
    n = G.n
    if k < 1 or n < 1:
        raise ValueError("need at least one cop and one vertex")
    states = multiset_count(n, k) * n
    if states > budget:
        raise SizeLimitError(f"{states} positions for k={k} on n={n} exceeds budget {budget}")
    closed = _closed(G)
    positions = list(combinations_with_replacement(range(n), k))
    index = {p: i for i, p in enumerate(positions)}
    successors = [sorted(index[q] for q in _cop_moves(closed, p)) for p in positions]
    occupied = [set(p) for p in positions]

    cop_turn: list[list[int | None]] = [[0 if r in occ else None for r in range(n)] for occ in occupied]
    robber_turn: list[list[int | None]] = [[0 if r in occ else None for r in range(n)] for occ in occupied]
    # safe robber moves still unresolved, per robber-to-move position
    pending = [[sum(1 for x in closed[r] if x not in occ) for r in range(n)] for occ in occupied]

    queue = deque()
    for i, p in enumerate(positions):
        reach = set()
        for c in p:
            reach.update(closed[c])
        for r in reach:
            if r not in occupied[i]:
                cop_turn[i][r] = 1
                queue.append((i, r))

    while queue:
        j, rr = queue.popleft()
        v = cop_turn[j][rr]
        occ = occupied[j]
        for r in closed[rr]:
            if r in occ or robber_turn[j][r] is not None:
                continue
            pending[j][r] -= 1
            if pending[j][r]:
                continue
            robber_turn[j][r] = v
            for i in successors[j]:
                if r not in occupied[i] and cop_turn[i][r] is None:
                    cop_turn[i][r] = v + 1
                    queue.append((i, r))
    return GameValue(n, k, positions, index, successors, cop_turn, robber_turn)


# ------------------------------------------------------- per-placement search


class _Searcher:
    def __init__(self, G: Graph):
        self.G = G
        self.closed = _closed(G)
        self.dist = metrics(G).dist
        self.memo: dict = {}

    def can(self, cops: tuple[int, ...], r: int, t: int) -> bool:
        """Can cops (to move) catch a robber on r within t rounds?"""
        if t <= 0:
            return False
        d = self.dist
        if any(d[c][r] <= 1 for c in cops):
            return True
        relevant = tuple(c for c in cops if d[c][r] <= 2 * t - 1)
        if not relevant or t == 1:
            return False
        key = (relevant, r, t)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if t == 2:
            ans = self._cover(list(relevant), set(self.closed[r]))
        else:
            ans = False
            moves = sorted(_cop_moves(self.closed, relevant), key=lambda m: sum(d[c][r] for c in m))
            for m in moves:
                if all(self.can(m, x, t - 1) for x in self.closed[r] if x not in m):
                    ans = True
                    break
        self.memo[key] = ans
        return ans

    def _cover(self, cops: list[int], targets: set[int]) -> bool:
        """Can each cop step once so that every target is on or next to a cop?"""
        if not targets:
            return True
        if not cops:
            return False
        y = min(targets, key=lambda v: sum(1 for c in cops if self.dist[c][v] <= 2))
        for c in cops:
            if self.dist[c][y] > 2:
                continue
            rest = cops.copy()
            rest.remove(c)
            for x in self.closed[c]:
                if self.dist[x][y] <= 1:
                    if self._cover(rest, targets - set(self.closed[x])):
                        return True
        return False

    def capture_time_connected(self, cops: tuple[int, ...]) -> int:
        free = [r for r in range(self.G.n) if r not in cops]
        if not free:
            return 0
        t = 1
        pending = free
        while True:
            pending = [r for r in pending if not self.can(cops, r, t)]
            if not pending:
                return t
            t += 1


def capture_time(G: Graph, S: Iterable[int], method: str = "auto", budget: int = STATE_BUDGET) -> float:
    """capt(G;S): optimal capture time for cops starting on S (``inf`` if the robber escapes).

    ``method`` is ``"table"`` (full retrograde table), ``"search"``
    (iterative deepening from S) or ``"auto"``.
    """
    cops = tuple(sorted(S))
    if G.n < 1 or not cops:
        raise ValueError("need a nonempty graph and at least one cop")
    if method == "auto":
        method = "table" if _table_cost(G, len(cops)) <= TRANSITION_BUDGET else "search"
    if method == "table":
        return _cached_game(G, len(cops), budget).capture_time(cops)
    if method != "search":
        raise ValueError(f"unknown method {method!r}")
    worst = 0
    for comp in G.components():
        H, old = G.induced_subgraph(comp)
        new_id = {v: i for i, v in enumerate(old)}
        mine = tuple(sorted(new_id[c] for c in cops if c in new_id))
        if len(set(mine)) == H.n:
            continue
        if not mine or len(mine) < cop_number(H, budget):
            return INF
        worst = max(worst, _Searcher(H).capture_time_connected(mine))
    return worst


def _table_cost(G: Graph, k: int) -> int:
    """Rough count of transitions the full table would touch."""
    branching = min((G.max_degree + 1) ** k, multiset_count(G.n, k))
    return multiset_count(G.n, k) * G.n * branching


_GAMES: dict = {}


def _cached_game(G: Graph, k: int, budget: int = STATE_BUDGET) -> GameValue:
    key = (G.n, G.edges, k)
    game = _GAMES.get(key)
    if game is None:
        if len(_GAMES) > 64:
            _GAMES.clear()
        game = _GAMES[key] = solve_game(G, k, budget)
    return game


def capt_k(G: Graph, k: int, budget: int = STATE_BUDGET, method: str = "auto") -> tuple[float, frozenset[int] | None]:
    """Minimum capture time over placements on k distinct vertices, with a witness."""
    if not 1 <= k <= G.n:
        raise ValueError(f"k must lie in 1..{G.n}")
    if method == "auto":
        method = "table" if _table_cost(G, k) <= TRANSITION_BUDGET else "search"
    if method == "table":
        game = _cached_game(G, k, budget)
        timer = game.capture_time
    else:
        def timer(S):
            return capture_time(G, S, "search", budget)
    best, wit = INF, None
    for S in combinations(range(G.n), k):
        v = timer(S)
        if v < best:
            best, wit = v, frozenset(S)
            if best <= (0 if k == G.n else 1):
                break
    return best, wit


def cop_number(G: Graph, budget: int = STATE_BUDGET) -> int:
    """Least k for which some placement of k cops captures the robber."""
    comps = G.components()
    if len(comps) > 1:
        total = 0
        for comp in comps:
            H, _ = G.induced_subgraph(comp)
            total += cop_number(H, budget)
        return total
    for k in range(1, G.n + 1):
        game = _cached_game(G, k, budget)
        if any(game.capture_time(S) != INF for S in combinations(range(G.n), k)):
            return k
    return G.n


@dataclass(frozen=True)
class CopThrottling:
    cop_number: int
    times: int
    times_witness: frozenset[int]
    times_capt: int
    star: int | None
    star_witness: frozenset[int] | None
    star_capt: int | None

    def to_dict(self, one_indexed: bool = False) -> dict:
        shift = 1 if one_indexed else 0

        def fmt(s):
            return None if s is None else sorted(v + shift for v in s)

        return {
            "cop_number": self.cop_number,
            "th_c_times": self.times,
            "th_c_times_witness": fmt(self.times_witness),
            "th_c_times_capt": self.times_capt,
            "th_c_star": self.star,
            "th_c_star_witness": fmt(self.star_witness),
            "th_c_star_capt": self.star_capt,
        }


def th_times_cops(G: Graph, budget: int = STATE_BUDGET) -> CopThrottling:
    """Cop product throttling: min k(1 + capt_k) over k >= c(G), and min k capt_k over c(G) <= k < n."""
    n = G.n
    c = cop_number(G, budget)
    capts: dict[int, tuple[float, frozenset[int] | None]] = {}

    def get(k):
        if k not in capts:
            capts[k] = capt_k(G, k, budget) if k < n else (0, frozenset(range(n)))
        return capts[k]

    best = None
    for k in range(c, n + 1):
        if best is not None and k < n and 2 * k >= best[0]:
            if n < best[0]:
                best = (n, frozenset(range(n)), 0)
            break
        v, w = get(k)
        if v != INF and (best is None or k * (1 + v) < best[0]):
            best = (k * (1 + v), w, v)
    star = None
    for k in range(c, n):
        if star is not None and k >= star[0]:
            break
        v, w = get(k)
        if v != INF and (star is None or k * v < star[0]):
            star = (k * v, w, v)
    times, tw, tc = best
    if star is None:
        return CopThrottling(c, int(times), tw, int(tc), None, None, None)
    return CopThrottling(c, int(times), tw, int(tc), int(star[0]), star[1], int(star[2]))


def strategy_dump(G: Graph, S: Iterable[int]) -> str:
    """Debug text: for each robber start, the capture time and the cops' first move."""
    cops = tuple(sorted(S))
    game = _cached_game(G, len(cops))
    lines = []
    for r in range(G.n):
        if r in cops:
            continue
        v = game.value(cops, r)
        move = game.best_cop_move(cops, r)
        lines.append(f"robber {r}: value {v}, cops -> {list(move) if move else '-'}")
    return "\n".join(lines) + "\n"
