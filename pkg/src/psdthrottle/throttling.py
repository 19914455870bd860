"""Exact searches over initial sets: Z+, pt+(G,k) and the throttling numbers.

k-subsets are enumerated as bitmasks in colex order (Gosper's hack), so within
a fixed k the first optimal set found is the smallest mask.  Across k the
searches ascend and only strict improvements replace the incumbent, which
makes every returned witness deterministic.  Passing ``workers > 1`` splits
each k-level by the largest element of the subset; partial results are merged
by (value, mask), which reproduces the sequential answer.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .errors import ParameterError, SizeLimitError, UndefinedParameterError
from .graph import INF, Graph, from_mask
from .psd import pt_capped

SEARCH_LIMIT = 24
SUBSET_BUDGET = 5_000_000
ORACLE_LIMIT = 12

PARAMETERS = ("z_plus", "pt_k", "th_sum", "th_times", "th_star")


def k_subsets(n: int, k: int) -> Iterator[int]:
    """All k-subsets of range(n) as bitmasks, in increasing (colex) order."""
    if k == 0:
        yield 0
        return
    if k > n:
        return
    s = (1 << k) - 1
    limit = 1 << n
    while s < limit:
        yield s
        c = s & -s
        r = s + c
        s = (((r ^ s) >> 2) // c) | r


def _tops(n: int, k: int) -> list[int]:
    return list(range(k - 1, n)) if k else [None]


def _subsets_with_tops(n: int, k: int, tops) -> Iterator[int]:
    if k == 0:
        yield 0
        return
    for m in tops:
        hi = 1 << m
        for s in k_subsets(m, k - 1):
            yield hi | s


def _scan(adj, full, n, k, cap, tops, first_forcing=False):
    """Best (pt, mask) over the k-sets with the given top elements, pt <= cap.

    With ``first_forcing`` the scan returns the first forcing set found.
    """
    best, wit = INF, None
    floor = 0 if k == n else 1
    for s in _subsets_with_tops(n, k, tops):
        bound = cap if best == INF else min(cap, best - 1)
        p = pt_capped(adj, full, s, bound)
        if p is None or p == INF:
            continue
        if first_forcing:
            return p, s
        if p < best:
            best, wit = p, s
            if best <= floor:
                break
    return (best, wit) if wit is not None else None


def _scan_job(args):
    return _scan(*args)


def _search_level(G: Graph, k: int, cap=INF, workers: int = 1, first_forcing=False):
    if math.comb(G.n, k) > SUBSET_BUDGET:
        raise SizeLimitError(f"C({G.n},{k}) = {math.comb(G.n, k)} subsets exceeds budget {SUBSET_BUDGET}")
    tops = _tops(G.n, k)
    if workers <= 1 or len(tops) < 2:
        return _scan(G.adj, G.full_mask, G.n, k, cap, tops, first_forcing)
    parts = [tops[i::workers] for i in range(workers)]
    jobs = [(G.adj, G.full_mask, G.n, k, cap, p, first_forcing) for p in parts if p]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = [r for r in pool.map(_scan_job, jobs) if r is not None]
    if not results:
        return None
    if first_forcing:
        return min(results, key=lambda r: r[1])
    return min(results)


def _check_size(G: Graph, limit: int):
    if G.n > limit:
        raise SizeLimitError(f"exhaustive search limited to n <= {limit}, got n={G.n}")


def z_plus(G: Graph, limit: int = SEARCH_LIMIT, workers: int = 1) -> tuple[int, frozenset[int]]:
    """Minimum size of a PSD forcing set, with the colex-first witness."""
    _check_size(G, limit)
    for k in range(0, G.n + 1):
        if k == 0 and G.n:
            continue
        hit = _search_level(G, k, workers=workers, first_forcing=True)
        if hit is not None:
            return k, from_mask(hit[1])
    raise AssertionError("V(G) is always a forcing set")


def pt_k(G: Graph, k: int, workers: int = 1) -> tuple[float, frozenset[int] | None]:
    """pt+(G,k): minimum propagation time over k-sets (``inf`` if none forces)."""
    if not 1 <= k <= G.n:
        raise ParameterError(f"k must lie in 1..{G.n}")
    hit = _search_level(G, k, workers=workers)
    if hit is None:
        return INF, None
    return hit[0], from_mask(hit[1])


@dataclass(frozen=True)
class ThrottlingWitness:
    parameter: str
    value: int
    witness_set: frozenset[int]
    witness_pt: int
    k_range_searched: tuple[int, int]

    def to_dict(self, one_indexed: bool = False) -> dict:
        shift = 1 if one_indexed else 0
        return {
            "parameter": self.parameter,
            "value": self.value,
            "witness": sorted(v + shift for v in self.witness_set),
            "pt": self.witness_pt,
            "k_searched": list(self.k_range_searched),
        }


def _throttle(G, parameter, cost, lower, kmax, limit, workers):
    """Shared ascending-k search.

    ``cost(k, p)`` is the objective, ``lower(k)`` a lower bound on it valid for
    every k-set (used to stop ascending), and ``cap(k, best)`` is derived from
    ``cost`` as the largest pt that could still improve ``best``.
    """
    _check_size(G, limit)
    z, zw = z_plus(G, limit, workers)
    best = None
    k_hi = z
    for k in range(z, kmax + 1):
        if best is not None and lower(k) >= best[0]:
            if k == G.n or lower(G.n) >= best[0]:
                break
            continue
        k_hi = k
        if best is None:
            cap = INF
        else:
            cap = _max_pt_below(cost, k, best[0])
            if cap < 0:
                continue
        hit = _search_level(G, k, cap, workers)
        if hit is None:
            continue
        p, mask = hit
        val = cost(k, p)
        if best is None or val < best[0]:
            best = (val, mask, p)
    val, mask, p = best
    return ThrottlingWitness(parameter, int(val), from_mask(mask), int(p), (z, k_hi))


def _max_pt_below(cost, k, bound):
    p = -1
    while cost(k, p + 1) < bound:
        p += 1
    return p


def th_times(G: Graph, limit: int = SEARCH_LIMIT, workers: int = 1) -> ThrottlingWitness:
    """Initial cost product throttling number min |S|(1 + pt+(G;S))."""
    n = G.n
    return _throttle(
        G, "th_times",
        cost=lambda k, p: k * (1 + p),
        lower=lambda k: 2 * k if k < n else n,
        kmax=n, limit=limit, workers=workers,
    )


def th_star(G: Graph, limit: int = SEARCH_LIMIT, workers: int = 1) -> ThrottlingWitness:
    """No initial cost product throttling number min |S| pt+(G;S) over |S| < n."""
    n = G.n
    if n < 2:
        raise UndefinedParameterError("th_star needs n >= 2 (no k with Z+ <= k < n)")
    if not G.edges:
        raise UndefinedParameterError("th_star is undefined on edgeless graphs (Z+ = n)")
    return _throttle(
        G, "th_star",
        cost=lambda k, p: k * p,
        lower=lambda k: k,
        kmax=n - 1, limit=limit, workers=workers,
    )


def th_sum(G: Graph, limit: int = SEARCH_LIMIT, workers: int = 1) -> ThrottlingWitness:
    """Sum throttling number min |S| + pt+(G;S)."""
    n = G.n
    return _throttle(
        G, "th_sum",
        cost=lambda k, p: k + p,
        lower=lambda k: k + 1 if k < n else n,
        kmax=n, limit=limit, workers=workers,
    )


# ------------------------------------------------------------------ records


@dataclass
class SearchRecord:
    """Everything the bound checks need, from one exhaustive pass per k."""

    n: int
    z_plus: int
    z_witness: frozenset[int]
    pt_by_k: dict[int, tuple[int, frozenset[int]]]
    th_times: ThrottlingWitness
    th_star: ThrottlingWitness | None
    th_sum: ThrottlingWitness
    extra: dict = field(default_factory=dict)

    @property
    def pt_plus(self) -> int:
        return self.pt_by_k[self.z_plus][0]


def search_record(G: Graph, limit: int = 16) -> SearchRecord:
    """pt+(G,k) with witnesses for every k >= Z+(G), and the throttling numbers
    derived from that table."""
    _check_size(G, limit)
    n = G.n
    z, zw = z_plus(G, limit)
    table = {}
    for k in range(z, n + 1):
        p, mask = _search_level(G, k)
        table[k] = (int(p), from_mask(mask))

    def pick(parameter, cost, ks):
        best = None
        for k in ks:
            p, w = table[k]
            v = cost(k, p)
            if best is None or v < best[0]:
                best = (v, k, p, w)
        v, k, p, w = best
        return ThrottlingWitness(parameter, v, w, p, (ks[0], ks[-1]))

    ks = list(range(z, n + 1))
    tt = pick("th_times", lambda k, p: k * (1 + p), ks)
    ts = pick("th_sum", lambda k, p: k + p, ks)
    star_ks = [k for k in ks if k < n]
    tstar = pick("th_star", lambda k, p: k * p, star_ks) if star_ks else None
    return SearchRecord(n, z, zw, table, tt, tstar, ts)


# ------------------------------------------------------------------- oracle


def _naive_prop_time(n: int, nbrs: list[list[int]], S) -> float:
    """Direct transcription of the colour change rule on Python sets."""
    blue = set(S)
    t = 0
    while len(blue) < n:
        white = [v for v in range(n) if v not in blue]
        seen: set[int] = set()
        comps = []
        for v in white:
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                x = stack.pop()
                for y in nbrs[x]:
                    if y not in blue and y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            comps.append(comp)
        new = set()
        for u in blue:
            for comp in comps:
                inside = [w for w in nbrs[u] if w in comp]
                if len(inside) == 1:
                    new.add(inside[0])
        if not new:
            return INF
        blue |= new
        t += 1
    return t


def oracle_all(G: Graph) -> dict:
    """All five parameters by unpruned enumeration of every subset.

    Independent of the bitmask engine; intended as ground truth in tests.
    ``th_star`` is ``None`` where it is undefined.
    """
    n = G.n
    if n > ORACLE_LIMIT:
        raise SizeLimitError(f"oracle limited to n <= {ORACLE_LIMIT}, got n={n}")
    nbrs = [[] for _ in range(n)]
    for u, v in G.edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    pt = {}
    for k in range(0, n + 1):
        pt[k] = min((_naive_prop_time(n, nbrs, S) for S in combinations(range(n), k)), default=INF)
    forcing = [k for k in range(n + 1) if pt[k] != INF]
    z = forcing[0]
    tt = min(k * (1 + pt[k]) for k in forcing)
    ts = min(k + pt[k] for k in forcing)
    star = [k * pt[k] for k in forcing if k < n]
    return {
        "z_plus": z,
        "pt_k": {k: pt[k] for k in range(1, n + 1)},
        "th_sum": ts,
        "th_times": tt,
        "th_star": min(star) if star else None,
    }


# ------------------------------------------------------------- witnesses


@dataclass
class WitnessReport:
    applicable: bool
    reason: str = ""
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def witness_relations(G: Graph, limit: int = SEARCH_LIMIT) -> WitnessReport:
    """Relations between the optimal sets S^x (for th_times) and S^* (th_star)."""
    if not G.is_connected():
        return WitnessReport(False, "graph is not connected")
    tx = th_times(G, limit)
    if tx.value >= G.n:
        return WitnessReport(False, f"th_times = n = {G.n}")
    ts = th_star(G, limit)
    sx, ss = len(tx.witness_set), len(ts.witness_set)
    checks = {
        "times_witness_realizes_pt_k": pt_k(G, sx)[0] == tx.witness_pt,
        "star_witness_realizes_pt_k": pt_k(G, ss)[0] == ts.witness_pt,
        "star_size_at_least_times_size": ss >= sx,
        "star_pt_at_most_times_pt": ts.witness_pt <= tx.witness_pt,
    }
    if ss == sx:
        checks["same_size_star_optimal_for_times"] = ss * (1 + ts.witness_pt) == tx.value
        checks["same_size_times_optimal_for_star"] = sx * tx.witness_pt == ts.value
    return WitnessReport(True, "", checks)
