"""Evaluate the known inequalities on searched values.

Every verdict is computed with integers or :class:`fractions.Fraction`; the
logarithmic bound is decided by comparing integer powers, never floats.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import PreconditionError, SizeLimitError
from .graph import (
    INF,
    Graph,
    cartesian_product,
    delete_edge,
    independence_number,
    k_radius,
    metrics,
    project_to_factor,
    subdivide_edge,
)
from .psd import forcing_forest, propagate, prop_time, pt_capped
from .throttling import SearchRecord, search_record, th_times
from .families import cdiv

_OPS = {
    ">=": lambda a, b: a >= b,
    "<=": lambda a, b: a <= b,
    "==": lambda a, b: a == b,
}


@dataclass(frozen=True)
class BoundEntry:
    name: str
    lhs: object
    relation: str
    rhs: object
    holds: bool
    applicable: bool = True
    note: str = ""


@dataclass
class BoundReport:
    graph_id: str
    entries: list[BoundEntry] = field(default_factory=list)

    def check(self, name, lhs, relation, rhs, note=""):
        self.entries.append(BoundEntry(name, lhs, relation, rhs, bool(_OPS[relation](lhs, rhs)), True, note))

    def skip(self, name, reason):
        self.entries.append(BoundEntry(name, None, "", None, True, False, reason))

    @property
    def violations(self) -> list[BoundEntry]:
        return [e for e in self.entries if e.applicable and not e.holds]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_tsv(self) -> str:
        rows = ["graph\tbound\tlhs\trelation\trhs\tholds\tapplicable\tnote"]
        for e in self.entries:
            rows.append("\t".join(str(x) for x in (
                self.graph_id, e.name, _fmt(e.lhs), e.relation, _fmt(e.rhs),
                str(e.holds).lower(), str(e.applicable).lower(), e.note)))
        return "\n".join(rows) + "\n"

    def to_dict(self) -> dict:
        return {
            "graph": self.graph_id,
            "ok": self.ok,
            "entries": [{**asdict(e), "lhs": _jsonable(e.lhs), "rhs": _jsonable(e.rhs)} for e in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _fmt(x):
    return "" if x is None else str(x)


def _jsonable(x):
    if x is None or isinstance(x, (int, str, bool)):
        return x
    if x == INF:
        return "inf"
    return str(x)


# ---------------------------------------------------------------- log bound


def log_bound_ceiling(n: int, z: int, delta: int) -> int:
    """ceil(Z (1 + log_{D-1}(((D-2) n + 2 Z) / (D Z)))) for D >= 3, exactly.

    An integer c satisfies c >= Z(1 + log_b R) iff b^(c - Z) >= R^Z, which is
    a comparison of rationals.
    """
    if delta < 3 or z < 1:
        raise PreconditionError("log bound needs max degree >= 3 and Z+ >= 1")
    b = Fraction(delta - 1)
    target = Fraction((delta - 2) * n + 2 * z, delta * z) ** z
    c = z
    while b ** (c - z) < target:
        c += 1
    return c


def log_bound_holds(value: int, n: int, z: int, delta: int) -> bool:
    return Fraction(delta - 1) ** (value - z) >= Fraction((delta - 2) * n + 2 * z, delta * z) ** z


def degree_capacity(s: int, pt: int, delta: int) -> int:
    """Largest order a graph of max degree ``delta`` can have if s vertices force it in pt rounds."""
    if delta == 2:
        return s * (1 + 2 * pt)
    # (delta (delta-1)^pt - delta) is divisible by delta - 2
    return s * (1 + (delta * (delta - 1) ** pt - delta) // (delta - 2))


# ------------------------------------------------------------------- report


def _witness_sets(searched: SearchRecord) -> dict[str, frozenset[int]]:
    sets = {"S_z": searched.z_witness, "S_times": searched.th_times.witness_set}
    if searched.th_star is not None:
        sets["S_star"] = searched.th_star.witness_set
    return sets


def bound_report(G: Graph, searched: SearchRecord | None = None, graph_id: str = "") -> BoundReport:
    """Check every general bound on G against exact searched values."""
    if searched is None:
        searched = search_record(G)
    for attr in ("z_plus", "z_witness", "th_times", "th_sum", "pt_by_k"):
        if getattr(searched, attr, None) is None:
            raise PreconditionError(f"searched record lacks {attr}")
    rep = BoundReport(graph_id)
    n = G.n
    z = searched.z_plus
    tx = searched.th_times.value
    ts = searched.th_star.value if searched.th_star is not None else None
    delta = G.max_degree
    met = metrics(G)
    connected = met.connected
    rad = int(met.radius) if connected else None
    witnesses = _witness_sets(searched)

    rep.check("th_times_at_most_n", tx, "<=", n)

    if connected:
        rep.check("radius_bound", tx, ">=", 1 + rad)
        for label, S in witnesses.items():
            tr = propagate(G, S)
            forest = forcing_forest(tr, G)
            s = len(S)
            rep.check(f"forest_lemma[{label}]", s - 1 + s * forest.max_radius, ">=", rad)
            rep.check(f"pt_at_least_tree_radius[{label}]", tr.p, ">=", forest.max_radius)
    else:
        rep.skip("radius_bound", "graph is not connected")
        rep.skip("forest_lemma", "graph is not connected")

    if connected and n >= 2:
        alpha = independence_number(G)
        rep.check("alpha_bound", tx, "<=", 2 * (n - alpha))
        rep.check("alpha_bound_sum", searched.th_sum.value, "<=", n - alpha + 1)
        rep.check("alpha_bound_star", ts, "<=", n - alpha)
    else:
        rep.skip("alpha_bound", "needs a connected graph with n >= 2")

    if 2 * z >= n:
        rep.check("extreme_observation", tx, "==", n, note="Z+ >= n/2")
    else:
        rep.skip("extreme_observation", "Z+ < n/2")

    if searched.pt_plus == 1:
        rep.check("pt_one_times", tx, "==", min(n, 2 * z))
        rep.check("pt_one_star", ts, "==", z)
    else:
        rep.skip("pt_one_observation", f"pt+ = {searched.pt_plus}")

    if delta >= 2:
        for label, S in witnesses.items():
            p = prop_time(G, S)
            rep.check(f"degree_propagation_lemma[{label}]", n, "<=", degree_capacity(len(S), int(p), delta))
    else:
        rep.skip("degree_propagation_lemma", "max degree < 2")

    if delta == 2:
        rep.check("delta2_bound", tx, ">=", cdiv(z + n, 2))
    else:
        rep.skip("delta2_bound", f"max degree {delta} != 2")

    if delta >= 3:
        c = log_bound_ceiling(n, z, delta)
        rep.check("delta3_log_bound", tx, ">=", c)
        assert log_bound_holds(tx, n, z, delta) == (tx >= c)
    else:
        rep.skip("delta3_log_bound", f"max degree {delta} < 3")

    if connected:
        best_rad_product = None
        for k, (p, _) in sorted(searched.pt_by_k.items()):
            rk = k_radius(G, k)
            rep.check(f"k_radius_bound[k={k}]", p, ">=", rk)
            cand = k * (1 + rk)
            best_rad_product = cand if best_rad_product is None else min(best_rad_product, cand)
        rep.check("k_radius_product_bound", tx, ">=", best_rad_product)
    else:
        rep.skip("k_radius_bound", "graph is not connected")

    if connected and tx < n and ts is not None:
        sx, ss = searched.th_times.witness_set, searched.th_star.witness_set
        px, ps = searched.th_times.witness_pt, searched.th_star.witness_pt
        rep.check("witness_times_realizes_pt_k", px, "==", searched.pt_by_k[len(sx)][0])
        rep.check("witness_star_realizes_pt_k", ps, "==", searched.pt_by_k[len(ss)][0])
        rep.check("witness_star_size_at_least_times_size", len(ss), ">=", len(sx))
        rep.check("witness_star_pt_at_most_times_pt", ps, "<=", px)
        if len(ss) == len(sx):
            rep.check("witness_same_size_times", len(ss) * (1 + ps), "==", tx)
            rep.check("witness_same_size_star", len(sx) * px, "==", ts)
    else:
        rep.skip("witness_relations", "needs a connected graph with th_times < n")
    return rep


# ------------------------------------------------------- graph operations


def _forcing_sets(G: Graph):
    full = G.full_mask
    for k in range(G.n + 1):
        for S in combinations(range(G.n), k):
            mask = sum(1 << v for v in S)
            p = pt_capped(G.adj, full, mask)
            if p != INF:
                yield frozenset(S), p


def operation_bound_checks(G: Graph, e: Sequence[int], graph_id: str = "",
                           exhaustive_lemma: bool = False) -> BoundReport:
    """Subdivision and deletion inequalities for edge ``e`` of G.

    The subdivision lemma is checked on the optimal witness, or on every
    forcing set of G with ``exhaustive_lemma``.
    """
    rep = BoundReport(graph_id or f"edge {tuple(e)}")
    Ge = subdivide_edge(G, e)
    Gd = delete_edge(G, e)
    w = th_times(G)
    S, p = w.witness_set, w.witness_pt
    lemma_sets = list(_forcing_sets(G)) if exhaustive_lemma else [(S, p)]
    for T, q in lemma_sets:
        rep.check(f"subdivision_lemma[{sorted(T)}]", prop_time(Ge, T), "<=", q + 1)
    try:
        tx_e = th_times(Ge).value
        rep.check("subdivision_proposition", tx_e, "<=", min(w.value + len(S), w.value + p + 1))
    except SizeLimitError as exc:
        rep.skip("subdivision_proposition", str(exc))
    try:
        tx_d = th_times(Gd).value
        rep.check("deletion_proposition", tx_d, "<=", w.value + 1 + p)
    except SizeLimitError as exc:
        rep.skip("deletion_proposition", str(exc))
    return rep


def product_bound_checks(G: Graph, H: Graph, graph_id: str = "", exhaustive_limit: int = 12) -> BoundReport:
    """Cartesian product inequalities for G and H.

    Projection is checked on every forcing set when the product has at most
    ``exhaustive_limit`` vertices, otherwise on the optimal witness only.
    """
    rep = BoundReport(graph_id or f"product {G.n}x{H.n}")
    P = cartesian_product(G, H)
    wg, wh, wp = th_times(G), th_times(H), th_times(P)
    if P.n <= exhaustive_limit:
        sets = list(_forcing_sets(P))
    else:
        sets = [(wp.witness_set, wp.witness_pt)]
    failures = {"left": 0, "right": 0}
    for S, p in sets:
        for which, F in (("left", G), ("right", H)):
            if not prop_time(F, project_to_factor(P, S, which)) <= p:
                failures[which] += 1
    for which in ("left", "right"):
        rep.check(f"projection_failures[{which}]", failures[which], "==", 0,
                  note=f"{len(sets)} forcing sets of the product checked")
    rep.check("product_lower[G]", wp.value, ">=", wg.value)
    rep.check("product_lower[H]", wp.value, ">=", wh.value)
    rep.check("product_upper[G]", wp.value, "<=", wg.value * H.n)
    rep.check("product_upper[H]", wp.value, "<=", wh.value * G.n)
    return rep
