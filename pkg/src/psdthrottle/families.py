"""Closed-form values for graph families and the ceiling-arithmetic identities
behind the cycle formula.

``family_values`` returns values that have been checked against exhaustive
search.  A few widely quoted values for these families are wrong under the
PSD rule; :data:`QUOTED_VALUE_ERRATA` lists them and :func:`quoted_row`
reproduces the quoted values for comparison.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Sequence

from .errors import ParameterError
from .graph import Graph, generate, radius

UNKNOWN = "unknown"
UNDEFINED = "undefined"

TABLE_FAMILIES = (
    "complete",
    "cycle",
    "complete_bipartite",
    "tree",
    "random_tree",
    "path",
    "hypercube",
    "complete_multipartite",
    "complement_cycle",
    "complement_path",
)


def cdiv(a: int, b: int) -> int:
    """Exact integer ceiling of a / b for b > 0."""
    return -(-a // b)


def th_times_cycle(n: int) -> int:
    """Initial cost product throttling number of C_n, n >= 4."""
    if n < 4:
        raise ParameterError("cycle formula needs n >= 4 (C_3 is K_3)")
    if n % 12 == 3:
        return 3 * (1 + cdiv(n - 3, 6))
    return 2 * (1 + cdiv(n - 2, 4))


def cycle_k_product(n: int, k: int) -> int:
    """k (1 + ceil((n - k) / 2k)): the best product using exactly k blue vertices on C_n."""
    return k * (1 + cdiv(n - k, 2 * k))


@dataclass(frozen=True)
class LemmaCheck:
    n: int
    k: int
    lemma1_lhs: int
    lemma1_rhs: int
    lemma1_applicable: bool
    lemma1_holds: bool
    lemma2_lhs: int
    lemma2_rhs: int
    lemma2_branch: str  # "strict_less" or "at_least"
    lemma2_holds: bool


def cycle_floor_lemmas(n: int, k: int) -> LemmaCheck:
    """Evaluate both ceiling inequalities used for the cycle formula.

    Lemma 1 (k >= 4): k(1 + ceil((n-k)/2k)) >= 2 + 2 ceil((n-2)/4).
    Lemma 2: 3(1 + ceil((n-3)/6)) is strictly smaller than 2 + 2 ceil((n-2)/4)
    exactly when n = 3 mod 12.
    """
    rhs = 2 + 2 * cdiv(n - 2, 4)
    l1 = cycle_k_product(n, k)
    l2 = 3 * (1 + cdiv(n - 3, 6))
    branch = "strict_less" if l2 < rhs else "at_least"
    expected = "strict_less" if n % 12 == 3 else "at_least"
    return LemmaCheck(
        n, k, l1, rhs, k >= 4, l1 >= rhs,
        l2, rhs, branch, branch == expected,
    )


@dataclass(frozen=True)
class FamilyRecord:
    family: str
    params: tuple
    z_plus: int | str
    pt_plus: int | str
    th_times: int | str
    th_star: int | str

    def to_dict(self) -> dict:
        d = asdict(self)
        d["params"] = list(self.params)
        return d


def _ceil_half(a: int) -> int:
    return cdiv(a, 2)


def family_values(family: str, params: Sequence[int] = (), *, seed: int | None = None,
                  graph: Graph | None = None) -> FamilyRecord:
    """Z+, pt+, th_times and th_star of a family member from closed forms.

    ``tree`` needs ``graph=``; ``random_tree [n]`` needs ``seed=`` and uses the
    same generator as :func:`psdthrottle.graph.generate`.  Tree ``th_star`` is
    reported as ``"unknown"``.
    """
    p = tuple(int(x) for x in params)

    def need(count):
        if len(p) != count:
            raise ParameterError(f"{family} row takes {count} parameter(s)")

    def rec(z, pt, tx, ts):
        return FamilyRecord(family, p, z, pt, tx, ts)

    if family == "complete":
        need(1)
        (n,) = p
        if n < 1:
            raise ParameterError("K_n row needs n >= 1")
        if n == 1:
            return rec(1, 0, 1, UNDEFINED)
        return rec(n - 1, 1, n, n - 1)
    if family == "cycle":
        need(1)
        (n,) = p
        if n < 3:
            raise ParameterError("C_n row needs n >= 3")
        if n == 3:
            return rec(2, 1, 3, 2)
        return rec(2, cdiv(n - 2, 4), th_times_cycle(n), cdiv(n, 3))
    if family == "complete_bipartite":
        need(2)
        s, t = p
        if s < 1 or t < 1:
            raise ParameterError("K_{s,t} row needs s, t >= 1")
        m = min(s, t)
        return rec(m, 1, 2 * m, m)
    if family in ("tree", "random_tree"):
        if family == "random_tree":
            need(1)
            if seed is None:
                raise ParameterError("random_tree row needs a seed")
            graph = generate("random_tree", p, seed=seed)
        if graph is None:
            raise ParameterError("tree row needs graph=")
        if graph.n == 1:
            return rec(1, 0, 1, UNDEFINED)
        r = radius(graph)
        return rec(1, r, 1 + r, UNKNOWN)
    if family == "path":
        need(1)
        (n,) = p
        if n < 1:
            raise ParameterError("P_n row needs n >= 1")
        return rec(1, _ceil_half(n - 1), 1 + _ceil_half(n - 1), cdiv(n, 3) if n >= 2 else UNDEFINED)
    if family == "hypercube":
        need(1)
        (d,) = p
        if d < 1:
            raise ParameterError("Q^d row needs d >= 1")
        return rec(2 ** (d - 1), 1, 2 ** d, 2 ** (d - 1))
    if family == "complete_multipartite":
        if len(p) < 2 or min(p) < 1:
            raise ParameterError("K_{n_1,...,n_k} row needs k >= 2 parts of size >= 1")
        n = sum(p)
        z = n - max(p)
        return rec(z, 1, min(n, 2 * z), z)
    if family in ("complement_cycle", "complement_path"):
        need(1)
        (n,) = p
        if n < 5:
            raise ParameterError("complement rows need n >= 5")
        z = n - 3
        return rec(z, 1, min(n, 2 * z), z)
    raise ParameterError(f"unknown family row {family!r}")


def family_graph(family: str, params: Sequence[int], seed: int | None = None) -> Graph:
    """The labelled graph a table row describes."""
    from .graph import complement

    if family == "complement_cycle":
        return complement(generate("cycle", params))
    if family == "complement_path":
        return complement(generate("path", params))
    if family == "tree":
        raise ParameterError("tree row has no canonical member; use random_tree")
    return generate(family, params, seed=seed)


QUOTED_VALUE_ERRATA = {
    ("cycle", "pt_plus"): "quoted ceil((n-2)/2); the PSD value is ceil((n-2)/4) = pt+(C_n, 2)",
    ("complement_cycle", "pt_plus"): "quoted 2 for n != 6; every n >= 5 has a forcing set of size n-3 with pt 1",
    ("complement_path", "pt_plus"): "quoted 2; every n >= 5 has a forcing set of size n-3 with pt 1",
    ("complement_cycle", "th_star"): "quoted n-2 for n != 6; equals Z+ = n-3 because pt+ = 1",
    ("complement_path", "th_star"): "quoted n-2; equals Z+ = n-3 because pt+ = 1",
    ("complement_cycle", "th_times"): "quoted n; at n = 5 the value is min(n, 2 Z+) = 4",
    ("complement_path", "th_times"): "quoted n; at n = 5 the value is min(n, 2 Z+) = 4",
}


def quoted_row(family: str, params: Sequence[int]) -> FamilyRecord:
    """The widely quoted values for a family row, errors included
    (see :data:`QUOTED_VALUE_ERRATA`)."""
    rec = family_values(family, params) if family not in ("tree", "random_tree") else None
    if family == "cycle":
        (n,) = params
        return FamilyRecord(family, tuple(params), rec.z_plus, cdiv(n - 2, 2), rec.th_times, rec.th_star)
    if family == "complement_cycle":
        (n,) = params
        return FamilyRecord(family, tuple(params), n - 3, 1 if n == 6 else 2, n, n - 3 if n == 6 else n - 2)
    if family == "complement_path":
        (n,) = params
        return FamilyRecord(family, tuple(params), n - 3, 2, n, n - 2)
    if rec is None:
        raise ParameterError("tree rows have no parameter-only quoted values")
    return rec
