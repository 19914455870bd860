"""Simple undirected graphs on dense vertex ids, family generators and metrics.

Vertex sets are passed around either as iterables of ints or as integer
bitmasks (bit ``v`` set iff ``v`` is a member); :func:`to_mask` and
:func:`from_mask` convert between the two.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DisconnectedError, EdgeError, ParameterError, SizeLimitError, UsageError

INF = math.inf

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "star",
    "complete_bipartite",
    "complete_multipartite",
    "hypercube",
    "random_tree",
)


def to_mask(vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``layout`` is set only on graphs built by :func:`cartesian_product` and
    records the factor orders ``(nG, nH)``; vertex ``(x, x')`` of the product
    has index ``x * nH + x'``.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    layout: tuple[int, int] | None = None
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError("vertex count must be non-negative")
        masks = [0] * self.n
        clean = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise EdgeError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise EdgeError(f"edge {e} out of range for n={self.n}")
            u, v = _norm_edge(u, v)
            clean.add((u, v))
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "edges", frozenset(clean))
        object.__setattr__(self, "adj", tuple(masks))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], layout=None) -> "Graph":
        return cls(n, frozenset((int(u), int(v)) for u, v in edges), layout)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        return from_mask(self.adj[v])

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return from_mask(self.adj[v] | (1 << v))

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def components(self) -> list[frozenset[int]]:
        return [from_mask(c) for c in component_masks(self.adj, self.full_mask)]

    def is_connected(self) -> bool:
        return self.n > 0 and len(component_masks(self.adj, self.full_mask)) == 1

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; also returns the old ids."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph.from_edges(len(old), edges), old

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def component_masks(adj: Sequence[int], vertices: int) -> list[int]:
    """Vertex masks of the components of the subgraph induced by ``vertices``."""
    comps = []
    rest = vertices
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            grow = 0
            f = frontier
            while f:
                b = f & -f
                grow |= adj[b.bit_length() - 1]
                f ^= b
            frontier = grow & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


# ---------------------------------------------------------------- generators


def generate(family: str, params: Sequence[int] = (), seed: int | None = None) -> Graph:
    """Standard labelled member of a graph family.

    Labelling: paths and cycles in traversal order; ``star [t]`` has centre 0;
    bipartite and multipartite parts are contiguous blocks; hypercube vertices
    are binary indices with edges between ids differing in one bit;
    ``random_tree [n]`` decodes a Prüfer sequence drawn from ``random.Random(seed)``.
    """
    params = [int(p) for p in params]

    def need(count):
        if len(params) != count:
            raise ParameterError(f"{family} takes {count} parameter(s), got {len(params)}")

    if family == "path":
        need(1)
        (n,) = params
        if n < 1:
            raise ParameterError("path needs n >= 1")
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        need(1)
        (n,) = params
        if n < 3:
            raise ParameterError("cycle needs n >= 3")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "complete":
        need(1)
        (n,) = params
        if n < 1:
            raise ParameterError("complete graph needs n >= 1")
        return Graph.from_edges(n, combinations(range(n), 2))
    if family == "star":
        need(1)
        (t,) = params
        if t < 1:
            raise ParameterError("star K_{1,t} needs t >= 1")
        return Graph.from_edges(t + 1, [(0, i) for i in range(1, t + 1)])
    if family == "complete_bipartite":
        need(2)
        return _multipartite(params)
    if family == "complete_multipartite":
        if not params:
            raise ParameterError("complete_multipartite needs at least one part")
        return _multipartite(params)
    if family == "hypercube":
        need(1)
        (d,) = params
        if d < 0:
            raise ParameterError("hypercube needs d >= 0")
        n = 1 << d
        return Graph.from_edges(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)])
    if family == "random_tree":
        need(1)
        (n,) = params
        if seed is None:
            raise ParameterError("random_tree requires a seed")
        if n < 1:
            raise ParameterError("random_tree needs n >= 1")
        return _prufer_tree(n, random.Random(seed))
    raise ParameterError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def _multipartite(parts: Sequence[int]) -> Graph:
    if any(p < 1 for p in parts):
        raise ParameterError("every part must have at least one vertex")
    blocks = []
    start = 0
    for p in parts:
        blocks.append(range(start, start + p))
        start += p
    edges = [(u, v) for a, b in combinations(blocks, 2) for u in a for v in b]
    return Graph.from_edges(start, edges)


def _prufer_tree(n: int, rng: random.Random) -> Graph:
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = [v for v in range(n) if degree[v] == 1]
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(G: Graph, H: Graph) -> Graph:
    return Graph.from_edges(G.n + H.n, list(G.edges) + [(u + G.n, v + G.n) for u, v in H.edges])


# ----------------------------------------------------------------- metrics


@dataclass(frozen=True)
class MetricTable:
    """All-pairs hop distances.  Unreachable pairs hold ``math.inf``;
    ``radius`` is ``math.inf`` for disconnected (or empty) graphs."""

    dist: tuple[tuple[float, ...], ...]
    ecc: tuple[float, ...]
    radius: float

    @property
    def connected(self) -> bool:
        return self.radius != INF


def bfs_distances(G: Graph, source: int) -> list[float]:
    dist: list[float] = [INF] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in G.neighbors(u):
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def metrics(G: Graph) -> MetricTable:
    dist = tuple(tuple(bfs_distances(G, v)) for v in range(G.n))
    ecc = tuple(max(row, default=0) for row in dist)
    radius = min(ecc) if G.n and G.is_connected() else INF
    return MetricTable(dist, ecc, radius)


def radius(G: Graph) -> int:
    r = metrics(G).radius
    if r == INF:
        raise DisconnectedError("radius is infinite on a disconnected graph")
    return int(r)


def set_eccentricity(dist: Sequence[Sequence[float]], S: Iterable[int]) -> float:
    """e(S): the largest distance from S to any vertex."""
    rows = [dist[v] for v in S]
    return max(min(col) for col in zip(*rows))


def k_radius(G: Graph, k: int) -> int:
    """Minimum of e(S) over all k-subsets S, by exhaustive enumeration."""
    if not G.is_connected():
        raise DisconnectedError("k-radius is infinite on a disconnected graph")
    if not 1 <= k <= G.n:
        raise ParameterError(f"k must lie in 1..{G.n}")
    dist = metrics(G).dist
    return int(min(set_eccentricity(dist, S) for S in combinations(range(G.n), k)))


def independence_number(G: Graph, limit: int = 32) -> int:
    """Size of a maximum independent set, by branch and bound on bitmasks."""
    if G.n > limit:
        raise SizeLimitError(f"independence_number limited to n <= {limit}, got n={G.n}")
    adj = G.adj
    best = 0

    def branch(cand: int, size: int):
        nonlocal best
        if size + bin(cand).count("1") <= best:
            return
        if not cand:
            best = size
            return
        # branch on a candidate of maximum remaining degree
        v = max(from_mask(cand), key=lambda x: bin(adj[x] & cand).count("1"))
        branch(cand & ~(1 << v) & ~adj[v], size + 1)
        if adj[v] & cand:
            branch(cand & ~(1 << v), size)

    branch(G.full_mask, 0)
    return best


# -------------------------------------------------------------- operations


def cartesian_product(G: Graph, H: Graph) -> Graph:
    nH = H.n

    def idx(x, y):
        return x * nH + y

    edges = [(idx(x, a), idx(x, b)) for x in range(G.n) for a, b in H.edges]
    edges += [(idx(a, y), idx(b, y)) for a, b in G.edges for y in range(nH)]
    return Graph.from_edges(G.n * nH, edges, layout=(G.n, nH))


def project_to_factor(P: Graph, S: Iterable[int], which: str = "left") -> frozenset[int]:
    """First (``left``) or second (``right``) coordinates of a product vertex set."""
    if P.layout is None:
        raise UsageError("projection needs a graph built by cartesian_product")
    if which not in ("left", "right"):
        raise ParameterError("which must be 'left' or 'right'")
    _, nH = P.layout
    if which == "left":
        return frozenset(v // nH for v in S)
    return frozenset(v % nH for v in S)


def complement(G: Graph) -> Graph:
    return Graph.from_edges(G.n, [e for e in combinations(range(G.n), 2) if e not in G.edges])


def _check_edge(G: Graph, e: Sequence[int]) -> tuple[int, int]:
    u, v = e
    if not G.has_edge(u, v):
        raise EdgeError(f"{(u, v)} is not an edge")
    return _norm_edge(u, v)


def subdivide_edge(G: Graph, e: Sequence[int]) -> Graph:
    """Replace edge uw by the path u - n - w, where n is the new vertex id."""
    u, w = _check_edge(G, e)
    edges = [f for f in G.edges if f != (u, w)] + [(u, G.n), (G.n, w)]
    return Graph.from_edges(G.n + 1, edges)


def delete_edge(G: Graph, e: Sequence[int]) -> Graph:
    u, w = _check_edge(G, e)
    return Graph(G.n, G.edges - {(u, w)})


# ------------------------------------------------------------- edge lists


def to_edge_list_text(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"] + [f"{u} {v}" for u, v in G.edge_list()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m\\nu v\\n..."`` (0-indexed); blank lines and ``#`` comments are ignored."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise ParameterError("empty edge list")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise ParameterError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise ParameterError(f"header announces {m} edges, found {len(edges)}")
    G = Graph.from_edges(n, edges)
    if G.m != m:
        raise ParameterError("duplicate edges in edge list")
    return G
