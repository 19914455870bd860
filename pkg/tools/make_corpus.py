"""Regenerate the graph6 corpora under src/psdthrottle/data/.

graphs_le7.g6    every graph on 1..7 vertices up to isomorphism (networkx atlas)
connected_8.g6   every connected graph on 8 vertices up to isomorphism

Connected 8-vertex graphs are obtained by attaching a new vertex to every
connected 7-vertex graph in every nonempty way (each connected graph has a
non-cut vertex), then removing isomorphic duplicates.
"""

import sys
from collections import defaultdict
from pathlib import Path

import networkx as nx

from psdthrottle.graph import Graph
from psdthrottle.graph6 import encode

OUT = Path(__file__).resolve().parents[1] / "src" / "psdthrottle" / "data"
EXPECTED_CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def to_graph(H):
    return Graph.from_edges(H.number_of_nodes(), H.edges())


def main():
    atlas = [H for H in nx.graph_atlas_g() if H.number_of_nodes() >= 1]
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / "graphs_le7.g6").write_text("".join(encode(to_graph(H)) + "\n" for H in atlas))

    seven = [H for H in atlas if H.number_of_nodes() == 7 and nx.is_connected(H)]
    buckets = defaultdict(list)
    for H in seven:
        for mask in range(1, 1 << 7):
            K = H.copy()
            K.add_edges_from((7, v) for v in range(7) if mask >> v & 1)
            key = (tuple(sorted(d for _, d in K.degree())), nx.weisfeiler_lehman_graph_hash(K, iterations=3))
            if not any(nx.is_isomorphic(K, other) for other in buckets[key]):
                buckets[key].append(K)
    eight = [K for group in buckets.values() for K in group]
    if len(eight) != EXPECTED_CONNECTED[8]:
        sys.exit(f"expected {EXPECTED_CONNECTED[8]} connected graphs on 8 vertices, got {len(eight)}")
    lines = sorted(encode(to_graph(K)) for K in eight)
    (OUT / "connected_8.g6").write_text("".join(s + "\n" for s in lines))
    print(f"wrote {len(atlas)} graphs (n <= 7) and {len(eight)} connected graphs (n = 8)")


if __name__ == "__main__":
    main()
