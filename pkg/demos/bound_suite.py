"""Every general bound on a handful of graphs, printed as TSV.

Each row is one inequality instantiated with exact searched values.  Rows
marked not applicable carry the reason their hypothesis fails.
"""

from __future__ import annotations

from psdthrottle import bound_report, cartesian_product, generate, petersen_graph, product_bound_checks
from psdthrottle.graph6 import encode

for G in (generate("path", [6]), generate("complete", [4]), petersen_graph()):
    rep = bound_report(G, graph_id=encode(G))
    print(rep.to_tsv())

P2, P4 = generate("path", [2]), generate("path", [4])
print(product_bound_checks(P2, P4, graph_id="P2 x P4").to_tsv())
print("grid vertices:", cartesian_product(P2, P4).n)
