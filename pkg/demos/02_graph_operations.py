"""Graph-state manipulations: local complementation, Pauli measurements,
Schmidt rank and the entanglement measure."""
from __future__ import annotations

import stabgraph as sg
from stabgraph.graphstate import Graph

star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
print("star K_{1,3}:", star.edges())

print("\n== Local complementation ==")
k4 = sg.local_complement(star, 0)
print("LC at the center turns the star into K4:", k4.edges())
back = sg.local_complement(k4, 0)
print("applying it again restores the star:", back == star)

print("\n== Measurements (graph rules) ==")
p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
print("P3:", p3.edges())
print("Z-measure middle vertex ->", sg.measure(p3, 1, "Z").edges())
print("Y-measure middle vertex ->", sg.measure(p3, 1, "Y").edges())
print("X-measure end (neighbor=2) ->", sg.measure(p3, 0, "X", 1).edges())

print("\n== Schmidt rank and entanglement ==")
ring = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
for a in ({0}, {0, 1}, {0, 2}):
    print(f"ring, A={sorted(v + 1 for v in a)}: schmidt rank",
          sg.schmidt_rank(ring, a))
print("entanglement over singletons:",
      sg.entanglement_measure(ring, [{v} for v in range(5)]))
print("entanglement over {1,2,3},{4,5}:",
      sg.entanglement_measure(ring, [{0, 1, 2}, {3, 4}]))
