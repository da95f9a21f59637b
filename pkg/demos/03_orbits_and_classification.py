"""LC orbits, class enumeration, and the distance / minimal-support
classification pipeline."""
from __future__ import annotations

import stabgraph as sg
from stabgraph.graphstate import Graph

print("== LC orbit of P3 ==")
p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
for h in sorted(sg.lc_orbit(p3), key=sg.upper_triangle_code):
    print("  ", h.edges())
print("representative (fewest edges):", sg.lc_representative(p3).edges())

print("\n== Classes under LC + isomorphism ==")
for n in range(2, 8):
    print(f"  n={n}: {len(sg.enumerate_lc_iso_classes(n))} classes")

print("\n== Classification ==")
for name, g in [
        ("path P5", Graph.from_edges(5, [(i, i + 1) for i in range(4)])),
        ("5-ring", Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])),
        ("triangle+tail", Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]))]:
    v = sg.analyze(g)
    print(f"  {name}: distance {sg.distance(g)}, verdict {v.tag}")

print("\n== Minimal supports of the 5-ring ==")
ring = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
for support, elems in sg.minimal_elements(sg.standard_generators(ring))[:4]:
    print("  support", sorted(v + 1 for v in support), "->",
          [str(e) for e in elems])
print("satisfies the minimal-support condition:", sg.satisfies_msc(ring))
print("minimal elements generate the whole group:", sg.m_equals_s(ring))
