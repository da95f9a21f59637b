"""Subcode structure of stabilizer codes: single-qubit subgroups, the Pi
subgroup, Bell-pair detection, and qudit Pauli matrices."""
from __future__ import annotations

import numpy as np

import stabgraph as sg
from stabgraph.graphstate import Graph

bell = sg.standard_generators(Graph.from_edges(2, [(0, 1)]))
ring = sg.standard_generators(
    Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)]))

print("== Single-qubit subgroups ==")
for name, s in (("Bell pair", bell), ("5-ring", ring)):
    indices = [sg.single_qubit_subgroup(s, i)[1] for i in range(s.n)]
    print(f"  {name}: per-qubit indices {indices}")

print("\n== Pi subgroup ==")
for name, s in (("Bell pair", bell), ("5-ring", ring)):
    res = sg.pi_subgroup(s)
    print(f"  {name}: [S:Pi] = {res.index}")

print("\n== Bell pairs and trivially encoded qubits ==")
g = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4), (2, 4)])
s = sg.standard_generators(g)
print("edge + triangle:", sg.detect_bell_pairs(s))
padded = sg.StabilizerGroup.from_strings(["XXI", "ZZI"])
print("padded code, unused qubits:", sorted(sg.trivially_encoded(padded)))

print("\n== Generalized Pauli matrices ==")
for d in (2, 3, 5):
    x, z = sg.generalized_pauli(d)
    q = np.exp(2j * np.pi / d)
    dev = np.max(np.abs(z @ x - q * (x @ z)))
    print(f"  d={d}: max |ZX - qXZ| = {dev:.2e}")
