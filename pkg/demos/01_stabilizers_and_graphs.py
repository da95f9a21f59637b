"""Walk through the stabilizer formalism basics: Pauli strings, check
matrices, and converting a stabilizer state to graph form."""
from __future__ import annotations

import stabgraph as sg
from stabgraph import lulc

print("== Pauli operators ==")
p = sg.parse_pauli("XZZXI")
print(f"parse('XZZXI') -> support {sorted(p.support)}, weight {p.weight}")
q = sg.parse_pauli("X") * sg.parse_pauli("Z")
print(f"X * Z = {q}  (phase tracked as an i-exponent)")

print("\n== A stabilizer group ==")
s = sg.StabilizerGroup.from_strings(["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"])
print(f"{s.m} generators on {s.n} qubits, valid:",
      sg.is_valid_stabilizer(s.generators))
print("first few elements:",
      ", ".join(str(e) for e in list(sg.enumerate_group(s))[:5]), "...")

print("\n== GHZ state to graph form ==")
ghz = sg.StabilizerGroup.from_strings(["XXX", "ZZI", "IZZ"])
g, record = sg.stab_to_graph(ghz)
print("edges:", [(i + 1, j + 1) for i, j in g.edges()])
print("single-qubit Cliffords applied:",
      [(tag, q + 1) for tag, q in record.ops])

# verify by replaying the recorded gates on the actual statevector
v = lulc.stabilizer_state_vector(ghz)
v2 = lulc.replay_record(record, v, 3)
ok = lulc.states_equal_up_to_phase(v2, lulc.graph_state_vector(g), 1e-10)
print("statevector replay matches the graph state:", ok)
