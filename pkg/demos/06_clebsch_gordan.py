"""Clebsch-Gordan transforms for the dihedral and Heisenberg groups:
fusion rules, explicit unitaries, verification, and label recovery."""
from __future__ import annotations

import numpy as np

from stabgraph.reptheory import (
    DihedralIrrep,
    HeisenbergIrrep,
    character_fusion_oracle,
    decomposition_deviation,
    fuse,
    recover_mu2,
)

print("== Dihedral group, n = 8 ==")
for m1, m2 in [(DihedralIrrep.chi(1, 0), DihedralIrrep.chi(0, 1)),
               (DihedralIrrep.chi(0, 1), DihedralIrrep.rho(8, 2)),
               (DihedralIrrep.rho(8, 1), DihedralIrrep.rho(8, 2)),
               (DihedralIrrep.rho(8, 2), DihedralIrrep.rho(8, 2))]:
    res = fuse("dihedral", 8, m1, m2)
    outs = " + ".join(f"{mu.label()}" + (f" (x{k})" if k > 1 else "")
                      for mu, k in res.outputs)
    dev = decomposition_deviation("dihedral", 8, m1, m2)
    print(f"  {m1.label()} * {m2.label()} = {outs}   "
          f"[{res.type_tag}, deviation {dev:.1e}]")

print("\n== Heisenberg group, p = 3 ==")
for m1, m2 in [(HeisenbergIrrep.chi(3, 1, 2), HeisenbergIrrep.chi(3, 2, 1)),
               (HeisenbergIrrep.chi(3, 1, 1), HeisenbergIrrep.sigma(3, 2)),
               (HeisenbergIrrep.sigma(3, 1), HeisenbergIrrep.sigma(3, 1)),
               (HeisenbergIrrep.sigma(3, 1), HeisenbergIrrep.sigma(3, 2))]:
    res = fuse("heisenberg", 3, m1, m2)
    outs = " + ".join(f"{mu.label()}" + (f" (x{k})" if k > 1 else "")
                      for mu, k in res.outputs)
    dev = decomposition_deviation("heisenberg", 3, m1, m2)
    print(f"  {m1.label()} * {m2.label()} = {outs}   "
          f"[{res.type_tag}, deviation {dev:.1e}]")

print("\n== Character-theory cross-check ==")
m1, m2 = HeisenbergIrrep.sigma(3, 1), HeisenbergIrrep.sigma(3, 2)
oracle = character_fusion_oracle("heisenberg", 3, m1, m2)
print("  sigma:1 * sigma:2 multiplicities by characters:",
      {mu.label(): k for mu, k in sorted(oracle.items(), key=lambda t: t[0].label())})

print("\n== Recovering the second input label ==")
m1, m2 = DihedralIrrep.rho(8, 1), DihedralIrrep.rho(8, 2)
res = fuse("dihedral", 8, m1, m2)
for (mu, _), raw in zip(res.outputs, res.raw_labels):
    rec = recover_mu2("dihedral", 8, m1, mu, raw_index=raw)
    print(f"  output {mu.label()} -> second input was {rec.label()}")

print("\n== The unitary itself is exact ==")
u = res.unitary
print("  ||U U^dag - I||_max =", np.max(np.abs(u @ u.conj().T - np.eye(4))))
