"""Shared oracles and generators for the test suite."""
from __future__ import annotations

import numpy as np

import stabgraph as sg
from stabgraph import lulc

_MATS = {(0, 0): np.eye(2, dtype=complex), (1, 0): lulc._X,
         (0, 1): lulc._Z, (1, 1): lulc._Y}


def random_graph(rng, n):
    a = np.triu(rng.integers(0, 2, (n, n)), 1)
    return sg.Graph.from_dense(a + a.T)


def random_connected_graph(rng, n):
    while True:
        g = random_graph(rng, n)
        if sg.connected(g):
            return g


def conjugated_stabilizer(g, factors):
    """Stabilizer of U^dag |psi_G> for a local Clifford U given as 2x2 factors.

    Returns None when a factor fails to conjugate a Pauli to a signed Pauli."""
    n = g.n
    gens = []
    for p in sg.standard_generators(g).generators.generators:
        x = z = ph = 0
        for i in range(n):
            xi, zi = (p.x >> i) & 1, (p.z >> i) & 1
            if not (xi or zi):
                continue
            m = factors[i].conj().T @ _MATS[(xi, zi)] @ factors[i]
            q = lulc.nearest_signed_pauli(m)
            if q is None:
                return None
            x |= q.x << i
            z |= q.z << i
            ph = (ph + q.phase) % 4
        gens.append(sg.PauliOperator(n, x, z, ph))
    return sg.StabilizerGroup(sg.CheckMatrix(n, tuple(gens)))


def twisted_lu_instance(rng, g):
    """(stabilizer, local unitary) with u|psi'> = |psi_G|: random per-qubit
    Cliffords composed with hub/leaf phase twists that fix the graph state."""
    n = g.n
    base = [lulc.CLIFFORD_TABLE[rng.integers(24)] for _ in range(n)]
    s = conjugated_stabilizer(g, base)
    tw = [np.eye(2, dtype=complex) for _ in range(n)]
    for a, bs in lulc._leaf_assignment(g).items():
        for b in bs:
            th = rng.uniform(0, 2 * np.pi)
            # exp(i th X_b) exp(-i th Z_a) fixes the state since X_b Z_a does
            tw[b] = tw[b] @ (np.cos(th) * np.eye(2) + 1j * np.sin(th) * lulc._X)
            tw[a] = (np.cos(th) * np.eye(2) - 1j * np.sin(th) * lulc._Z) @ tw[a]
    u = lulc.LocalUnitary(tuple(tw[i] @ base[i] for i in range(n)))
    return s, u


def schmidt_number(psi, n, a, tol=1e-8):
    """Number of singular values above tol across the bipartition (a, rest)."""
    a = sorted(a)
    rest = [i for i in range(n) if i not in a]
    t = psi.reshape((2,) * n).transpose(a + rest)
    m = t.reshape(2 ** len(a), 2 ** len(rest))
    return int(np.sum(np.linalg.svd(m, compute_uv=False) > tol))


def brute_force_id_on_a(g, a):
    """Elements of the graph stabilizer acting as identity on a, by enumeration."""
    a = set(a)
    out = []
    for p in sg.enumerate_group(sg.standard_generators(g)):
        if all(not (((p.x | p.z) >> i) & 1) for i in a):
            out.append((p.x, p.z, p.phase))
    return sorted(out)


def span_elements(n, check_rows):
    """All x/z patterns in the F2 span of the given packed rows."""
    elems = {0}
    for r in check_rows:
        elems |= {e ^ r for e in elems}
    return elems
