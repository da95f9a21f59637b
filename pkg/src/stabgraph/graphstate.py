"""Graph states: conversion from stabilizers, local complementation,
Pauli measurements, Schmidt rank and the entanglement measure.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .f2core import BinMatrix, kernel, rank
from .pauli import CheckMatrix, PauliOperator, StabilizerGroup


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: adjacency rows bit-packed, one int per vertex."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count != n")
        for i, r in enumerate(self.adj):
            if r < 0 or r >> self.n:
                raise ValueError("adjacency bits out of range")
            if (r >> i) & 1:
                raise ValueError("nonzero diagonal")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if ((self.adj[i] >> j) & 1) != ((self.adj[j] >> i) & 1):
                    raise ValueError("adjacency not symmetric")

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        """Edges as 0-based (i, j) pairs."""
        rows = [0] * n
        for i, j in edges:
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"bad edge ({i}, {j})")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return Graph(n, tuple(rows))

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph(n, (0,) * n)

    @staticmethod
    def from_dense(a) -> "Graph":
        a = np.asarray(a, dtype=np.int64) % 2
        n = a.shape[0]
        return Graph(n, tuple(int(sum(int(a[i, j]) << j for j in range(n)))
                              for i in range(n)))

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.n, self.n), dtype=np.uint8)
        for i in range(self.n):
            for j in range(self.n):
                out[i, j] = (self.adj[i] >> j) & 1
        return out

    def neighbors(self, v: int) -> int:
        """Neighborhood of v as a bitmask."""
        return self.adj[v]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)
                if (self.adj[i] >> j) & 1]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.adj[i] >> j) & 1)


def upper_triangle_code(g: Graph) -> int:
    """Pack the upper triangle row-major, first pair (1,2) most significant,
    so numeric order on codes equals lexicographic order on the bitstrings."""
    m = g.n * (g.n - 1) // 2
    code = 0
    idx = 0
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if (g.adj[i] >> j) & 1:
                code |= 1 << (m - 1 - idx)
            idx += 1
    return code


def from_upper_triangle_code(n: int, code: int) -> Graph:
    m = n * (n - 1) // 2
    rows = [0] * n
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (code >> (m - 1 - idx)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(rows))


def standard_generators(g: Graph) -> StabilizerGroup:
    """Generator for vertex a: X on a, Z on each neighbor; check matrix [I|G]."""
    gens = tuple(PauliOperator(g.n, 1 << a, g.adj[a], 0) for a in range(g.n))
    return StabilizerGroup(CheckMatrix(g.n, gens))


@dataclass(frozen=True)
class LocalCliffordRecord:
    """Single-qubit Clifford tags applied during conversion, in application order."""

    ops: tuple[tuple[str, int], ...]  # (tag in {"H","S","Z"}, qubit)


def _conjugate_single(p: PauliOperator, q: int, tag: str) -> PauliOperator:
    """Conjugate p by the named Clifford acting on qubit q: p -> U p U^dag."""
    bit = 1 << q
    x, z, ph = p.x, p.z, p.phase
    xb, zb = (x >> q) & 1, (z >> q) & 1
    if tag == "H":
        # X<->Z, Y -> -Y
        x = (x & ~bit) | (zb << q)
        z = (z & ~bit) | (xb << q)
        if xb and zb:
            ph = (ph + 2) % 4
    elif tag == "S":
        # X -> Y, Y -> -X, Z -> Z
        if xb and zb:
            ph = (ph + 2) % 4
        z ^= bit if xb else 0
    elif tag == "Z":
        # X -> -X, Y -> -Y
        if xb:
            ph = (ph + 2) % 4
    else:
        raise ValueError(f"unknown Clifford tag {tag!r}")
    return PauliOperator(p.n, x, z, ph)


def stab_to_graph(s: StabilizerGroup) -> tuple[Graph, LocalCliffordRecord]:
    """Bring a stabilizer state's check matrix to [I|G] by row reduction and
    per-pivot Hadamards; clear Y diagonals with S and signs with Z."""
    n = s.n
    if s.m != n:
        raise ValueError("not a stabilizer state (m != n)")
    gens = list(s.generators.generators)
    record: list[tuple[str, int]] = []

    for col in range(n):
        pivot = next((i for i in range(col, n) if (gens[i].x >> col) & 1), None)
        if pivot is None:
            # no X pivot reachable by row operations: Hadamard this qubit
            record.append(("H", col))
            gens = [_conjugate_single(p, col, "H") for p in gens]
            pivot = next((i for i in range(col, n) if (gens[i].x >> col) & 1), None)
            if pivot is None:
                raise RuntimeError("pivot search failed on a stabilizer state")
        gens[col], gens[pivot] = gens[pivot], gens[col]
        for i in range(n):
            if i != col and (gens[i].x >> col) & 1:
                gens[i] = gens[i] * gens[col]

    # clear Y entries on the diagonal (z bit where the x pivot sits)
    for i in range(n):
        if (gens[i].z >> i) & 1:
            record.append(("S", i))
            gens = [_conjugate_single(p, i, "S") for p in gens]
    # fix signs: with the x block equal to I, Z on qubit i flips generator i only
    for i in range(n):
        if gens[i].phase == 2:
            record.append(("Z", i))
            gens = [_conjugate_single(p, i, "Z") for p in gens]
    for g_ in gens:
        if g_.phase != 0:
            raise RuntimeError("sign cleanup failed")

    adj = tuple(g_.z for g_ in gens)
    return Graph(n, adj), LocalCliffordRecord(tuple(record))


def local_complement(g: Graph, v: int) -> Graph:
    """Complement the subgraph induced on the neighborhood of v."""
    if not 0 <= v < g.n:
        raise ValueError("vertex out of range")
    nb = g.adj[v]
    rows = list(g.adj)
    for i in range(g.n):
        if (nb >> i) & 1:
            rows[i] ^= nb & ~(1 << i)
    return Graph(g.n, tuple(rows))


def measure(g: Graph, v: int, basis: str, b: int | None = None) -> Graph:
    """Graph transformation for a Pauli measurement of vertex v (up to local
    Cliffords on the remaining qubits; correction operators are not computed)."""
    if not 0 <= v < g.n:
        raise ValueError("vertex out of range")
    if basis == "Z":
        rows = [r & ~(1 << v) for r in g.adj]
        rows[v] = 0
        return Graph(g.n, tuple(rows))
    if basis == "Y":
        return measure(local_complement(g, v), v, "Z")
    if basis == "X":
        if g.adj[v] == 0:
            return g  # measuring X on an isolated |+> leaves the state unchanged
        if b is None or not (g.adj[v] >> b) & 1:
            raise ValueError("X measurement needs a neighbor b of v")
        h = local_complement(g, b)
        h = measure(h, v, "Y")
        return local_complement(h, b)
    raise ValueError(f"unknown basis {basis!r}")


def schmidt_rank(g: Graph, a) -> int:
    """GF(2) rank of the off-diagonal adjacency block G_AB."""
    a = set(a)
    comp = [j for j in range(g.n) if j not in a]
    if not a or not comp or not a <= set(range(g.n)):
        raise ValueError("invalid bipartition")
    rows = []
    for i in sorted(a):
        rows.append(sum(((g.adj[i] >> j) & 1) << pos for pos, j in enumerate(comp)))
    return rank(BinMatrix(tuple(rows), len(comp)))


def _id_on_a_subsets(g: Graph, a) -> BinMatrix:
    """Kernel basis of generator subsets acting as identity on a.

    A subset T (bitmask t) multiplies to an element with x_i = t_i and
    z_i = parity of |T restricted to neighbors of i|; identity on a means both
    vanish for every i in a."""
    conds = []
    for i in sorted(set(a)):
        conds.append(1 << i)
        conds.append(g.adj[i])
    if not conds:
        conds_m = BinMatrix((0,), g.n)
    else:
        conds_m = BinMatrix(tuple(conds), g.n)
    return kernel(conds_m)


def find_id_on_A(g: Graph, a) -> CheckMatrix:
    """Generators of S_A = elements of the graph stabilizer acting as identity on a."""
    a = set(a)
    if not a <= set(range(g.n)):
        raise ValueError("a must be a subset of the vertex set")
    basis = _id_on_a_subsets(g, a)
    gens = standard_generators(g).generators.generators
    out = []
    for t in basis.rows:
        p = PauliOperator(g.n, 0, 0, 0)
        for i in range(g.n):
            if (t >> i) & 1:
                p = p * gens[i]
        out.append(p)
    return CheckMatrix(g.n, tuple(out))


def entanglement_measure(g: Graph, partition) -> int:
    """E = n - rank of the concatenated generators of all S_A, A in partition."""
    seen: set[int] = set()
    for part in partition:
        part = set(part)
        if part & seen or not part <= set(range(g.n)):
            raise ValueError("partition sets must be disjoint subsets of V")
        seen |= part
    if seen != set(range(g.n)):
        raise ValueError("partition must cover all vertices")
    rows = []
    for part in partition:
        cm = find_id_on_A(g, part)
        rows.extend(cm.to_binmatrix().rows)
    if not rows:
        return g.n
    return g.n - rank(BinMatrix(tuple(rows), 2 * g.n))
