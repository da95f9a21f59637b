"""Distance, minimal supports, the minimal-support condition (MSC), vertex
partitioning and the combined per-graph classification."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import GuardExceeded
from .f2core import BinMatrix, rank
from .graphstate import Graph, standard_generators
from .orbit import connected
from .pauli import PauliOperator, StabilizerGroup, enumerate_group

ENUM_GUARD = 16


def distance_two(g: Graph) -> bool:
    """True iff some stabilizer element has weight exactly 2.

    A degree-1 vertex gives one immediately; otherwise only sums of at most
    two generator rows can reach weight 2, since a product of k standard
    generators has k distinct X positions and hence weight >= k."""
    if any(g.degree(v) == 1 for v in range(g.n)):
        return True
    for size in (1, 2):
        for comb in combinations(range(g.n), size):
            x = 0
            z = 0
            for v in comb:
                x |= 1 << v
                z ^= g.adj[v]
            if (x | z).bit_count() == 2:
                return True
    return False


def distance(g: Graph) -> int:
    """Minimum weight of a nonidentity stabilizer element.

    Searches sums of i generator rows for growing i; a product of i generators
    has weight >= i, so the search stops once i reaches the best weight found."""
    best = g.n + 1
    for size in range(1, g.n + 1):
        if size >= best:
            break
        for comb in combinations(range(g.n), size):
            x = 0
            z = 0
            for v in comb:
                x |= 1 << v
                z ^= g.adj[v]
            w = (x | z).bit_count()
            if w < best:
                best = w
    return best


def brute_force_distance(g: Graph) -> int:
    """Oracle: scan all 2^n - 1 nonidentity elements."""
    best = g.n + 1
    for t in range(1, 1 << g.n):
        x = t
        z = 0
        for v in range(g.n):
            if (t >> v) & 1:
                z ^= g.adj[v]
        best = min(best, (x | z).bit_count())
    return best


def minimal_elements(s: StabilizerGroup) -> list[tuple[frozenset[int], list[PauliOperator]]]:
    """Group nonidentity elements by support and keep the minimal supports.

    Each retained support carries 1 or 3 elements (3 only for even size)."""
    if s.n > ENUM_GUARD:
        raise GuardExceeded(f"n={s.n} exceeds enumeration guard {ENUM_GUARD}")
    by_support: dict[int, list[PauliOperator]] = {}
    for p in enumerate_group(s):
        if p.is_identity():
            continue
        by_support.setdefault(p.x | p.z, []).append(p)
    supports = list(by_support)
    minimal = []
    for sup in supports:
        if any(other != sup and other & ~sup == 0 for other in supports):
            continue
        minimal.append(sup)
    minimal.sort()
    out = []
    for sup in minimal:
        members = frozenset(i for i in range(s.n) if (sup >> i) & 1)
        out.append((members, by_support[sup]))
    return out


def _minimal_check_rows(g: Graph) -> BinMatrix:
    elems = [p for _, group in minimal_elements(standard_generators(g)) for p in group]
    rows = tuple(p.x | (p.z << g.n) for p in elems)
    return BinMatrix(rows, 2 * g.n)


def satisfies_msc(g: Graph) -> bool:
    """True iff X, Y and Z all occur at every qubit within the subgroup
    generated by the minimal elements.

    The single-qubit restriction of a group is itself closed, so it contains
    all three Paulis iff at least two distinct ones appear among generators."""
    elems = [p for _, group in minimal_elements(standard_generators(g)) for p in group]
    for i in range(g.n):
        seen = {((p.x >> i) & 1, (p.z >> i) & 1) for p in elems}
        seen.discard((0, 0))
        if len(seen) < 2:
            return False
    return True


def m_equals_s(g: Graph) -> bool:
    """True iff the minimal elements generate the full stabilizer (rank n)."""
    return rank(_minimal_check_rows(g)) == g.n


@dataclass(frozen=True)
class VertexPartition:
    v1: frozenset[int]
    v2: frozenset[int]
    v3: frozenset[int]
    v4: frozenset[int]


def vertex_partition(g: Graph) -> VertexPartition:
    """V1: degree-1 vertices; V2: their neighbors; V3: other vertices adjacent
    only to V2; V4: the rest.  Graphs without degree-1 vertices get V = V4."""
    v1 = {v for v in range(g.n) if g.degree(v) == 1}
    if not v1:
        return VertexPartition(frozenset(), frozenset(), frozenset(),
                               frozenset(range(g.n)))
    v2 = set()
    for v in v1:
        for u in range(g.n):
            if (g.adj[v] >> u) & 1:
                v2.add(u)
    v2 -= v1
    v3 = set()
    v2_mask = sum(1 << u for u in v2)
    for v in range(g.n):
        if v in v1 or v in v2:
            continue
        if g.adj[v] and g.adj[v] & ~v2_mask == 0:
            v3.add(v)
    v4 = set(range(g.n)) - v1 - v2 - v3
    return VertexPartition(frozenset(v1), frozenset(v2), frozenset(v3), frozenset(v4))


def has_short_cycles(g: Graph) -> bool:
    """True iff the graph contains a cycle of length 3 or 4."""
    for i in range(g.n):
        for j in range(i + 1, g.n):
            common = (g.adj[i] & g.adj[j]).bit_count()
            if g.has_edge(i, j) and common >= 1:
                return True  # triangle
            if common >= 2:
                return True  # 4-cycle i-u-j-w-i
    return False


@dataclass(frozen=True)
class ClassificationVerdict:
    tag: str  # Tree | DistanceTwo | SatisfiesMSC | Failed
    notes: str = ""


def analyze(g: Graph) -> ClassificationVerdict:
    """Classify in order: tree, then distance two, then MSC."""
    if not connected(g):
        raise ValueError("classification requires a connected graph")
    if g.edge_count() == g.n - 1:
        return ClassificationVerdict("Tree")
    if distance_two(g):
        return ClassificationVerdict("DistanceTwo")
    if satisfies_msc(g):
        return ClassificationVerdict("SatisfiesMSC")
    return ClassificationVerdict("Failed", "no classification condition holds")
