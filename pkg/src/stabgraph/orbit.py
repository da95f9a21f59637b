"""Local-complementation orbits, minimal-edge representatives, and exhaustive
enumeration of equivalence classes under LC plus vertex permutation."""
from __future__ import annotations

import numpy as np

from .errors import GuardExceeded
from .graphstate import Graph, from_upper_triangle_code, local_complement, upper_triangle_code

ORBIT_GUARD_DEFAULT = 10**6


def connected(g: Graph) -> bool:
    """Breadth-first reachability from vertex 1 covers all vertices."""
    if g.n < 1:
        raise ValueError("need at least one vertex")
    reach = 1
    while True:
        new = reach
        for v in range(g.n):
            if (reach >> v) & 1:
                new |= g.adj[v]
        if new == reach:
            break
        reach = new
    return reach == (1 << g.n) - 1


def lc_orbit(g: Graph, guard: int = ORBIT_GUARD_DEFAULT) -> set[Graph]:
    """Closure of {g} under local complementation at every vertex."""
    seen = {g.adj: g}
    stack = [g]
    while stack:
        cur = stack.pop()
        for v in range(g.n):
            nxt = local_complement(cur, v)
            if nxt.adj not in seen:
                if len(seen) >= guard:
                    raise GuardExceeded(f"LC orbit exceeded guard of {guard} members")
                seen[nxt.adj] = nxt
                stack.append(nxt)
    return set(seen.values())


def lc_representative(g: Graph, guard: int = ORBIT_GUARD_DEFAULT) -> Graph:
    """Orbit member with fewest edges; ties broken by least upper-triangle bitstring."""
    return min(lc_orbit(g, guard),
               key=lambda h: (h.edge_count(), upper_triangle_code(h)))


def _scan_tables(n: int):
    """Bit-position table for edges and bit-source tables for the adjacent
    transpositions (k, k+1), in the upper-triangle MSB-first packing."""
    m = n * (n - 1) // 2
    eb = np.zeros((n, n), dtype=np.int64)
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            eb[i, j] = eb[j, i] = m - 1 - idx
            idx += 1
    tsrc = np.zeros((n - 1, m), dtype=np.int64)
    for k in range(n - 1):
        perm = list(range(n))
        perm[k], perm[k + 1] = perm[k + 1], perm[k]
        for i in range(n):
            for j in range(i + 1, n):
                # bit at position eb[i,j] of the image comes from edge (perm[i], perm[j])
                tsrc[k, eb[i, j]] = eb[perm[i], perm[j]]
    return m, eb, tsrc


def _make_scan_kernel():
    from numba import njit

    @njit(cache=True)
    def scan(n, m, eb, tsrc):
        total = np.int64(1) << m
        visited = np.zeros(total >> 3 if total >= 8 else 1, dtype=np.uint8)
        reps = np.empty(1024, dtype=np.int64)
        nreps = 0
        stack = np.empty(1 << 16, dtype=np.int64)
        for code0 in range(total):
            if (visited[code0 >> 3] >> (code0 & 7)) & 1:
                continue
            # connectivity check from the raw code
            reach = np.int64(1)
            full = (np.int64(1) << n) - 1
            while True:
                new = reach
                for v in range(n):
                    if (reach >> v) & 1:
                        for u in range(n):
                            if u != v and (code0 >> eb[v, u]) & 1:
                                new |= np.int64(1) << u
                if new == reach:
                    break
                reach = new
            if reach != full:
                continue
            # flood the whole LC + permutation class
            if nreps == reps.shape[0]:
                bigger = np.empty(reps.shape[0] * 2, dtype=np.int64)
                bigger[:nreps] = reps
                reps = bigger
            reps[nreps] = code0
            nreps += 1
            visited[code0 >> 3] |= np.uint8(1 << (code0 & 7))
            sp = 0
            stack[sp] = code0
            sp += 1
            while sp > 0:
                sp -= 1
                c = stack[sp]
                for v in range(n):
                    # local complementation at v
                    c2 = c
                    for i in range(n):
                        if i != v and (c >> eb[v, i]) & 1:
                            for j in range(i + 1, n):
                                if j != v and (c >> eb[v, j]) & 1:
                                    c2 ^= np.int64(1) << eb[i, j]
                    if not (visited[c2 >> 3] >> (c2 & 7)) & 1:
                        visited[c2 >> 3] |= np.uint8(1 << (c2 & 7))
                        if sp == stack.shape[0]:
                            bigger = np.empty(stack.shape[0] * 2, dtype=np.int64)
                            bigger[:sp] = stack
                            stack = bigger
                        stack[sp] = c2
                        sp += 1
                for k in range(n - 1):
                    # adjacent transposition (k, k+1)
                    c2 = np.int64(0)
                    for p in range(m):
                        if (c >> tsrc[k, p]) & 1:
                            c2 |= np.int64(1) << p
                    if not (visited[c2 >> 3] >> (c2 & 7)) & 1:
                        visited[c2 >> 3] |= np.uint8(1 << (c2 & 7))
                        if sp == stack.shape[0]:
                            bigger = np.empty(stack.shape[0] * 2, dtype=np.int64)
                            bigger[:sp] = stack
                            stack = bigger
                        stack[sp] = c2
                        sp += 1
        return reps[:nreps]

    return scan


_SCAN_KERNEL = None


def enumerate_lc_iso_classes(n: int) -> list[Graph]:
    """One representative per class of connected n-vertex graphs under LC and
    vertex permutation; the representative carries the minimum upper-triangle
    bitstring over the whole class."""
    if not 2 <= n <= 8:
        raise GuardExceeded("exhaustive scan limited to 2 <= n <= 8")
    global _SCAN_KERNEL
    if _SCAN_KERNEL is None:
        _SCAN_KERNEL = _make_scan_kernel()
    m, eb, tsrc = _scan_tables(n)
    codes = _SCAN_KERNEL(n, m, eb, tsrc)
    return [from_upper_triangle_code(n, int(c)) for c in sorted(codes)]
