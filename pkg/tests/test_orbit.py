from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import stabgraph as sg
from stabgraph.errors import GuardExceeded
from stabgraph.graphstate import Graph, from_upper_triangle_code, upper_triangle_code
from stabgraph.orbit import (
    connected,
    enumerate_lc_iso_classes,
    lc_orbit,
    lc_representative,
)

P3 = Graph.from_edges(3, [(0, 1), (1, 2)])
EDGE = Graph.from_edges(2, [(0, 1)])
TRIANGLE = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


def graphs(max_n=5):
    return st.builds(
        lambda n, code: from_upper_triangle_code(n, code % (1 << (n * (n - 1) // 2))),
        st.integers(2, max_n), st.integers(0, 1 << 10))


def test_connected_examples():
    assert connected(EDGE)
    assert not connected(Graph.empty(2))
    assert connected(Graph.from_edges(5, [(i, i + 1) for i in range(4)]))


def test_orbit_fixed_points():
    assert lc_orbit(Graph.empty(3)) == {Graph.empty(3)}
    assert lc_orbit(EDGE) == {EDGE}


def test_orbit_p3_contains_triangle():
    orb = lc_orbit(P3)
    assert TRIANGLE in orb
    assert P3 in orb


def test_orbit_guard():
    ring6 = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    with pytest.raises(GuardExceeded):
        lc_orbit(ring6, guard=3)


@settings(max_examples=25, deadline=None)
@given(graphs())
def test_orbit_closure(g):
    orb = lc_orbit(g)
    for h in list(orb)[:4]:
        assert lc_orbit(h) == orb


def test_representative_triangle():
    rep = lc_representative(TRIANGLE)
    assert rep.edge_count() == 2


def test_representative_tree_keeps_edge_count():
    tree = Graph.from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    assert lc_representative(tree).edge_count() == 4


def test_representative_is_orbit_minimum():
    rep = lc_representative(P3)
    orb = lc_orbit(P3)
    key = lambda h: (h.edge_count(), upper_triangle_code(h))
    assert key(rep) == min(key(h) for h in orb)


@settings(max_examples=20, deadline=None)
@given(graphs())
def test_distance_invariant_across_orbit(g):
    orb = list(lc_orbit(g))
    d = sg.distance(orb[0])
    for h in orb[1:6]:
        assert sg.distance(h) == d


@settings(max_examples=15, deadline=None)
@given(graphs(max_n=4))
def test_schmidt_profile_invariant_across_orbit(g):
    def profile(h):
        return tuple(sg.schmidt_rank(h, {v for v in range(h.n) if (m >> v) & 1})
                     for m in range(1, (1 << h.n) - 1))
    orb = list(lc_orbit(g))
    p0 = profile(orb[0])
    for h in orb[1:6]:
        assert profile(h) == p0


def test_enumerate_small_counts():
    assert len(enumerate_lc_iso_classes(2)) == 1
    assert len(enumerate_lc_iso_classes(3)) == 1
    assert len(enumerate_lc_iso_classes(4)) == 2
    assert len(enumerate_lc_iso_classes(5)) == 4


def test_enumerate_representatives_are_connected_and_minimal():
    from itertools import permutations
    reps = enumerate_lc_iso_classes(4)
    for r in reps:
        assert connected(r)
        # class-minimal code: no orbit member relabeling beats it
        code = upper_triangle_code(r)
        for h in lc_orbit(r):
            dense = h.to_dense()
            for perm in permutations(range(4)):
                p = np.array(perm)
                c = upper_triangle_code(Graph.from_dense(dense[np.ix_(p, p)]))
                assert c >= code


def test_enumerate_matches_brute_force_oracle():
    # independent oracle: canonicalize every connected graph by the minimum
    # code over all vertex permutations and all orbit members
    from itertools import permutations
    for n in (3, 4):
        canon = set()
        for code in range(1 << (n * (n - 1) // 2)):
            g = from_upper_triangle_code(n, code)
            if not connected(g):
                continue
            best = None
            for h in lc_orbit(g):
                dense = h.to_dense()
                for perm in permutations(range(n)):
                    p = np.array(perm)
                    c = upper_triangle_code(Graph.from_dense(dense[np.ix_(p, p)]))
                    if best is None or c < best:
                        best = c
            canon.add(best)
        assert len(canon) == len(enumerate_lc_iso_classes(n))


def test_enumerate_guard():
    with pytest.raises(GuardExceeded):
        enumerate_lc_iso_classes(9)
    with pytest.raises(GuardExceeded):
        enumerate_lc_iso_classes(1)
