import random

import pytest

from cutlab.bitset import mask_of, popcount
from cutlab.boolean_ring import Cut
from cutlab.cut_search import (
    brute_force_cuts,
    enumerate_tight_cuts,
    make_pool,
    min_separating_coboundary,
    nested_generating_set,
)
from cutlab.errors import BudgetExceeded, IncompleteNestedSet, KMaxExhausted
from cutlab.gf2 import Gf2Basis
from cutlab.graph_core import build_graph, cayley_window, finite_window, window_ends
from cutlab.peripheral import elliptic_pool, empty_system


def _random_window(rng, n, extra):
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    tries = 4 * extra + 8
    while extra > 0 and tries > 0:
        tries -= 1
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v and (min(u, v), max(u, v)) not in edges:
            edges.add((min(u, v), max(u, v)))
            extra -= 1
    return finite_window(build_graph(n, sorted(edges)))


def test_enumeration_matches_brute_force():
    """Seeded sweep against the exhaustive oracle, smaller than the full gate."""
    rng = random.Random(31)
    for _ in range(40):
        w = _random_window(rng, rng.randint(4, 10), rng.randint(0, 6))
        k = rng.randint(1, 3)
        fast = {c.side for c in enumerate_tight_cuts(w, k)}
        slow = {c.side for c in brute_force_cuts(w, k, tight_only=True)}
        assert fast == slow


def test_enumeration_is_sorted_and_oriented():
    w = _random_window(random.Random(32), 8, 4)
    cuts = enumerate_tight_cuts(w, 3)
    assert all(not c.side & 1 for c in cuts)  # canonical side avoids vertex 0
    sizes = [c.size for c in cuts]
    assert sizes == sorted(sizes)


def test_anchor_orientation():
    w = finite_window(build_graph(5, [(i, i + 1) for i in range(4)]))
    cuts = enumerate_tight_cuts(w, 1, anchor=(4, 0))
    assert cuts and all(c.side >> 4 & 1 and not c.side & 1 for c in cuts)


def test_tree_windows_take_the_fast_path():
    w = cayley_window("free", radius=3, gens=2)
    cuts = enumerate_tight_cuts(w, 2)
    # every tight cut of a tree window is a one-edge half-tree
    assert cuts and all(c.size == 1 for c in cuts)
    for c in cuts:
        assert c.cob & w.admissible_edge_mask == c.cob


def test_budget_guard():
    w = cayley_window("free", radius=4, gens=2)
    with pytest.raises(BudgetExceeded):
        elliptic_pool(w, empty_system(w), 3, budget=50)


def test_min_separating_structural_vs_pool():
    w = cayley_window("grid_Z", radius=6)
    ends = window_ends(w)
    assert len(ends) == 2
    pool = elliptic_pool(w, empty_system(w), 2)
    via_pool = min_separating_coboundary(w, ends[0], ends[1], pool=pool)
    structural = min_separating_coboundary(w, ends[0], ends[1], k_max=4)
    assert via_pool == structural == 1


def test_min_separating_strict_exhaustion():
    w = cayley_window("free", radius=4, gens=2)
    ends = window_ends(w)
    with pytest.raises(KMaxExhausted):
        min_separating_coboundary(w, ends[0], ends[1], k_max=0, strict=True)


def test_nested_generating_set_spans_and_nests():
    rng = random.Random(33)
    built = 0
    for _ in range(30):
        w = _random_window(rng, rng.randint(5, 9), rng.randint(0, 2))
        try:
            fam = nested_generating_set(w, 2)
        except IncompleteNestedSet:
            continue
        built += 1
        sides = [c.side for c in fam]
        assert 0 in sides and w.graph.full_mask in sides
        # pairwise nested, complement closed
        full = w.graph.full_mask
        for a in fam:
            assert full & ~a.side in sides
            for b in fam:
                assert any(
                    not m
                    for m in (
                        a.side & b.side,
                        a.side & ~b.side & full,
                        ~a.side & b.side & full,
                        ~a.side & ~b.side & full,
                    )
                )
        # spans every tight cut of size <= 2 over GF(2) with V adjoined
        basis = Gf2Basis([c.side for c in fam])
        for c in enumerate_tight_cuts(w, 2):
            assert basis.contains(c.side) or basis.contains(c.side ^ full)
    assert built >= 20


def test_make_pool_membership():
    w = cayley_window("grid_Z", radius=5)
    cuts = enumerate_tight_cuts(w, 2)
    pool = make_pool(w, 2, cuts)
    assert cuts[0] in pool
    outside = Cut(w, mask_of([w.basepoint]))
    assert (outside in pool) == (outside.side in {c.side for c in cuts})
