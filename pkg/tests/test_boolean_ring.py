import random

import pytest

from cutlab.bitset import bit_list, mask_of
from cutlab.boolean_ring import (
    Cut,
    canonical_side,
    complement,
    corners,
    cut_sort_key,
    intersect,
    is_nested,
    is_nested_family,
    separates,
    sym_diff,
)
from cutlab.errors import BadParams, ShadowSplit
from cutlab.graph_core import build_graph, cayley_window, finite_window, window_ends


def _random_window(rng, n=8):
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    for _ in range(n // 2):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return finite_window(build_graph(n, sorted(edges)))


def test_cut_basics():
    w = finite_window(build_graph(4, [(0, 1), (1, 2), (2, 3)]))
    c = Cut(w, mask_of([0, 1]))
    assert c.size == 1
    assert complement(c).side == mask_of([2, 3])
    assert complement(c).cob == c.cob
    with pytest.raises(BadParams):
        Cut(w, 1 << 9)


def test_ring_laws_random():
    """Symmetric difference and intersection obey the Boolean ring laws."""
    rng = random.Random(21)
    for _ in range(150):
        w = _random_window(rng)
        full = w.graph.full_mask
        a = Cut(w, rng.getrandbits(8) & full)
        b = Cut(w, rng.getrandbits(8) & full)
        c = Cut(w, rng.getrandbits(8) & full)
        assert sym_diff(a, b).side == sym_diff(b, a).side
        assert sym_diff(a, sym_diff(b, c)).side == sym_diff(sym_diff(a, b), c).side
        assert intersect(a, a).side == a.side
        assert sym_diff(a, a).side == 0
        lhs = intersect(a, sym_diff(b, c))
        rhs = sym_diff(intersect(a, b), intersect(a, c))
        assert lhs.side == rhs.side
        # the coboundary of a sum is the sum of coboundaries
        assert sym_diff(a, b).cob == a.cob ^ b.cob


def test_corners_and_nested():
    w = finite_window(build_graph(6, [(i, i + 1) for i in range(5)]))
    a = Cut(w, mask_of([0, 1]))
    b = Cut(w, mask_of([0, 1, 2, 3]))
    c = Cut(w, mask_of([2, 3]))
    assert is_nested(a, b)  # a inside b
    assert is_nested(a, c)  # disjoint
    x = Cut(w, mask_of([1, 2]))
    assert not is_nested(a, x)
    prof = corners(a, x)
    assert [prof.ab, prof.ab_star, prof.a_star_b, prof.a_star_b_star] == [True] * 4
    ok, witness = is_nested_family([a, b, c, complement(a)])
    assert ok and witness is None
    ok, witness = is_nested_family([a, x])
    assert not ok and witness == (a, x)


def test_canonical_side_avoids_basepoint():
    w = finite_window(build_graph(4, [(0, 1), (1, 2), (2, 3)]))
    c = Cut(w, mask_of([0, 1]))
    full = w.graph.full_mask
    assert canonical_side(full, c.side) == mask_of([2, 3])
    assert canonical_side(full, c.star) == c.star
    # sort key orders sides like their sorted vertex id tuples
    cuts = [Cut(w, s) for s in (mask_of([2, 3]), mask_of([1, 2]), mask_of([3]))]
    ordered = sorted(cuts, key=cut_sort_key)
    assert [bit_list(x.side) for x in ordered] == [[1, 2], [2, 3], [3]]


def test_separates_straddle_is_not_separation():
    w = cayley_window("free", radius=6, gens=2)
    ends = window_ends(w)
    # an admissible subtree cut strictly inside one shadow straddles it
    labs = w.graph.labels
    v5 = next(v for v in range(w.graph.n) if w.dist[v] == 5)
    side = 0
    for v, lab in enumerate(labs):
        if lab.startswith(labs[v5]):
            side |= 1 << v
    c = Cut(w, side)
    owner = next(e for e in ends if e.shadow >> v5 & 1)
    assert c.side & owner.shadow and owner.shadow & ~c.side
    other = next(e for e in ends if not e.shadow & owner.shadow)
    assert not separates(c, owner, other)
    with pytest.raises(ShadowSplit):
        separates(c, owner, other, strict=True)


def test_separates_clean_split():
    w = cayley_window("free", radius=4, gens=2)
    ends = window_ends(w)
    side = 0
    for v, lab in enumerate(w.graph.labels):
        if lab.startswith("a"):
            side |= 1 << v
    c = Cut(w, side)
    inside = [e for e in ends if e.shadow & side == e.shadow]
    outside = [e for e in ends if e.shadow & side == 0]
    assert inside and outside
    assert separates(c, inside[0], outside[0])
    assert not separates(c, inside[0], inside[-1])
