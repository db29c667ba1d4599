import pytest

from cutlab.bitset import mask_of, popcount
from cutlab.errors import BadParams, DanglingId, DuplicateEdge, SelfLoop
from cutlab.graph_core import (
    build_graph,
    cayley_window,
    components,
    finite_window,
    label_mult,
    limit_size_class,
    window_ends,
)


def test_build_graph_rejects_bad_input():
    with pytest.raises(SelfLoop):
        build_graph(3, [(0, 0)])
    with pytest.raises(DuplicateEdge):
        build_graph(3, [(0, 1), (1, 0)])
    with pytest.raises(DanglingId):
        build_graph(3, [(0, 5)])
    with pytest.raises(BadParams):
        build_graph(0, [])


def test_coboundary_symmetry():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    side = mask_of([0, 1])
    assert g.coboundary(side) == g.coboundary(g.full_mask & ~side)
    assert popcount(g.coboundary(side)) == 2


def test_components():
    g = build_graph(5, [(0, 1), (2, 3)])
    comps = components(g)
    assert sorted(popcount(c) for c in comps) == [1, 2, 2]


# ball sizes in the rank-2 free family: 1 + 4 * (3^r - 1) / 2
def test_free_family_sizes():
    for r, n in ((2, 17), (3, 53), (4, 161)):
        w = cayley_window("free", radius=r, gens=2)
        assert w.graph.n == n
        assert popcount(w.frontier_mask) == 4 * 3 ** (r - 1)
        assert w.dist[w.basepoint] == 0


def test_free_labels_are_reduced_words():
    w = cayley_window("free", radius=2, gens=2)
    labs = set(w.graph.labels)
    assert "" in labs and "a" in labs and "ab" in labs
    assert "aA" not in labs  # never an unreduced word
    for lab in labs:
        for x, y in zip(lab, lab[1:]):
            assert x != y.swapcase()


def test_line_and_plane_families():
    wl = cayley_window("grid_Z", radius=5)
    assert wl.graph.n == 11
    assert sorted(int(s) for s in wl.graph.labels) == list(range(-5, 6))
    wp = cayley_window("grid_Z2", radius=3)
    assert wp.graph.n == 1 + 4 + 8 + 12
    assert wp.graph.degree(wp.basepoint) == 4


def test_window_zone_and_admissible():
    w = cayley_window("free", radius=4, gens=2)
    assert w.inner_radius == 2
    assert w.zone_mask == mask_of(
        [v for v in range(w.graph.n) if w.dist[v] > 2]
    )
    # no admissible edge touches the frontier
    for e, (u, v) in enumerate(w.graph.edges):
        if w.admissible_edge_mask >> e & 1:
            assert not (w.frontier_mask >> u & 1) and not (w.frontier_mask >> v & 1)


def test_window_ends_partition_outer_shell():
    w = cayley_window("free", radius=4, gens=2)
    ends = window_ends(w)
    assert len(ends) == 36
    union = 0
    for e in ends:
        assert e.shadow & union == 0
        union |= e.shadow
    assert union == w.zone_mask


def test_finite_window_has_no_frontier():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    w = finite_window(g)
    assert w.frontier_mask == 0
    assert w.admissible_edge_mask == g.all_edges_mask


def test_label_mult():
    assert label_mult("free", "ab", "B") == "a"
    assert label_mult("free", "a", "A") == ""
    assert label_mult("grid_Z", "-2", "3") == "1"
    assert label_mult("grid_Z2", "(1,0)", "(0,2)") == "(1,2)"
    with pytest.raises(BadParams):
        label_mult("tree", "0", "1")


def test_limit_size_class_on_line():
    w = cayley_window("grid_Z", radius=6)
    by_label = {lab: v for v, lab in enumerate(w.graph.labels)}
    whole = w.graph.full_mask
    assert limit_size_class(w, whole) == "Two"
    assert limit_size_class(w, 1 << by_label["0"]) == "Zero"
    ray = mask_of([v for lab, v in by_label.items() if int(lab) >= 0])
    assert limit_size_class(w, ray) == "One"


def test_deep_ray_levels_window():
    w = cayley_window("tree_with_end", radius=6, degree=3)
    # one label per level between -radius and radius
    lows = [lab for lab in w.graph.labels if lab.startswith("00000")]
    assert len(lows) >= 2  # the marked ray goes deep
