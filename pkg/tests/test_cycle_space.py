import random

import pytest

from cutlab.bitset import bit_list, iter_bits, lowest_set
from cutlab.boolean_ring import Cut
from cutlab.cone_off import build_cone_off
from cutlab.cycle_space import (
    ChainViolation,
    CycleVector,
    GeneratingSet,
    algebraic_generates,
    alternating_sequence,
    cone_cycle_tameness_witness,
    cone_generating_set,
    cycle_basis,
    dagger_check,
    hamann_chain,
    simple_cycles_upto,
)
from cutlab.errors import BadParams
from cutlab.graph_core import build_graph, cayley_window, finite_window
from cutlab.peripheral import coset_system, level_system


def _k4():
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def _ladder23():
    return build_graph(6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)])


def test_cycle_vector_parity_guard():
    g = _k4()
    CycleVector(g, 0b000111 & 0)  # empty vector is fine
    with pytest.raises(BadParams):
        CycleVector(g, 0b000011)  # two edges sharing vertex 0 leave odd ends


def test_cycle_basis_sizes():
    tree = build_graph(7, [(i, i + 1) for i in range(6)])
    assert cycle_basis(tree) == []
    assert len(cycle_basis(_k4())) == 3
    two_parts = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert len(cycle_basis(two_parts)) == 2  # |E| - |V| + components


def test_simple_cycles_counts_on_k4():
    g = _k4()
    assert len(simple_cycles_upto(g, 3)) == 4
    assert len(simple_cycles_upto(g, 4)) == 7
    for c in simple_cycles_upto(g, 4):
        assert c.support in (3, 4)


def test_algebraic_generates():
    g = _k4()
    assert algebraic_generates(GeneratingSet(simple_cycles_upto(g, 3)), g)
    one = GeneratingSet(simple_cycles_upto(g, 3)[:1])
    assert not algebraic_generates(one, g)


def _brute_dagger(rows, target, u):
    """Gray-code walk over all subset sums restricted to u."""
    rows = [r & u for r in rows]
    goal = target & u
    if goal == 0:
        return True
    acc = 0
    for i in range(1, 1 << len(rows)):
        acc ^= rows[(i & -i).bit_length() - 1]
        if acc == goal:
            return True
    return False


def test_dagger_check_matches_brute_force():
    rng = random.Random(60913)
    agree = disagree = 0
    for _ in range(120):
        n = rng.randrange(4, 9)
        edges = {(i, rng.randrange(i)) for i in range(1, n)}
        for _ in range(n):
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v:
                edges.add((max(u, v), min(u, v)))
        g = build_graph(n, sorted((min(a, b), max(a, b)) for a, b in edges))
        basis = cycle_basis(g)
        if not basis:
            continue
        pool = simple_cycles_upto(g, 5)
        if not pool:
            continue
        s = rng.sample(pool, min(len(pool), rng.randrange(1, 8)))
        target = CycleVector(g, 0)
        for c in basis:
            if rng.random() < 0.5:
                target = target ^ c
        u = 0
        for e in range(len(g.edges)):
            if rng.random() < 0.6:
                u |= 1 << e
        ok, combo = dagger_check(s, target, u)
        assert ok == _brute_dagger([c.edges for c in s], target.edges, u)
        if ok:
            acc = 0
            for i in combo:
                acc ^= s[i].edges
            assert (acc ^ target.edges) & u == 0
            agree += 1
        else:
            disagree += 1
    assert agree > 20 and disagree > 20


def test_hamann_chain_on_path():
    w = finite_window(build_graph(6, [(i, i + 1) for i in range(5)]))
    en = [Cut(w, (1 << (i + 1)) - 1) for i in range(5)]
    b = en[1]  # side {0,1}
    x = (1 << 1) | (1 << 4)
    chain = hamann_chain(en, b, x)
    assert not isinstance(chain, ChainViolation)
    assert [bit_list(c.side) for c in chain] == [[0, 1], [0, 1, 2], [0, 1, 2, 3]]
    for a, d in zip(chain, chain[1:]):
        assert a.side & ~d.side == 0
        assert a.side & x == b.side & x


def test_hamann_chain_violation():
    w = finite_window(build_graph(6, [(i, i + 1) for i in range(5)]))
    b = Cut(w, 0b000011)
    other = Cut(w, 0b000110)  # same trace on x, incomparable
    x = (1 << 1) | (1 << 5)
    out = hamann_chain([b, other], b, x)
    assert isinstance(out, ChainViolation)
    assert {out.c1.side, out.c2.side} == {0b000011, 0b000110}


def test_hamann_chain_bad_params():
    w = finite_window(build_graph(6, [(i, i + 1) for i in range(5)]))
    en = [Cut(w, (1 << (i + 1)) - 1) for i in range(5)]
    with pytest.raises(BadParams):
        hamann_chain(en, en[1], 1 << 0)  # b does not split x
    with pytest.raises(BadParams):
        hamann_chain(en[2:], en[0], (1 << 0) | (1 << 5))  # b not in family


def test_alternating_sequence_on_ladder():
    g = _ladder23()
    w = finite_window(g)
    b0, b1 = cycle_basis(g)
    assert bit_list(b0.edges) == [0, 2, 4, 5]
    assert bit_list(b1.edges) == [1, 3, 5, 6]
    target = b0 ^ b1
    b = Cut(w, 0b001001)  # side {0, 3}
    edges, cycles = alternating_sequence(target, b, [b0, b1])
    assert edges == [0, 2] and cycles == [0]
    # each listed cycle carries the pair of coboundary edges it links
    for (e, f), i in zip(zip(edges, edges[1:]), cycles):
        assert ((b0, b1)[i].edges >> e) & 1 and (((b0, b1)[i].edges >> f) & 1)


def test_alternating_sequence_longer_walk():
    """3-rung ladder: opposite end rungs force a two-cycle walk."""
    g = build_graph(
        8,
        [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7),
         (0, 4), (1, 5), (2, 6), (3, 7)],
    )
    w = finite_window(g)
    basis = cycle_basis(g)
    assert len(basis) == 3
    target = basis[0]
    for c in basis[1:]:
        target = target ^ c
    b = Cut(w, 0b00010001)  # side {0, 4}: the left rung column
    edges, cycles = alternating_sequence(target, b, basis)
    assert len(edges) == len(cycles) + 1
    cross = target.edges & b.cob
    assert edges[0] != edges[-1]
    assert {edges[0], edges[-1]} == set(bit_list(cross))
    for (e, f), i in zip(zip(edges, edges[1:]), cycles):
        assert (basis[i].edges >> e) & 1 and (basis[i].edges >> f) & 1


def test_alternating_sequence_guards():
    g = _ladder23()
    w = finite_window(g)
    b0, b1 = cycle_basis(g)
    b = Cut(w, 0b001001)
    with pytest.raises(BadParams):
        alternating_sequence(b0 ^ b1, b, [b0])  # does not sum to the target
    square = Cut(w, 0b010010)  # side {1, 4}: crossed four times
    with pytest.raises(BadParams):
        alternating_sequence(b0 ^ b1, square, [b0, b1])


def test_cone_generating_set_and_witness():
    wl = cayley_window("tree_with_end", radius=6, degree=3)
    cone_l = build_cone_off(wl, level_system(wl))
    sl = cone_generating_set(cone_l)
    wit = cone_cycle_tameness_witness(cone_l, sl)
    assert wit is not None
    assert wit.n_classes >= 2
    ok, _ = dagger_check(sl, wit.cycle, wit.edge_window)
    assert not ok  # the witness really escapes every short combination

    wf = cayley_window("free", radius=4, gens=2)
    cone_f = build_cone_off(wf, coset_system(wf))
    sf = cone_generating_set(cone_f)
    assert len(sf) > 0 and sf.ell <= 6
    assert cone_cycle_tameness_witness(cone_f, sf) is None
