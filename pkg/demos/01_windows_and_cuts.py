"""Windows, admissible cuts, and the ring they generate.

Build a radius-4 ball in the rank-2 free group, enumerate every tight
cut with a small coboundary, and poke at the Boolean ring structure:
symmetric difference, intersection, nesting, corners.
"""

from cutlab import (
    Cut,
    cayley_window,
    corners,
    enumerate_tight_cuts,
    intersect,
    is_nested,
    is_nested_family,
    sym_diff,
)


def main() -> None:
    w = cayley_window("free", radius=4, gens=2)
    g = w.graph
    print(f"window: {g.n} vertices, {len(g.edges)} edges, "
          f"frontier sphere of {bin(w.frontier_mask).count('1')}")

    cuts = enumerate_tight_cuts(w, 1)
    print(f"tight cuts with one coboundary edge: {len(cuts)}")
    a = next(c for c in cuts if (c.side >> g.label_to_id["a"]) & 1)
    b = next(c for c in cuts if (c.side >> g.label_to_id["b"]) & 1)
    print(f"  a-branch side has {a.side.bit_count()} vertices, |db| = {a.size}")
    print(f"  b-branch side has {b.side.bit_count()} vertices, |db| = {b.size}")

    s = sym_diff(a, b)
    i = intersect(a, b)
    print(f"a + b: side {s.side.bit_count()} vertices, |db| = {s.size}")
    print(f"a * b: side {i.side.bit_count()} vertices, |db| = {i.size}")
    assert i.side == 0, "disjoint branches intersect trivially"

    print(f"a, b nested? {is_nested(a, b)}")
    print(f"inhabited corners: {corners(a, b)}")

    sub = 0
    for v, lab in enumerate(g.labels):
        if lab.startswith("aaa"):
            sub |= 1 << v
    c = Cut(w, sub)
    ok, witness = is_nested_family([a, b, c])
    print(f"family {{a-branch, b-branch, subtree below aaa}} nested? {ok}")
    assert ok and witness is None


if __name__ == "__main__":
    main()
