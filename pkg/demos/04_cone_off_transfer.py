"""Coning off a peripheral system, and moving cuts across.

Each peripheral gains an apex vertex joined to all its members. Elliptic
cuts lift to cone cuts (apex goes with the escaping side) and restrict
back; the pair is a bijection that preserves both ring operations, and
the coboundary only ever grows by the members stranded opposite their
apex.
"""

from cutlab import (
    build_cone_off,
    cayley_window,
    coset_system,
    elliptic_pool,
    growth_profile,
    intersect,
    lift,
    restrict,
    sym_diff,
)


def main() -> None:
    w = cayley_window("free", radius=4, gens=2)
    sys = coset_system(w)
    cone = build_cone_off(w, sys)
    print(f"cone-off: {w.graph.n} base vertices + {len(sys)} apexes, "
          f"{len(cone.graph.edges)} edges")

    pool = elliptic_pool(w, sys, 2)
    print(f"transferring the {len(pool.cuts)}-cut elliptic pool...")
    for b in pool.cuts:
        back = restrict(cone, lift(cone, b))
        assert back.side == b.side and back.cob == b.cob
    print("  lift then restrict is the identity on all of them")

    a, b = pool.cuts[5], pool.cuts[40]
    la, lb = lift(cone, a), lift(cone, b)
    assert lift(cone, sym_diff(a, b)).cob == sym_diff(la, lb).cob
    assert lift(cone, intersect(a, b)).cob == intersect(la, lb).cob
    print("  lift(a+b) = lift(a)+lift(b) and lift(a*b) = lift(a)*lift(b)")

    prof = growth_profile(cone, pool)
    print("coboundary growth envelope:",
          {s: prof.envelope(s) for s in (1, 2)})


if __name__ == "__main__":
    main()
