"""A system that defeats every cut: horocycle-style levels on a tree.

Level sets of a rooted tree with one distinguished deep end are thin
but not tame: any admissible cut separating material deep in the tree
must run through every level above it, so witness counts grow with the
radius and consolidation collapses the whole system to one piece.
"""

from cutlab import (
    Cut,
    build_cone_off,
    cayley_window,
    consolidate,
    elliptic_pool,
    level_system,
    lift,
    tameness_check,
    thinness_report,
)
from cutlab.errors import InadmissibleLift


def main() -> None:
    for radius in (6, 8):
        w = cayley_window("tree_with_end", radius=radius, degree=3)
        sys = level_system(w)
        pool = elliptic_pool(w, sys, 1)
        rep = tameness_check(sys, pool)
        print(f"radius {radius}: {len(sys)} levels, "
              f"thinness {thinness_report(sys)}, tame? {rep.tame}, "
              f"worst cut meets {rep.count} levels")
        assert not rep.tame

    w = cayley_window("tree_with_end", radius=6, degree=3)
    sys = level_system(w)
    merged = consolidate(sys, elliptic_pool(w, sys, 1))
    print(f"consolidation fuses all levels: {len(merged)} piece, "
          f"{merged[0].members.bit_count()} vertices (everything)")

    cone = build_cone_off(w, sys)
    half = 0
    for v, lab in enumerate(w.graph.labels):
        if lab.startswith("0"):
            half |= 1 << v
    try:
        lift(cone, Cut(w, half))
        print("half-tree lifted (unexpected)")
    except InadmissibleLift as e:
        print(f"half-tree cut has no admissible lift: {e}")


if __name__ == "__main__":
    main()
