"""Relative accessibility at a fixed scale: who separates whom, and how cheaply.

The profiler classifies every pair of stable window ends: separated by
an elliptic cut of some least size, or glued together by a peripheral
that escapes toward both. K is the worst least size over separated
pairs; a sweep across radii shows whether K has settled.
"""

from cutlab import (
    cayley_window,
    coset_system,
    empty_system,
    level_system,
    profile,
    stability_sweep,
)


def main() -> None:
    w = cayley_window("grid_Z", radius=6)
    p = profile(w, empty_system(w), 2)
    print(f"line, no peripherals: K = {p.K} "
          f"(single pair, verdict {p.records[0].verdict})")

    w = cayley_window("free", radius=4, gens=2)
    p = profile(w, coset_system(w), 2)
    sep = sum(1 for r in p.records if r.verdict == "SeparatedElliptic")
    shared = len(p.records) - sep
    print(f"free ball with coset system: K = {p.K}, "
          f"{sep} pairs separated, {shared} shared through a coset")
    assert p.K == 2, "ends in distinct branches need a two-edge cut"

    w = cayley_window("tree_with_end", radius=6, degree=3)
    p = profile(w, level_system(w), 1)
    print(f"tree with level system: K = {p.K}, every pair shares the "
          f"consolidated piece {p.system_names[0]!r}"
          if p.records else "tree with level system: no stable pairs")

    rows, flags = stability_sweep("grid_Z", "empty", [4, 5, 6, 7, 8], 2)
    ks = [r.K for r in rows]
    print(f"sweep of the line across radii 4..8: K = {ks}, "
          f"flags = {flags or 'none'}")


if __name__ == "__main__":
    main()
