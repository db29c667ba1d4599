"""Peripheral systems on a free-group ball: thinness, ellipticity, normalization.

The cyclic-generator cosets trace out path segments through the window.
Cuts that refuse to split any segment's escape route form a subring;
minimise and consolidate tidy the system without changing that subring.
"""

from cutlab import (
    cayley_window,
    consolidate,
    coset_system,
    elliptic_pool,
    ellipticity_witness,
    intersect,
    minimise,
    sym_diff,
    tameness_check,
    thinness_report,
)


def main() -> None:
    w = cayley_window("free", radius=5, gens=2)
    sys = coset_system(w)
    print(f"coset system on the radius-5 ball: {len(sys)} peripherals, "
          f"thinness {thinness_report(sys)}")

    pool = elliptic_pool(w, sys, 2)
    print(f"elliptic pool at k=2: {len(pool.cuts)} cuts")

    rep = tameness_check(sys, pool)
    print(f"tame? {rep.tame} (worst cut meets {rep.count} peripherals, "
          f"threshold {rep.threshold})")

    a, b = pool.cuts[3], pool.cuts[11]
    for name, c in (("a+b", sym_diff(a, b)), ("a*b", intersect(a, b))):
        print(f"  {name} still elliptic? {ellipticity_witness(c, sys) is None}")

    mini = minimise(sys)
    print(f"minimise: keeps {len(mini)}, "
          f"{len(mini.unstable)} kept only because their size class flips")

    merged = consolidate(sys, pool)
    print(f"consolidate: {len(sys)} -> {len(merged)} peripherals "
          f"(cuts cannot tell coset translates apart)")
    sample = sorted(p.name for p in merged.peripherals)[:3]
    print("  sample merged names:", ", ".join(sample))


if __name__ == "__main__":
    main()
