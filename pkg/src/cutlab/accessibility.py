"""End-pair separation profiles across scales.

For a window with a peripheral system, the profiler normalises the
system (minimise, then consolidate against an elliptic pool), then
classifies every pair of stable ends: separated by an elliptic cut of
some least size, tied through a shared peripheral, or not separable
within the size budget. The headline number K is the largest of the
least separating sizes. Sweeps rerun the profile over a list of radii
and flag instability of K.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .bitset import iter_bits, lowest_set, mask_of
from .boolean_ring import Cut, separates
from .cut_search import DEFAULT_BUDGET, CutPool
from .errors import BadParams, CutlabError, GraphMismatch
from .gf2 import Gf2Basis
from .graph_core import Window, WindowEnd, cayley_window, window_ends
from .peripheral import (
    PeripheralSystem,
    consolidate,
    coset_system,
    elliptic_pool,
    empty_system,
    end_signatures,
    level_system,
    minimise,
    thinness_report,
    whole_system,
)

__all__ = [
    "PairRecord",
    "AccessProfile",
    "profile",
    "easy_case_check",
    "SweepRow",
    "stability_sweep",
    "SYSTEM_RECIPES",
]

VERDICTS = ("SeparatedElliptic", "SharedPeripheral", "NotSeparableAtScale")


class PairRecord:
    """Outcome for one unordered pair of stable window ends."""

    def __init__(
        self,
        end1: int,
        end2: int,
        verdict: str,
        min_k: Optional[int] = None,
        witness: Optional[Cut] = None,
        peripheral: Optional[str] = None,
    ) -> None:
        self.end1 = end1
        self.end2 = end2
        self.verdict = verdict
        self.min_k = min_k
        self.witness = witness
        self.peripheral = peripheral

    def to_dict(self) -> Dict:
        d: Dict = {"ends": [self.end1, self.end2], "verdict": self.verdict}
        if self.verdict == "SeparatedElliptic":
            d["min_k"] = self.min_k
            d["witness_side"] = self.witness.side if self.witness else None
        elif self.verdict == "SharedPeripheral":
            d["peripheral"] = self.peripheral
        return d

    def __repr__(self) -> str:
        extra = (
            f", k={self.min_k}"
            if self.min_k is not None
            else f", via {self.peripheral}"
            if self.peripheral
            else ""
        )
        return f"PairRecord({self.end1},{self.end2}: {self.verdict}{extra})"


class AccessProfile:
    """Separation verdicts for all stable end pairs at one scale."""

    def __init__(
        self,
        window: Window,
        k_max: int,
        records: List[PairRecord],
        k: Optional[int],
        stable_ends: List[int],
        unstable_ends: List[int],
        thinness: int,
        system_names: List[str],
        unstable_peripherals: List[str],
    ) -> None:
        self.window = window
        self.k_max = k_max
        self.records = records
        self.K = k
        self.stable_ends = stable_ends
        self.unstable_ends = unstable_ends
        self.thinness = thinness
        self.system_names = system_names
        self.unstable_peripherals = unstable_peripherals

    @property
    def scale(self) -> Tuple[int, int, int]:
        return (self.window.radius, self.window.inner_radius, self.k_max)

    def to_dict(self) -> Dict:
        return {
            "scale": {
                "radius": self.window.radius,
                "inner_radius": self.window.inner_radius,
                "k_max": self.k_max,
            },
            "K": self.K,
            "thinness": self.thinness,
            "stable_ends": self.stable_ends,
            "unstable_ends": self.unstable_ends,
            "system": self.system_names,
            "unstable_peripherals": self.unstable_peripherals,
            "pairs": [r.to_dict() for r in self.records],
        }

    def __repr__(self) -> str:
        return (
            f"AccessProfile(R={self.window.radius}, k_max={self.k_max}, "
            f"K={self.K}, {len(self.records)} pairs)"
        )


def _stable_end_ids(window: Window, ends: Sequence[WindowEnd]) -> Tuple[List[int], List[int]]:
    """Ends whose shadow survives one step of zone tightening."""
    m1 = window.inner_radius + 1
    if m1 >= window.radius:
        return [e.id for e in ends], []
    deeper = window.zone_mask_at(m1)
    stable, unstable = [], []
    for e in ends:
        (stable if e.shadow & deeper else unstable).append(e.id)
    return stable, unstable


def _pair_record(
    i: int,
    j: int,
    in_side: List[int],
    in_star: List[int],
    profiles: List[set],
    periph_names: List[str],
    pool: CutPool,
) -> PairRecord:
    shared = None
    for h, prof in enumerate(profiles):
        if i in prof and j in prof:
            shared = periph_names[h]
            break
    sep = (in_side[i] & in_star[j]) | (in_star[i] & in_side[j])
    if sep and shared is not None:
        raise CutlabError(
            f"ends {i},{j} both separated and tied through {shared}"
        )
    if sep:
        c = pool.cuts[lowest_set(sep)]
        return PairRecord(i, j, "SeparatedElliptic", min_k=c.size, witness=c)
    if shared is not None:
        return PairRecord(i, j, "SharedPeripheral", peripheral=shared)
    return PairRecord(i, j, "NotSeparableAtScale")


def profile(
    window: Window,
    sys: PeripheralSystem,
    k_max: int,
    workers: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> AccessProfile:
    """Classify every stable end pair at size budget k_max.

    Pipeline: consolidate the system against an elliptic pool, minimise
    the result, rebuild the pool for the final system, then read each
    pair off the pool signatures and the peripheral escape profiles.
    Consolidation runs first so that peripherals no cut tells apart
    merge before any of them is dismissed as small: level systems
    collapse to the whole vertex set rather than losing their thin
    traces one by one. A pair with neither an elliptic separator in the
    pool nor a shared peripheral is reported NotSeparableAtScale; the
    budget k_max is the only reason a separator can be missing.
    Identical inputs give an identical profile whatever the worker
    count.
    """
    if sys.window is not window:
        raise GraphMismatch("system lives on a different window")
    if k_max < 1:
        raise BadParams(f"k_max must be positive, got {k_max}")
    thin = thinness_report(sys)
    pool1 = elliptic_pool(window, sys, k_max, budget=budget)
    s1 = consolidate(sys, pool1)
    s2 = minimise(s1)
    if [p.name for p in s2.peripherals] == [p.name for p in sys.peripherals]:
        pool = pool1
    else:
        pool = elliptic_pool(window, s2, k_max, budget=budget)
    ends = window_ends(window)
    stable, unstable = _stable_end_ids(window, ends)
    in_side, in_star = end_signatures(pool, ends)
    profiles = [set(p.escape_profile) for p in s2.peripherals]
    names = [p.name for p in s2.peripherals]
    unstable_periph = list(s2.unstable)
    pairs = [(i, j) for a, i in enumerate(stable) for j in stable[a + 1 :]]

    def run(pair: Tuple[int, int]) -> PairRecord:
        return _pair_record(
            pair[0], pair[1], in_side, in_star, profiles, names, pool
        )

    if workers > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            records = list(ex.map(run, pairs))
    else:
        records = [run(p) for p in pairs]
    ks = [r.min_k for r in records if r.verdict == "SeparatedElliptic"]
    return AccessProfile(
        window,
        k_max,
        records,
        max(ks) if ks else None,
        stable,
        unstable,
        thin,
        names,
        unstable_periph,
    )


def easy_case_check(
    window: Window,
    sys: PeripheralSystem,
    genset: Union[CutPool, Sequence[Cut]],
) -> Tuple[bool, Optional[int]]:
    """Does combination separation reduce to member separation?

    For each end pair no single member separates, solvability of the
    separating combination is a linear system: a combination t swallows
    a shadow exactly when every shadow vertex's membership row dots t
    to 1, and misses it when every row dots to 0. The check passes when
    no such pair has a solvable system. Also reports the uniform K: the
    largest over member-separated pairs of the least member size.
    """
    cuts = list(genset)
    for c in cuts:
        if c.window is not window:
            raise GraphMismatch("generating cut on a different window")
    ends = window_ends(window)
    if not cuts:
        return True, None
    rows = [0] * window.graph.n
    for t, c in enumerate(cuts):
        for v in iter_bits(c.side):
            rows[v] |= 1 << t
    in_side, in_star = end_signatures(cuts, ends)
    sizes = [c.size for c in cuts]
    k_uniform: Optional[int] = None
    ok = True
    for a in range(len(ends)):
        for b in range(a + 1, len(ends)):
            sep = (in_side[a] & in_star[b]) | (in_star[a] & in_side[b])
            if sep:
                k_pair = min(sizes[t] for t in iter_bits(sep))
                if k_uniform is None or k_pair > k_uniform:
                    k_uniform = k_pair
                continue
            if _combo_separates(rows, ends[a].shadow, ends[b].shadow):
                ok = False
    return ok, k_uniform


def _combo_separates(rows: List[int], sh1: int, sh2: int) -> bool:
    """Is {row(v).t = 1 on sh1, = 0 on sh2} solvable, either orientation?

    Rows are augmented with the right-hand side in bit 0; the system is
    inconsistent exactly when the span reaches the pure rhs vector.
    """
    for hot, cold in ((sh1, sh2), (sh2, sh1)):
        basis = Gf2Basis()
        for v in iter_bits(hot):
            basis.insert(rows[v] << 1 | 1)
        for v in iter_bits(cold):
            basis.insert(rows[v] << 1)
        if not basis.contains(1):
            return True
    return False


SYSTEM_RECIPES = ("cosets", "levels", "empty", "whole")


def _make_system(window: Window, recipe: str) -> PeripheralSystem:
    if recipe == "cosets":
        return coset_system(window)
    if recipe == "levels":
        return level_system(window)
    if recipe == "empty":
        return empty_system(window)
    if recipe == "whole":
        return whole_system(window)
    raise BadParams(f"unknown system recipe {recipe!r}")


class SweepRow:
    def __init__(
        self,
        radius: int,
        k: Optional[int],
        n_pairs: int,
        n_separated: int,
        n_shared: int,
        n_open: int,
    ) -> None:
        self.radius = radius
        self.K = k
        self.n_pairs = n_pairs
        self.n_separated = n_separated
        self.n_shared = n_shared
        self.n_open = n_open

    def to_dict(self) -> Dict:
        return {
            "radius": self.radius,
            "K": self.K,
            "pairs": self.n_pairs,
            "separated": self.n_separated,
            "shared": self.n_shared,
            "open": self.n_open,
        }

    def __repr__(self) -> str:
        return f"SweepRow(R={self.radius}, K={self.K})"


def stability_sweep(
    family: str,
    recipe: str,
    radii: Sequence[int],
    k_max: int,
    gens: int = 2,
    degree: int = 3,
    budget: int = DEFAULT_BUDGET,
) -> Tuple[List[SweepRow], List[str]]:
    """Profile one family and system recipe across radii; flag drift in K.

    Returns the per-radius rows and a list of warnings: K growing with R
    (the scale has not settled) or moving non-monotonically.
    """
    if recipe not in SYSTEM_RECIPES:
        raise BadParams(f"unknown system recipe {recipe!r}")
    rows: List[SweepRow] = []
    for r in radii:
        w = cayley_window(family, radius=r, gens=gens, degree=degree)
        prof = profile(w, _make_system(w, recipe), k_max, budget=budget)
        n_sep = sum(1 for x in prof.records if x.verdict == "SeparatedElliptic")
        n_sh = sum(1 for x in prof.records if x.verdict == "SharedPeripheral")
        n_open = len(prof.records) - n_sep - n_sh
        rows.append(SweepRow(r, prof.K, len(prof.records), n_sep, n_sh, n_open))
    flags: List[str] = []
    ks = [row.K for row in rows]
    seen = [k for k in ks if k is not None]
    if seen:
        for i in range(1, len(rows)):
            a, b = rows[i - 1].K, rows[i].K
            if a is not None and b is not None and b > a:
                flags.append(
                    f"K grows from {a} to {b} between R={rows[i - 1].radius} "
                    f"and R={rows[i].radius}"
                )
            if a is not None and b is not None and b < a:
                flags.append(
                    f"K drops from {a} to {b} between R={rows[i - 1].radius} "
                    f"and R={rows[i].radius}"
                )
    return rows, flags
