"""Peripheral systems: vertex families that cuts are not allowed to split.

A peripheral is a vertex set H inside a window (a coset trace, a level
set, a thickened ray). A cut is elliptic relative to a system of
peripherals when it splits none of their rel-escape ideals: the frontier
vertices reachable inside H from deep inside the window. Everything here
is window-scale; the ideals are the finite shadows of the parts of H
that genuinely leave every ball.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .bitset import iter_bits, lowest_set, mask_of
from .boolean_ring import Cut, cut_sort_key
from .cut_search import DEFAULT_BUDGET, CutPool, enumerate_tight_cuts
from .errors import (
    BadParams,
    BudgetExceeded,
    CutlabError,
    EllipticityViolation,
    GraphMismatch,
    NoSeparator,
    StabilityError,
)
from .graph_core import (
    Window,
    WindowEnd,
    components,
    limit_size_class,
    window_ends,
)

__all__ = [
    "Peripheral",
    "PeripheralSystem",
    "rel_escape_ideal",
    "rel_escapes",
    "is_elliptic",
    "ellipticity_witness",
    "elliptic_pool",
    "thinness_report",
    "TamenessReport",
    "tameness_check",
    "coarse_components",
    "coarse_class",
    "minimise",
    "distinguishable",
    "consolidate",
    "thicken",
    "separate_end_from_peripheral",
    "DichotomyRecord",
    "dichotomy_check",
    "empty_system",
    "whole_system",
    "coset_system",
    "level_system",
    "ball_peripheral",
    "ray_peripheral",
    "COARSE_CLASSES",
]

COARSE_CLASSES = ("Bounded", "Unbounded", "Big")


class Peripheral:
    """A named vertex set; escape_profile is filled in by its system."""

    def __init__(self, name: str, members: int) -> None:
        self.name = name
        self.members = members
        self.escape_profile: Tuple[int, ...] = ()

    def __repr__(self) -> str:
        return f"Peripheral({self.name!r}, |H|={self.members.bit_count()})"


def rel_escape_ideal(window: Window, members: int) -> int:
    """Frontier trace of the escaping components of the induced subgraph.

    A component of the subgraph induced on members counts as escaping when
    it reaches the frontier but does not lie inside it; the ideal is the
    union of those components' frontier vertices. Splitting this set is
    what it means to cut the peripheral apart at window scale.
    """
    fr = window.frontier_mask
    z = 0
    for comp in components(window.graph, members):
        if comp & fr and comp & ~fr:
            z |= comp & fr
    return z


def rel_escapes(window: Window, members: int, subset: int) -> bool:
    """Whether subset meets the rel-escape ideal of members."""
    return subset & rel_escape_ideal(window, members) != 0


class PeripheralSystem:
    """A finite list of peripherals over one window.

    Precomputes, per peripheral, the rel-escape ideal, the induced edges
    (for the ellipticity fast path), and the escape profile (which window
    ends the members meet). provenance records how the system was derived:
    raw, minimised, consolidated, or thickened(r).
    """

    def __init__(
        self,
        window: Window,
        peripherals: Iterable[Peripheral],
        provenance: str = "raw",
    ) -> None:
        self.window = window
        self.peripherals: List[Peripheral] = list(peripherals)
        self.provenance = provenance
        names = [p.name for p in self.peripherals]
        if len(set(names)) != len(names):
            raise BadParams("peripheral names must be unique")
        g = window.graph
        for p in self.peripherals:
            if p.members == 0:
                raise BadParams(f"peripheral {p.name} has no members")
            if p.members & ~g.full_mask:
                raise BadParams(f"peripheral {p.name} has ids outside the window")

        fr = window.frontier_mask
        self.z_masks: List[int] = []
        self.always_check: List[int] = []
        for h, p in enumerate(self.peripherals):
            z = 0
            spanning = 0
            for comp in components(g, p.members):
                if comp & fr and comp & ~fr:
                    z |= comp & fr
                    spanning += 1
            self.z_masks.append(z)
            if spanning >= 2:
                # several escaping components: a cut can split the ideal
                # without crossing any induced edge
                self.always_check.append(h)

        self.edge_to_periphs: Dict[int, List[int]] = {}
        for h, p in enumerate(self.peripherals):
            m = p.members
            for v in iter_bits(m):
                for (w, e) in g.adj[v]:
                    if w > v and (m >> w) & 1:
                        self.edge_to_periphs.setdefault(e, []).append(h)

        if fr:
            ends = window_ends(window)
            for h, p in enumerate(self.peripherals):
                # profile through the rel-escape ideal, not raw membership:
                # an end belongs to the profile only when splitting it off
                # would cut the peripheral, which is what ellipticity blocks
                z = self.z_masks[h]
                p.escape_profile = tuple(
                    e.id for e in ends if e.shadow & z
                )
        self.by_name: Dict[str, Peripheral] = {
            p.name: p for p in self.peripherals
        }
        self.unstable: List[str] = []

    def __len__(self) -> int:
        return len(self.peripherals)

    def __iter__(self):
        return iter(self.peripherals)

    def __getitem__(self, i: int) -> Peripheral:
        return self.peripherals[i]

    def names(self) -> List[str]:
        return [p.name for p in self.peripherals]

    def __repr__(self) -> str:
        return f"PeripheralSystem({len(self.peripherals)} peripherals, {self.provenance})"


def _check_window(cut_window: Window, sys: PeripheralSystem) -> None:
    if cut_window is not sys.window:
        raise GraphMismatch("cut and peripheral system live on different windows")


def ellipticity_witness(c: Cut, sys: PeripheralSystem) -> Optional[Peripheral]:
    """First peripheral whose rel-escape ideal the cut splits, or None.

    Only peripherals with an induced edge crossed by the cut, plus the
    ones with several escaping components, can be split; everything else
    keeps its ideal on one side.
    """
    _check_window(c.window, sys)
    cand = set(sys.always_check)
    e2p = sys.edge_to_periphs
    for e in iter_bits(c.cob):
        hit = e2p.get(e)
        if hit:
            cand.update(hit)
    side = c.side
    for h in sorted(cand):
        z = sys.z_masks[h]
        zs = side & z
        if zs and zs != z:
            return sys.peripherals[h]
    return None


def is_elliptic(c: Cut, sys: PeripheralSystem) -> bool:
    """True when the cut splits no peripheral's rel-escape ideal."""
    return ellipticity_witness(c, sys) is None


def elliptic_pool(
    window: Window,
    sys: PeripheralSystem,
    k: int,
    depth: int = 2,
    budget: int = DEFAULT_BUDGET,
) -> CutPool:
    """Elliptic cuts with coboundary at most k, closed one ring step.

    Base layer: every admissible tight cut up to k. Depth 2 adds, for each
    unordered base pair, the symmetric difference and the four corner
    intersections, still filtered by size and ellipticity. Combination
    cuts are kept even when not tight; the ring operations do not preserve
    tightness and the elliptic calculus does not need it.
    """
    _check_window(window, sys)
    if depth not in (1, 2):
        raise BadParams(f"closure depth {depth} not supported")
    base = enumerate_tight_cuts(window, k, budget=budget)
    if depth == 2:
        cost = len(base) * (len(base) - 1) * 5 // 2
        if cost > budget:
            raise BudgetExceeded(
                f"pair closure needs {cost} combinations", expanded=cost, budget=budget
            )
    full = window.graph.full_mask
    g = window.graph
    seen = set()
    kept: List[Cut] = []

    def consider(side: int, cob: int) -> None:
        if side == 0 or side == full:
            return
        rep = min(side, full ^ side)
        if rep in seen:
            return
        seen.add(rep)
        c = Cut(window, side, _cob=cob)
        if is_elliptic(c, sys):
            kept.append(c)

    for c in base:
        consider(c.side, c.cob)
    if depth == 2:
        for i in range(len(base)):
            a = base[i]
            for j in range(i + 1, len(base)):
                b = base[j]
                cob = a.cob ^ b.cob
                if cob.bit_count() <= k:
                    consider(a.side ^ b.side, cob)
                cand = a.cob | b.cob
                for sa in (a.side, a.side ^ full):
                    for sb in (b.side, b.side ^ full):
                        inter = sa & sb
                        if inter == 0 or inter == full:
                            continue
                        if min(inter, full ^ inter) in seen:
                            continue
                        cob = 0
                        for e in iter_bits(cand):
                            u, v = g.edges[e]
                            if ((inter >> u) ^ (inter >> v)) & 1:
                                cob |= 1 << e
                        if cob.bit_count() <= k:
                            consider(inter, cob)
    pool = CutPool(window, k, kept, tight_only=False)
    pool.system = sys
    return pool


def thinness_report(sys: PeripheralSystem) -> int:
    """Largest number of peripherals any single vertex belongs to."""
    counts: Dict[int, int] = {}
    best = 0
    for p in sys.peripherals:
        for v in iter_bits(p.members):
            c = counts.get(v, 0) + 1
            counts[v] = c
            if c > best:
                best = c
    return best


class TamenessReport:
    """Outcome of tameness_check; truthy exactly when tame."""

    def __init__(self, tame: bool, witness, count: int, threshold: int) -> None:
        self.tame = tame
        self.witness = witness
        self.count = count
        self.threshold = threshold

    def __bool__(self) -> bool:
        return self.tame

    def __repr__(self) -> str:
        if self.tame:
            return f"Tame(max_split={self.count}, threshold={self.threshold})"
        return f"NotTame(count={self.count}, threshold={self.threshold})"


def tameness_check(
    sys: PeripheralSystem, pool: CutPool, threshold: Optional[int] = None
) -> TamenessReport:
    """Does some pool cut have both-sided overlap with many peripherals?

    The count for a cut is the number of peripherals whose members meet
    both sides. A system is tame at this scale when no cut's count
    reaches the threshold, default max(2, radius - inner_radius).
    """
    w = sys.window
    if pool.window is not w:
        raise GraphMismatch("pool and system live on different windows")
    if threshold is None:
        threshold = max(2, w.radius - w.inner_radius)
    best = 0
    best_cut = None
    for c in pool:
        side, star = c.side, c.star
        cnt = 0
        for p in sys.peripherals:
            m = p.members
            if m & side and m & star:
                cnt += 1
        if cnt > best:
            best, best_cut = cnt, c
    if best >= threshold:
        return TamenessReport(False, best_cut, best, threshold)
    return TamenessReport(True, None, best, threshold)


def _members_of(h) -> int:
    return h.members if isinstance(h, Peripheral) else h


def _grow_ball(window: Window, mask: int, r: int) -> int:
    out = mask
    cur = mask
    for _ in range(r):
        grow = 0
        for v in iter_bits(cur):
            grow |= window.graph.adj_masks[v]
        cur = grow & ~out
        if not cur:
            break
        out |= cur
    return out


def coarse_components(window: Window, h, r: int) -> List[int]:
    """Traces on H of the components of the r-neighbourhood of H."""
    members = _members_of(h)
    ball = _grow_ball(window, members, r)
    out = []
    for comp in components(window.graph, ball):
        t = comp & members
        if t:
            out.append(t)
    return out


def coarse_class(window: Window, h, r: int) -> str:
    """Bounded / Unbounded / Big at coarseness r.

    Bounded when some r-coarse component stays inside the inner ball
    (checked first, no limit counting involved); Big when every component
    sees many directions; Unbounded otherwise.
    """
    members = _members_of(h)
    ball = _grow_ball(window, members, r)
    comps = [c for c in components(window.graph, ball) if c & members]
    if any(c & window.zone_mask == 0 for c in comps):
        return "Bounded"
    if all(limit_size_class(window, c) == "Many" for c in comps):
        return "Big"
    return "Unbounded"


def minimise(sys: PeripheralSystem) -> PeripheralSystem:
    """Drop peripherals that stably see fewer than two directions.

    A peripheral is dropped only when its size class is Zero or One at
    both inner radii of the stability check. Ones whose class flips are
    kept (this window cannot certify them small) and their names are
    recorded on the result as `unstable`.
    """
    w = sys.window
    kept: List[Peripheral] = []
    unstable: List[str] = []
    for p in sys.peripherals:
        try:
            cls = limit_size_class(w, p.members)
        except StabilityError:
            kept.append(Peripheral(p.name, p.members))
            unstable.append(p.name)
            continue
        if cls in ("Two", "Many"):
            kept.append(Peripheral(p.name, p.members))
    out = PeripheralSystem(w, kept, provenance="minimised")
    out.unstable = unstable
    return out


def distinguishable(
    p1: Peripheral, p2: Peripheral, pool: CutPool
) -> Tuple[bool, Optional[Cut]]:
    """Whether some pool cut puts the two rel-escape ideals on opposite sides."""
    if p1.members == p2.members:
        return False, None
    w = pool.window
    z1 = rel_escape_ideal(w, p1.members)
    z2 = rel_escape_ideal(w, p2.members)
    for c in pool:
        s, t = c.side, c.star
        if (s & z1 and t & z2) or (t & z1 and s & z2):
            return True, c
    return False, None


def consolidate(sys: PeripheralSystem, pool: CutPool) -> PeripheralSystem:
    """Merge escaping peripherals the pool cannot tell apart.

    Indistinguishability is closed transitively (union-find), merged
    members are unioned under a joined name, and peripherals that do not
    escape plainly pass through untouched.
    """
    w = sys.window
    if pool.window is not w:
        raise GraphMismatch("pool and system live on different windows")
    periphs = sys.peripherals
    esc = [i for i, p in enumerate(periphs) if p.members & w.zone_mask]
    k = len(esc)
    zs = [sys.z_masks[i] for i in esc]
    dist = [0] * k  # dist[i] bit j: some cut separates ideal i from ideal j
    for c in pool:
        a = 0
        b = 0
        for j in range(k):
            z = zs[j]
            if c.side & z:
                a |= 1 << j
            if c.star & z:
                b |= 1 << j
        for j in iter_bits(a):
            dist[j] |= b
        for j in iter_bits(b):
            dist[j] |= a

    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(k):
        for j in range(i + 1, k):
            if not (dist[i] >> j) & 1:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

    groups: Dict[int, List[int]] = {}
    for j, i in enumerate(esc):
        groups.setdefault(find(j), []).append(i)
    emitted = set()
    out: List[Peripheral] = []
    esc_set = set(esc)
    for i, p in enumerate(periphs):
        if i not in esc_set:
            out.append(Peripheral(p.name, p.members))
            continue
        root = find(esc.index(i))
        if root in emitted:
            continue
        emitted.add(root)
        block = groups[root]
        if len(block) == 1:
            out.append(Peripheral(p.name, p.members))
        else:
            merged = 0
            for b in block:
                merged |= periphs[b].members
            name = "+".join(sorted(periphs[b].name for b in block))
            out.append(Peripheral(name, merged))
    return PeripheralSystem(w, out, provenance="consolidated")


def thicken(sys: PeripheralSystem, r: int) -> PeripheralSystem:
    """Replace every peripheral by its radius r neighbourhood."""
    if r < 0:
        raise BadParams(f"thickening radius {r} must be nonnegative")
    w = sys.window
    out = [
        Peripheral(p.name, _grow_ball(w, p.members, r)) for p in sys.peripherals
    ]
    return PeripheralSystem(w, out, provenance=f"thickened({r})")


def separate_end_from_peripheral(
    window: Window, omega: WindowEnd, peripheral: Peripheral, pool: CutPool
) -> Cut:
    """A single cut with omega on one side and all of H's ends on the other.

    Greedy cover: for each end in H's escape profile pick the smallest
    pool cut separating it from omega, and union the chosen sides. The
    union stays elliptic because the pool is closed under the ring
    operations that build unions.
    """
    ends = window_ends(window)
    members = peripheral.members
    targets = [e for e in ends if e.shadow & members]
    if any(e.id == omega.id for e in targets):
        raise NoSeparator(
            f"end {omega.id} is in the escape profile of {peripheral.name}"
        )
    acc = 0
    for e in targets:
        if e.shadow & acc == e.shadow:
            continue
        found = 0
        for c in pool:
            for s in (c.side, c.star):
                if e.shadow & s == e.shadow and omega.shadow & s == 0:
                    found = s
                    break
            if found:
                break
        if not found:
            raise NoSeparator(
                f"no pool cut separates end {e.id} from end {omega.id}"
            )
        acc |= found
    result = Cut(window, acc)
    if pool.system is not None:
        bad = ellipticity_witness(result, pool.system)
        if bad is not None:
            raise EllipticityViolation(
                f"assembled separator splits {bad.name}"
            )
    return result


class DichotomyRecord:
    """Verdict for one pair of window ends."""

    def __init__(
        self,
        end1: int,
        end2: int,
        verdict: str,
        cut: Optional[Cut] = None,
        peripheral: Optional[str] = None,
    ) -> None:
        self.end1 = end1
        self.end2 = end2
        self.verdict = verdict
        self.cut = cut
        self.peripheral = peripheral

    def __repr__(self) -> str:
        extra = self.peripheral if self.peripheral else (
            f"|db|={self.cut.size}" if self.cut else ""
        )
        return f"DichotomyRecord({self.end1},{self.end2},{self.verdict},{extra})"


def end_signatures(pool: CutPool, ends: Sequence[WindowEnd]) -> Tuple[List[int], List[int]]:
    """Per end, bitmasks over pool indices: cuts whose side / star swallow it."""
    in_side = [0] * len(ends)
    in_star = [0] * len(ends)
    for i, c in enumerate(pool):
        bit = 1 << i
        for j, e in enumerate(ends):
            sh = e.shadow
            if sh & c.side == sh:
                in_side[j] |= bit
            elif sh & c.star == sh:
                in_star[j] |= bit
    return in_side, in_star


def dichotomy_check(
    window: Window, sys: PeripheralSystem, pool: CutPool
) -> List[DichotomyRecord]:
    """Classify every end pair: elliptically separated or peripherally tied.

    Raises when a pair manages to be both; that would mean some elliptic
    cut splits a peripheral it is forbidden to split.
    """
    _check_window(window, sys)
    if pool.window is not window:
        raise GraphMismatch("pool lives on a different window")
    ends = window_ends(window)
    in_side, in_star = end_signatures(pool, ends)
    profiles = [set(p.escape_profile) for p in sys.peripherals]
    out: List[DichotomyRecord] = []
    for i in range(len(ends)):
        for j in range(i + 1, len(ends)):
            shared = None
            for h, prof in enumerate(profiles):
                if i in prof and j in prof:
                    shared = sys.peripherals[h].name
                    break
            sep = (in_side[i] & in_star[j]) | (in_star[i] & in_side[j])
            if sep and shared is not None:
                raise CutlabError(
                    f"ends {i},{j} are both separated and tied through {shared}"
                )
            if sep:
                out.append(
                    DichotomyRecord(i, j, "SeparatedByElliptic", cut=pool.cuts[lowest_set(sep)])
                )
            elif shared is not None:
                out.append(DichotomyRecord(i, j, "SharedPeripheral", peripheral=shared))
            else:
                out.append(DichotomyRecord(i, j, "Unresolved"))
    return out


def empty_system(window: Window) -> PeripheralSystem:
    return PeripheralSystem(window, [])


def whole_system(window: Window) -> PeripheralSystem:
    """The single peripheral consisting of every vertex."""
    return PeripheralSystem(window, [Peripheral("V", window.graph.full_mask)])


def ball_peripheral(window: Window, r: int, name: Optional[str] = None) -> Peripheral:
    members = mask_of(v for v in range(window.graph.n) if 0 <= window.dist[v] <= r)
    return Peripheral(name or f"B{r}", members)


def _strip_coset_rep(label: str, letter: str) -> str:
    up = letter.upper()
    i = len(label)
    while i > 0 and label[i - 1] in (letter, up):
        i -= 1
    return label[:i]


def coset_system(window: Window) -> PeripheralSystem:
    """Traces of the cyclic generator cosets meeting the window.

    free: for each generator g, vertices sharing the same label after
    stripping trailing g letters lie on one coset line. grid_Z has one
    coset per generator (the whole line), grid_Z2 has rows and columns.
    Traces that degenerate to a single vertex carry no edge of the coset
    and are left out.
    """
    g = window.graph
    fam = window.family
    periphs: List[Peripheral] = []
    if fam == "free":
        n_gens = window.params.get("gens", 2)
        for gi in range(n_gens):
            letter = chr(ord("a") + gi)
            seen: Dict[str, int] = {}
            order: List[str] = []
            for v in range(g.n):
                rep = _strip_coset_rep(g.labels[v], letter)
                if rep not in seen:
                    seen[rep] = 0
                    order.append(rep)
                seen[rep] |= 1 << v
            for rep in order:
                if seen[rep].bit_count() >= 2:
                    periphs.append(Peripheral(f"{rep or 'e'}<{letter}>", seen[rep]))
    elif fam == "grid_Z":
        periphs.append(Peripheral("0<a>", g.full_mask))
    elif fam == "grid_Z2":
        rows: Dict[int, int] = {}
        cols: Dict[int, int] = {}
        row_order: List[int] = []
        col_order: List[int] = []
        for v in range(g.n):
            x, y = (int(t) for t in g.labels[v][1:-1].split(","))
            if y not in rows:
                rows[y] = 0
                row_order.append(y)
            rows[y] |= 1 << v
            if x not in cols:
                cols[x] = 0
                col_order.append(x)
            cols[x] |= 1 << v
        for y in row_order:
            periphs.append(Peripheral(f"y{y}<a>", rows[y]))
        for x in col_order:
            periphs.append(Peripheral(f"x{x}<b>", cols[x]))
    else:
        raise BadParams(f"family {fam!r} has no generator cosets")
    return PeripheralSystem(window, periphs)


def level_system(window: Window) -> PeripheralSystem:
    """One peripheral per level value of a tree_with_end window."""
    if window.levels is None:
        raise BadParams("window carries no levels")
    buckets: Dict[int, int] = {}
    for v, lvl in enumerate(window.levels):
        buckets[lvl] = buckets.get(lvl, 0) | (1 << v)
    periphs = [Peripheral(f"L{lvl}", buckets[lvl]) for lvl in sorted(buckets)]
    return PeripheralSystem(window, periphs)


def ray_peripheral(window: Window, letter: Optional[str] = None) -> Peripheral:
    """The trace of one positive generator ray from the basepoint."""
    fam = window.family
    g = window.graph
    if fam == "free":
        letter = letter or "a"
        pattern = lambda k: letter * k
    elif fam in ("tree", "tree_with_end"):
        letter = letter or "0"
        pattern = lambda k: letter * k
    elif fam == "grid_Z":
        letter = letter or "a"
        pattern = str
    else:
        raise BadParams(f"family {fam!r} has no canonical ray")
    members = 0
    k = 0
    while True:
        v = g.label_to_id.get(pattern(k))
        if v is None:
            break
        members |= 1 << v
        k += 1
    return Peripheral(f"ray<{letter}>", members)
