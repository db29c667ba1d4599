"""Search and bookkeeping for tight admissible cuts.

Tight means both sides are nonempty and connected. Enumeration anchors each
cut at its lowest coboundary edge so every unordered partition appears once,
then orients sides canonically. A node budget turns runaway searches into
BudgetExceeded instead of hangs.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .bitset import iter_bits
from .boolean_ring import Cut, complement, cut_sort_key, is_nested
from .errors import (
    BadParams,
    BudgetExceeded,
    IncompleteNestedSet,
    KMaxExhausted,
)
from .gf2 import Gf2Basis
from .graph_core import Window, WindowEnd, component_containing, components

__all__ = [
    "DEFAULT_BUDGET",
    "enumerate_tight_cuts",
    "brute_force_cuts",
    "CutPool",
    "make_pool",
    "min_separating_coboundary",
    "nested_generating_set",
]

DEFAULT_BUDGET = 10**7


def _canonical(window: Window, side: int, cob: int) -> Cut:
    if side & 1:
        side = window.graph.full_mask & ~side
    return Cut(window, side, _cob=cob)


def _tree_half_cuts(window: Window, k: int) -> List[Cut]:
    """On a tree every tight cut is one half of a single-edge split."""
    g = window.graph
    out: List[Cut] = []
    if k < 1:
        return out
    for e in iter_bits(window.admissible_edge_mask):
        u, _ = g.edges[e]
        side = _component_without_edge(window, u, e)
        out.append(_canonical(window, side, 1 << e))
    return out


def _component_without_edge(window: Window, seed: int, skip_edge: int) -> int:
    g = window.graph
    seen = 1 << seed
    stack = [seed]
    while stack:
        v = stack.pop()
        for w, e in g.adj[v]:
            if e == skip_edge or (seen >> w) & 1:
                continue
            seen |= 1 << w
            stack.append(w)
    return seen


def enumerate_tight_cuts(
    window: Window,
    k: int,
    anchor: Optional[Tuple[int, int]] = None,
    budget: int = DEFAULT_BUDGET,
) -> List[Cut]:
    """All tight admissible cuts with |db| <= k, one orientation each.

    Orientation avoids vertex 0 unless an (inside, outside) anchor pair is
    given, in which case only cuts separating the pair survive, oriented
    with the first vertex inside.
    """
    g = window.graph
    if k < 0:
        raise BadParams("k must be nonnegative")
    if anchor is not None:
        a, b = anchor
        if not (0 <= a < g.n and 0 <= b < g.n) or a == b:
            raise BadParams("anchor needs two distinct vertex ids")
    if len(components(g)) == 1 and len(g.edges) == g.n - 1:
        cuts = _tree_half_cuts(window, k)
    else:
        cuts = _search_tight(window, k, budget)
    if anchor is not None:
        a, b = anchor
        picked = []
        for c in cuts:
            if ((c.side >> a) ^ (c.side >> b)) & 1:
                picked.append(c if (c.side >> a) & 1 else complement(c))
        cuts = picked
    cuts.sort(key=lambda c: (c.size, cut_sort_key(c)))
    return cuts


def _search_tight(window: Window, k: int, budget: int) -> List[Cut]:
    g = window.graph
    full = g.full_mask
    expanded = 0
    out: List[Cut] = []
    for e0 in iter_bits(window.admissible_edge_mask):
        u0, v0 = g.edges[e0]
        # frames: (inside, outside, crossing edge mask)
        stack = [(1 << u0, 1 << v0, 1 << e0)]
        while stack:
            inside, outside, crossing = stack.pop()
            expanded += 1
            if expanded > budget:
                raise BudgetExceeded(
                    f"tight cut search passed {budget} nodes", expanded, budget
                )
            nbr = 0
            for v in iter_bits(inside):
                nbr |= g.adj_masks[v]
            undecided = nbr & ~(inside | outside)
            if not undecided:
                if crossing.bit_count() > k:
                    continue
                rest = full & ~inside
                if component_containing(g.adj_masks, rest, rest) != rest:
                    continue
                out.append(_canonical(window, inside, crossing))
                continue
            v = (undecided & -undecided).bit_length() - 1
            joins = g.inc_edge_masks[v]
            to_out = joins & _incident_union(g, outside)
            if _crossing_ok(window, crossing | to_out, e0, k):
                stack.append((inside | (1 << v), outside, crossing | to_out))
            to_in = joins & _incident_union(g, inside)
            if _crossing_ok(window, crossing | to_in, e0, k):
                stack.append((inside, outside | (1 << v), crossing | to_in))
    return out


def _incident_union(g, vertex_mask: int) -> int:
    m = 0
    for v in iter_bits(vertex_mask):
        m |= g.inc_edge_masks[v]
    return m


def _crossing_ok(window: Window, crossing: int, e0: int, k: int) -> bool:
    if crossing.bit_count() > k:
        return False
    if crossing & window.frontier_edge_mask:
        return False
    # a lower anchor edge means this partition belongs to an earlier pass
    return (crossing & ((1 << e0) - 1)) == 0


def brute_force_cuts(window: Window, k: int, tight_only: bool = True) -> List[Cut]:
    """Oracle sweep over all 2^n sides. Intended for n <= ~22."""
    import numpy as np

    g = window.graph
    if g.n > 24:
        raise BadParams("brute force sweep capped at 24 vertices")
    sides = np.arange(1 << g.n, dtype=np.int64)
    crossing = np.zeros(1 << g.n, dtype=np.int32)
    bad = np.zeros(1 << g.n, dtype=bool)
    for e, (u, v) in enumerate(g.edges):
        x = ((sides >> u) ^ (sides >> v)) & 1
        crossing += x.astype(np.int32)
        if (window.frontier_edge_mask >> e) & 1:
            bad |= x.astype(bool)
    keep = (crossing <= k) & ~bad
    out: List[Cut] = []
    seen = set()
    for side in np.nonzero(keep)[0].tolist():
        if side & 1:
            side = g.full_mask & ~side
        if side in seen:
            continue
        seen.add(side)
        c = Cut(window, side)
        if tight_only:
            if side == 0 or not c.is_tight():
                continue
        out.append(c)
    out.sort(key=lambda c: (c.size, cut_sort_key(c)))
    return out


class CutPool:
    """A sorted, deduplicated collection of cuts on one window."""

    def __init__(self, window: Window, k: int, cuts: Sequence[Cut], tight_only: bool):
        self.window = window
        self.k = k
        self.tight_only = tight_only
        self.system = None  # set by elliptic_pool
        seen = set()
        kept = []
        for c in cuts:
            rep = min(c.side, c.star)
            if rep in seen:
                continue
            seen.add(rep)
            kept.append(c)
        kept.sort(key=lambda c: (c.size, cut_sort_key(c)))
        self.cuts: List[Cut] = kept
        self._sides = {c.side for c in kept} | {c.star for c in kept}
        self.edge_index: Dict[int, List[int]] = {}
        for i, c in enumerate(kept):
            for e in iter_bits(c.cob):
                self.edge_index.setdefault(e, []).append(i)

    def __len__(self) -> int:
        return len(self.cuts)

    def __iter__(self):
        return iter(self.cuts)

    def __contains__(self, c: Cut) -> bool:
        return c.side in self._sides

    def __repr__(self) -> str:
        return f"CutPool(k={self.k}, cuts={len(self.cuts)}, tight_only={self.tight_only})"


def make_pool(
    window: Window, k: int, cuts: Sequence[Cut], tight_only: bool = True
) -> CutPool:
    return CutPool(window, k, cuts, tight_only)


def _maxflow_min_cut(window: Window, src_mask: int, dst_mask: int) -> Optional[int]:
    """Min number of admissible edges disconnecting the two vertex sets.

    Frontier-incident edges get capacity |E|+1 so any cut through them is
    distinguishable from an all-admissible one; None when only such cuts
    exist or the sets are not separable at all.
    """
    g = window.graph
    big = len(g.edges) + 1
    n = g.n
    s, t = n, n + 1
    heads: List[int] = []
    caps: List[int] = []
    adj: List[List[int]] = [[] for _ in range(n + 2)]

    def arc(u: int, v: int, c: int, c_rev: int) -> None:
        adj[u].append(len(heads))
        heads.append(v)
        caps.append(c)
        adj[v].append(len(heads))
        heads.append(u)
        caps.append(c_rev)

    for e, (u, v) in enumerate(g.edges):
        c = 1 if (window.admissible_edge_mask >> e) & 1 else big
        arc(u, v, c, c)
    for v in iter_bits(src_mask):
        arc(s, v, big * big, 0)
    for v in iter_bits(dst_mask):
        arc(v, t, big * big, 0)

    flow = 0
    while flow <= len(g.edges):
        prev = [-1] * (n + 2)
        prev[s] = -2
        queue = [s]
        qi = 0
        while qi < len(queue) and prev[t] == -1:
            u = queue[qi]
            qi += 1
            for a in adj[u]:
                w = heads[a]
                if prev[w] == -1 and caps[a] > 0:
                    prev[w] = a
                    queue.append(w)
        if prev[t] == -1:
            return flow
        bottleneck = None
        w = t
        while w != s:
            a = prev[w]
            bottleneck = caps[a] if bottleneck is None else min(bottleneck, caps[a])
            w = heads[a ^ 1]
        w = t
        while w != s:
            a = prev[w]
            caps[a] -= bottleneck
            caps[a ^ 1] += bottleneck
            w = heads[a ^ 1]
        flow += bottleneck
    return None


def min_separating_coboundary(
    window: Window,
    e1: WindowEnd,
    e2: WindowEnd,
    k_max: Optional[int] = None,
    pool: Optional[CutPool] = None,
    strict: bool = False,
) -> Optional[int]:
    """Least |db| over cuts separating two window ends.

    Without a pool the bound is structural: a max-flow between the shadows
    counting only admissible edges, capped by k_max if given. With a pool
    the answer is the least size among pool members that separate; the pool
    caller controls which cuts qualify. Returns None when nothing within
    reach separates; strict mode raises KMaxExhausted instead, carrying the
    structural bound for diagnosis.
    """
    from .boolean_ring import separates

    if e1.id == e2.id:
        raise BadParams("need two distinct window ends")
    if pool is not None:
        best: Optional[int] = None
        for c in pool:
            if separates(c, e1, e2):
                best = c.size if best is None else min(best, c.size)
                break  # pool is sorted by size
        if best is not None:
            return best
        if strict:
            bound = _maxflow_min_cut(window, e1.shadow, e2.shadow)
            raise KMaxExhausted(
                "no pool cut separates the ends",
                pool.k if k_max is None else k_max,
                bound,
            )
        return None
    bound = _maxflow_min_cut(window, e1.shadow, e2.shadow)
    if bound is not None and (k_max is None or bound <= k_max):
        return bound
    if strict:
        raise KMaxExhausted("structural bound exceeds k_max", k_max, bound)
    return None


def nested_generating_set(
    window: Window, n: int, budget: int = DEFAULT_BUDGET
) -> List[Cut]:
    """A pairwise nested family of tight cuts spanning all cuts with |db| <= n.

    Span is over GF(2) with the whole vertex set adjoined; the empty and
    full cuts are always included in the output alongside complements.
    Raises IncompleteNestedSet if the search cannot reach full rank.
    """
    g = window.graph
    if len(components(g)) != 1:
        raise BadParams("nested generating sets need a connected graph")
    candidates = enumerate_tight_cuts(window, n, budget=budget)
    target = Gf2Basis()
    target.insert(g.full_mask)
    for c in candidates:
        target.insert(c.side)
    want = target.rank

    best_rank = 1
    chosen: List[Cut] = []
    basis = Gf2Basis()
    basis.insert(g.full_mask)
    counter = [0]

    def search(idx: int) -> bool:
        counter[0] += 1
        if counter[0] > budget:
            raise BudgetExceeded(
                f"nested set search passed {budget} nodes", counter[0], budget
            )
        nonlocal best_rank
        best_rank = max(best_rank, basis.rank)
        if basis.rank == want:
            return True
        if basis.rank + (len(candidates) - idx) < want:
            return False
        if idx == len(candidates):
            return False
        c = candidates[idx]
        if all(is_nested(c, other) for other in chosen) and not basis.contains(c.side):
            basis.insert(c.side)
            chosen.append(c)
            if search(idx + 1):
                return True
            chosen.pop()
            rebuilt = Gf2Basis()
            rebuilt.insert(g.full_mask)
            for other in chosen:
                rebuilt.insert(other.side)
            basis.pivot_rows = rebuilt.pivot_rows
        return search(idx + 1)

    if not search(0):
        raise IncompleteNestedSet(
            f"nested family rank {best_rank} below target {want}", best_rank, want
        )
    out = [Cut(window, 0, _cob=0), Cut(window, g.full_mask, _cob=0)]
    out.extend(chosen)
    out.extend(complement(c) for c in chosen)
    out.sort(key=lambda c: (c.size, cut_sort_key(c)))
    return out
