"""GF(2) cycle space machinery: bases, generation tests, chains.

Cycle vectors are edge bitsets with even degree at every vertex. The
module provides fundamental-cycle bases, the windowed generation test
(does some combination of a generating set match a cycle on a chosen
edge window), inclusion chains of cuts over a separated vertex pair,
and alternating edge/cycle sequences across a coboundary.
"""

from __future__ import annotations

from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .bitset import bit_list, iter_bits, popcount
from .boolean_ring import Cut, complement
from .errors import BadParams, GraphMismatch, NoSequence
from .gf2 import Gf2Basis, solve_in_span
from .graph_core import Graph, components

__all__ = [
    "CycleVector",
    "GeneratingSet",
    "cycle_basis",
    "algebraic_generates",
    "dagger_check",
    "simple_cycles_upto",
    "cone_generating_set",
    "cone_cycle_tameness_witness",
    "TamenessWitness",
    "ChainViolation",
    "hamann_chain",
    "alternating_sequence",
]


class CycleVector:
    """Edge bitset with even degree everywhere."""

    def __init__(self, graph: Graph, edges: int) -> None:
        if edges & ~graph.all_edges_mask:
            raise BadParams("cycle vector uses edges outside the graph")
        deg: Dict[int, int] = {}
        for e in iter_bits(edges):
            u, v = graph.edges[e]
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        for v, d in deg.items():
            if d % 2:
                raise BadParams(f"odd degree {d} at vertex {v}")
        self.graph = graph
        self.edges = edges

    @property
    def support(self) -> int:
        return popcount(self.edges)

    def __xor__(self, other: "CycleVector") -> "CycleVector":
        if self.graph is not other.graph:
            raise GraphMismatch("cycle vectors on different graphs")
        return CycleVector(self.graph, self.edges ^ other.edges)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CycleVector)
            and self.graph is other.graph
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((id(self.graph), self.edges))

    def __repr__(self) -> str:
        return f"CycleVector({bit_list(self.edges)})"


class GeneratingSet:
    """Finite set of cycle vectors with a support bound."""

    def __init__(self, cycles: Sequence[CycleVector]) -> None:
        self.cycles = list(cycles)
        if self.cycles:
            g = self.cycles[0].graph
            for c in self.cycles:
                if c.graph is not g:
                    raise GraphMismatch("generating set spans two graphs")
        self.ell = max((c.support for c in self.cycles), default=0)

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def __repr__(self) -> str:
        return f"GeneratingSet(N={len(self.cycles)}, ell={self.ell})"


def cycle_basis(graph: Graph) -> List[CycleVector]:
    """Fundamental cycles of a breadth-first forest.

    Roots are the least vertex of each component; basis size is
    |E| - |V| + #components.
    """
    parent_edge = [-1] * graph.n
    path_mask = [0] * graph.n  # edge mask of the tree path back to the root
    seen = 0
    tree_edges = 0
    order: List[int] = []
    for root in range(graph.n):
        if (seen >> root) & 1:
            continue
        seen |= 1 << root
        q = deque([root])
        while q:
            u = q.popleft()
            order.append(u)
            for (v, e) in graph.adj[u]:
                if not (seen >> v) & 1:
                    seen |= 1 << v
                    parent_edge[v] = e
                    path_mask[v] = path_mask[u] | (1 << e)
                    tree_edges |= 1 << e
                    q.append(v)
    out = []
    for e in range(len(graph.edges)):
        if (tree_edges >> e) & 1:
            continue
        u, v = graph.edges[e]
        out.append(CycleVector(graph, (1 << e) ^ path_mask[u] ^ path_mask[v]))
    return out


def algebraic_generates(s: Union[GeneratingSet, Sequence[CycleVector]], graph: Graph) -> bool:
    """True iff the span of s contains the whole cycle space."""
    basis = Gf2Basis(c.edges for c in s)
    return all(basis.contains(c.edges) for c in cycle_basis(graph))


def dagger_check(
    s: Union[GeneratingSet, Sequence[CycleVector]],
    c: CycleVector,
    u: int,
) -> Tuple[bool, Optional[Tuple[int, ...]]]:
    """Does some combination of s agree with c on the edge window u?

    Returns (True, indices of a witnessing combination) or (False, None).
    """
    rows = [v.edges & u for v in s]
    combo = solve_in_span(rows, c.edges & u)
    if combo is None:
        return False, None
    return True, combo


def simple_cycles_upto(graph: Graph, max_len: int) -> List[CycleVector]:
    """All simple cycles with at most max_len edges.

    Each cycle is rooted at its least vertex and walked in one canonical
    direction, so every cycle appears exactly once. Intended for small
    graphs; cost grows with the number of bounded-length paths.
    """
    if max_len < 3:
        return []
    out: List[CycleVector] = []
    for s in range(graph.n):
        # path state: current vertex, visited mask, edge mask, second vertex
        stack = [(s, 1 << s, 0, -1, 0)]
        while stack:
            u, visited, emask, second, length = stack.pop()
            for (w, e) in graph.adj[u]:
                if w == s and length >= 2:
                    # canonical direction: close only when second < current
                    if second < u:
                        out.append(CycleVector(graph, emask | (1 << e)))
                    continue
                if w <= s or (visited >> w) & 1 or length + 1 >= max_len:
                    continue
                stack.append(
                    (
                        w,
                        visited | (1 << w),
                        emask | (1 << e),
                        w if second < 0 else second,
                        length + 1,
                    )
                )
    return out


def _member_path_cycles(cone, h: int, max_len: int) -> List[int]:
    """Edge masks of cycles through cone vertex h only: a base path of at
    most max_len - 2 edges between two members, closed by two cone edges."""
    base = cone.base
    g = base.graph
    bits = cone.cone_edge_bits[h]
    members = sorted(bits)
    member_set = set(members)
    out: List[int] = []
    limit = max_len - 2
    if limit < 1:
        return out
    for u in members:
        # simple base paths from u of length <= limit ending above u
        stack = [(u, 1 << u, 0, 0)]
        while stack:
            x, visited, emask, length = stack.pop()
            for (w, e) in g.adj[x]:
                if (visited >> w) & 1:
                    continue
                nmask = emask | (1 << e)
                if w in member_set and w > u:
                    out.append(nmask | bits[u] | bits[w])
                if length + 1 < limit:
                    stack.append((w, visited | (1 << w), nmask, length + 1))
    return out


def cone_generating_set(cone, max_len: int = 6) -> GeneratingSet:
    """Short cycles of a cone-off: plain base cycles plus, per peripheral,
    the cycles through that one cone vertex.

    Cycles visiting two or more cone vertices are excluded: they hop
    between peripherals through cone edges only and their spans collapse
    the linkage structure the set is meant to expose.
    """
    g = cone.window.graph
    base_g = cone.base.graph
    cycles: List[CycleVector] = []
    # base graph cycles keep their edge indices inside the cone-off
    n_base_edges = len(base_g.edges)
    if len(cycle_basis(base_g)) > 0:
        for c in simple_cycles_upto(base_g, max_len):
            cycles.append(CycleVector(g, c.edges))
    seen = set()
    for h in range(len(cone.system.peripherals)):
        for emask in _member_path_cycles(cone, h, max_len):
            if emask not in seen:
                seen.add(emask)
                cycles.append(CycleVector(g, emask))
    return GeneratingSet(cycles)


class TamenessWitness:
    """A long cycle through a cone vertex that no short combination tracks."""

    def __init__(
        self,
        peripheral,
        cycle: CycleVector,
        edge_window: int,
        n_classes: int,
    ) -> None:
        self.peripheral = peripheral
        self.cycle = cycle
        self.edge_window = edge_window
        self.n_classes = n_classes

    def __repr__(self) -> str:
        return (
            f"TamenessWitness({self.peripheral.name}, "
            f"{self.n_classes} linkage classes)"
        )


def cone_cycle_tameness_witness(cone, s: GeneratingSet) -> Optional[TamenessWitness]:
    """Search for a cycle through one cone vertex outside the windowed span of s.

    Members of a peripheral are linked when some cycle of s enters the
    cone vertex through both. If the members fall into two or more
    linkage classes within one base component, a base path between
    classes closed by two cone edges restricts oddly to the cone edges
    of a single class, while every member of s restricts evenly there.
    Only peripherals with a coarsely bounded piece are searched; the
    rest disperse and their cone cycles stay short.
    """
    base = cone.base
    g = cone.window.graph
    for h, p in enumerate(cone.system.peripherals):
        comps = components(base.graph, p.members)
        if all(comp & base.zone_mask for comp in comps):
            continue
        bits = cone.cone_edge_bits[h]
        members = sorted(bits)
        idx = {u: i for i, u in enumerate(members)}
        parent = list(range(len(members)))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        vh = cone.cone_vertex(h)
        inc = cone.window.graph.inc_edge_masks[vh]
        for sigma in s:
            att = sigma.edges & inc
            if not att:
                continue
            ends = [
                u for u in members if bits[u] & att
            ]
            for u in ends[1:]:
                ra, rb = find(idx[ends[0]]), find(idx[u])
                if ra != rb:
                    parent[ra] = rb
        classes: Dict[int, List[int]] = {}
        for u in members:
            classes.setdefault(find(idx[u]), []).append(u)
        if len(classes) < 2:
            continue
        # pick two classes lying in one base component so a path exists
        base_comps = components(base.graph)
        groups = list(classes.values())
        pick = None
        for a in range(len(groups)):
            for b in range(a + 1, len(groups)):
                for comp in base_comps:
                    if (comp >> groups[a][0]) & 1 and (comp >> groups[b][0]) & 1:
                        pick = (groups[a], groups[b])
                        break
                if pick:
                    break
            if pick:
                break
        if pick is None:
            continue
        ga, gb = pick
        path = _base_path_edges(base.graph, ga[0], gb[0])
        cyc = CycleVector(g, path | bits[ga[0]] | bits[gb[0]])
        window = 0
        for u in ga:
            window |= bits[u]
        ok, _combo = dagger_check(s, cyc, window)
        if not ok:
            return TamenessWitness(p, cyc, window, len(classes))
    return None


def _base_path_edges(g: Graph, u: int, w: int) -> int:
    """Edge mask of a shortest path, breadth first."""
    prev: Dict[int, Tuple[int, int]] = {u: (-1, -1)}
    q = deque([u])
    while q:
        x = q.popleft()
        if x == w:
            break
        for (y, e) in g.adj[x]:
            if y not in prev:
                prev[y] = (x, e)
                q.append(y)
    if w not in prev:
        raise BadParams(f"no path between {u} and {w}")
    mask = 0
    x = w
    while prev[x][0] >= 0:
        x, e = prev[x]
        mask |= 1 << e
    return mask


class ChainViolation:
    """Two chain candidates agreeing on the pair but incomparable."""

    def __init__(self, c1: Cut, c2: Cut) -> None:
        self.c1 = c1
        self.c2 = c2

    def __repr__(self) -> str:
        return f"ChainViolation({bin(self.c1.side)}, {bin(self.c2.side)})"


def hamann_chain(
    en: Sequence[Cut], b: Cut, x: int
) -> Union[List[Cut], ChainViolation]:
    """Order by inclusion the members of en agreeing with b on x.

    Members are taken up to orientation: a cut counts if either side
    meets x exactly where b does. Returns the ascending chain, or a
    ChainViolation holding the first incomparable pair.
    """
    window = b.window
    full = window.graph.full_mask
    if x & ~full or x == 0:
        raise BadParams("x must be a nonempty vertex set of the window")
    bx = b.side & x
    if bx == 0 or bx == x:
        raise BadParams("b must split x into two nonempty parts")
    sides = {c.side for c in en}
    if b.side not in sides and b.star not in sides:
        raise BadParams("b is not a member of the family")
    agree: Dict[int, Cut] = {}
    for c in en:
        if c.side & x == bx:
            agree.setdefault(c.side, c)
        if c.star & x == bx:
            agree.setdefault(c.star, complement(c))
    chain = sorted(agree.values(), key=lambda c: (c.side.bit_count(), c.side))
    for i in range(len(chain) - 1):
        a, d = chain[i], chain[i + 1]
        if a.side & ~d.side:
            return ChainViolation(a, d)
    return chain


def alternating_sequence(
    c: CycleVector, b: Cut, a: Sequence[CycleVector]
) -> Tuple[List[int], List[int]]:
    """Walk from one crossing edge of c to the other through cycles of a.

    c must cross the coboundary of b in exactly two edges e and f, and
    the cycles of a must sum to c. Returns (edges, cycle indices) with
    edges = [e = e_1, ..., e_m = f], each consecutive pair lying on the
    listed cycle. Both coboundary edges of each step cross b, so the
    sequence alternates sides. Raises NoSequence if the walk cannot be
    completed; with the sum precondition that indicates a broken input.
    """
    g = c.graph
    db = b.cob
    cross = c.edges & db
    if popcount(cross) != 2:
        raise BadParams("cycle must cross the coboundary in exactly two edges")
    acc = 0
    for v in a:
        if v.graph is not g:
            raise GraphMismatch("cycles on different graphs")
        acc ^= v.edges
    if acc != c.edges:
        raise BadParams("cycles must sum to the target cycle")
    e, f = bit_list(cross)
    # bipartite reachability: coboundary edges <-> cycles meeting them
    edge_prev: Dict[int, int] = {e: -1}  # edge -> cycle index reaching it
    cyc_prev: Dict[int, int] = {}  # cycle index -> edge reaching it
    q = deque([e])
    while q:
        x = q.popleft()
        if x == f:
            break
        for i, v in enumerate(a):
            if i in cyc_prev or not (v.edges >> x) & 1:
                continue
            cyc_prev[i] = x
            for y in iter_bits(v.edges & db):
                if y not in edge_prev:
                    edge_prev[y] = i
                    q.append(y)
    if f not in edge_prev:
        raise NoSequence("crossing edges are not linked by the given cycles")
    edges = [f]
    cycles = []
    x = f
    while edge_prev[x] >= 0:
        i = edge_prev[x]
        cycles.append(i)
        x = cyc_prev[i]
        edges.append(x)
    edges.reverse()
    cycles.reverse()
    return edges, cycles
