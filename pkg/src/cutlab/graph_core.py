"""Graphs, finite windows of infinite graphs, and window ends.

A window is a ball B(R) around a basepoint in some locally finite graph,
carrying the sphere of radius R as its frontier. Everything downstream
(cuts, peripheral structure, cone-offs) works relative to a window; plain
finite graphs are wrapped as windows with an empty frontier.
"""

from __future__ import annotations

from collections import deque
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .bitset import iter_bits, lowest_set, mask_of
from .errors import (
    BadParams,
    DanglingId,
    DuplicateEdge,
    NoFrontier,
    SelfLoop,
    StabilityError,
)

__all__ = [
    "Graph",
    "build_graph",
    "components",
    "component_containing",
    "Window",
    "WindowEnd",
    "finite_window",
    "cayley_window",
    "window_ends",
    "limit_size_class",
    "label_mult",
    "LIMIT_SIZE_CLASSES",
    "FAMILIES",
]

LIMIT_SIZE_CLASSES = ("Zero", "One", "Two", "Many")

FAMILIES = ("finite", "free", "grid_Z", "grid_Z2", "tree", "tree_with_end")


class Graph:
    """Undirected simple graph with bitset adjacency.

    Vertex sets and edge sets are Python ints: bit v of a vertex mask is
    vertex v, bit e of an edge mask is edges[e].
    """

    def __init__(
        self,
        n: int,
        edges: Sequence[Tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
        edge_labels: Optional[Sequence[str]] = None,
    ) -> None:
        self.n = n
        self.edges: List[Tuple[int, int]] = [
            (u, v) if u < v else (v, u) for (u, v) in edges
        ]
        self.labels: List[str] = (
            list(labels) if labels is not None else [str(i) for i in range(n)]
        )
        self.edge_labels: Optional[List[str]] = (
            list(edge_labels) if edge_labels is not None else None
        )
        self.full_mask = (1 << n) - 1
        self.all_edges_mask = (1 << len(self.edges)) - 1
        self.adj_masks: List[int] = [0] * n
        self.inc_edge_masks: List[int] = [0] * n
        self.adj: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
        self.edge_index: Dict[Tuple[int, int], int] = {}
        for i, (u, v) in enumerate(self.edges):
            self.adj_masks[u] |= 1 << v
            self.adj_masks[v] |= 1 << u
            self.inc_edge_masks[u] |= 1 << i
            self.inc_edge_masks[v] |= 1 << i
            self.adj[u].append((v, i))
            self.adj[v].append((u, i))
            self.edge_index[(u, v)] = i
        self.label_to_id: Dict[str, int] = {
            lab: i for i, lab in enumerate(self.labels)
        }

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def coboundary(self, side_mask: int) -> int:
        """Edge mask of edges with exactly one endpoint in side_mask.

        XOR over incident-edge masks: interior edges cancel in pairs.
        Computed over the smaller of the two sides.
        """
        other = self.full_mask & ~side_mask
        pick = side_mask if side_mask.bit_count() <= other.bit_count() else other
        acc = 0
        for v in iter_bits(pick):
            acc ^= self.inc_edge_masks[v]
        return acc


def build_graph(
    n: int,
    edges: Sequence[Tuple[int, int]],
    labels: Optional[Sequence[str]] = None,
    edge_labels: Optional[Sequence[str]] = None,
) -> Graph:
    """Validated Graph constructor."""
    if n < 1:
        raise BadParams(f"vertex count must be positive, got {n}")
    if labels is not None and len(labels) != n:
        raise BadParams(f"expected {n} labels, got {len(labels)}")
    if edge_labels is not None and len(edge_labels) != len(edges):
        raise BadParams("edge label count does not match edge count")
    seen = set()
    for (u, v) in edges:
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if not (0 <= u < n) or not (0 <= v < n):
            raise DanglingId(f"edge ({u}, {v}) references a missing vertex")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"duplicate edge {key}")
        seen.add(key)
    return Graph(n, edges, labels, edge_labels)


def component_containing(adj_masks: Sequence[int], allowed: int, seed: int) -> int:
    """Connected component of the lowest bit of seed inside allowed."""
    comp = seed & -seed
    frontier = comp
    while frontier:
        grow = 0
        for v in iter_bits(frontier):
            grow |= adj_masks[v]
        frontier = grow & allowed & ~comp
        comp |= frontier
    return comp


def components(graph: Graph, within: Optional[int] = None) -> List[int]:
    """Component masks of the induced subgraph, ordered by least vertex."""
    remaining = graph.full_mask if within is None else within
    out = []
    while remaining:
        comp = component_containing(graph.adj_masks, remaining, remaining)
        out.append(comp)
        remaining &= ~comp
    return out


class Window:
    """Ball B(radius) with its frontier sphere and an inner radius.

    zone(m) is B(radius) minus B(m); a vertex set escapes when it meets the
    zone at the window's inner radius. Admissible cuts keep their coboundary
    away from frontier-incident edges, so they persist under radius growth.
    """

    def __init__(
        self,
        graph: Graph,
        radius: int,
        inner_radius: int,
        dist: Sequence[int],
        family: str = "finite",
        basepoint: int = 0,
        levels: Optional[Sequence[int]] = None,
        params: Optional[Dict[str, int]] = None,
        frontier_override: Optional[int] = None,
    ) -> None:
        self.graph = graph
        self.radius = radius
        self.inner_radius = inner_radius
        self.dist: List[int] = list(dist)
        self.family = family
        self.basepoint = basepoint
        self.levels: Optional[List[int]] = list(levels) if levels else None
        self.params: Dict[str, int] = dict(params or {})
        self._ends_cache: Dict[int, list] = {}
        if frontier_override is not None:
            # cone-off windows keep the base frontier; cone vertices stay interior
            self.frontier_mask = frontier_override
        else:
            self.frontier_mask = mask_of(
                v for v in range(graph.n) if self.dist[v] == radius
            )
            if family == "finite":
                self.frontier_mask = 0
        self.frontier_edge_mask = 0
        for v in iter_bits(self.frontier_mask):
            self.frontier_edge_mask |= graph.inc_edge_masks[v]
        self.admissible_edge_mask = graph.all_edges_mask & ~self.frontier_edge_mask
        self.zone_mask = self.zone_mask_at(inner_radius)

    def zone_mask_at(self, m: int) -> int:
        return mask_of(v for v in range(self.graph.n) if self.dist[v] > m)

    def escapes(self, side_mask: int) -> bool:
        """True when the set meets the zone beyond the inner radius."""
        return side_mask & self.zone_mask != 0

    def is_admissible(self, side_mask: int) -> bool:
        """Coboundary avoids every frontier-incident edge."""
        return self.graph.coboundary(side_mask) & self.frontier_edge_mask == 0


def finite_window(graph: Graph, basepoint: int = 0) -> Window:
    """Wrap a finite graph as a window with empty frontier and empty zone."""
    if not (0 <= basepoint < graph.n):
        raise BadParams(f"basepoint {basepoint} out of range")
    dist = _bfs_dist(graph, basepoint)
    radius = max((d for d in dist if d >= 0), default=0)
    return Window(graph, radius, radius, dist, family="finite", basepoint=basepoint)


def _bfs_dist(graph: Graph, source: int) -> List[int]:
    dist = [-1] * graph.n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        for (w, _e) in graph.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def _grow_ball(
    root_label: str,
    radius: int,
    neighbor_fn: Callable[[str], List[Tuple[str, str]]],
) -> Tuple[List[str], List[Tuple[int, int]], List[str], List[int]]:
    """Generic ball builder: BFS with label-sorted neighbor expansion.

    neighbor_fn maps a vertex label to (neighbor label, edge label) pairs.
    Vertex ids come out in breadth-first order, so they are sorted by
    distance from the root with ties broken lexicographically along the way.
    """
    labels = [root_label]
    ids = {root_label: 0}
    dist = [0]
    edges: List[Tuple[int, int]] = []
    edge_labels: List[str] = []
    seen_edges = set()
    head = 0
    while head < len(labels):
        u = head
        head += 1
        for (nlab, elab) in sorted(neighbor_fn(labels[u])):
            if nlab in ids:
                w = ids[nlab]
            elif dist[u] < radius:
                w = len(labels)
                ids[nlab] = w
                labels.append(nlab)
                dist.append(dist[u] + 1)
            else:
                continue
            key = (u, w) if u < w else (w, u)
            if key not in seen_edges:
                seen_edges.add(key)
                edges.append(key)
                edge_labels.append(elab)
    return labels, edges, edge_labels, dist


def _free_neighbors(n_gens: int) -> Callable[[str], List[Tuple[str, str]]]:
    gens = [chr(ord("a") + i) for i in range(n_gens)]

    def fn(word: str) -> List[Tuple[str, str]]:
        out = []
        for g in gens:
            for letter in (g, g.upper()):
                if word and word[-1] == letter.swapcase():
                    out.append((word[:-1], g))
                else:
                    out.append((word + letter, g))
        return out

    return fn


def _tree_neighbors(degree: int) -> Callable[[str], List[Tuple[str, str]]]:
    def fn(label: str) -> List[Tuple[str, str]]:
        out = []
        if label:
            out.append((label[:-1], label[-1]))
            k = degree - 1
        else:
            k = degree
        for c in range(k):
            out.append((label + str(c), str(c)))
        return out

    return fn


def label_mult(family: str, a: str, b: str) -> str:
    """Group product of two vertex labels, for families that carry one.

    free labels are reduced words (case swap inverts a letter); grid
    labels add coordinatewise. Tree families have no label product.
    """
    if family == "free":
        out = list(a)
        i = 0
        while out and i < len(b) and out[-1] == b[i].swapcase():
            out.pop()
            i += 1
        return "".join(out) + b[i:]
    if family == "grid_Z":
        return str(int(a) + int(b))
    if family == "grid_Z2":
        x1, y1 = (int(t) for t in a[1:-1].split(","))
        x2, y2 = (int(t) for t in b[1:-1].split(","))
        return f"({x1 + x2},{y1 + y2})"
    raise BadParams(f"family {family!r} has no label product")


def cayley_window(
    family: str,
    radius: int,
    inner_radius: Optional[int] = None,
    gens: int = 2,
    degree: int = 3,
) -> Window:
    """Ball window in one of the built-in vertex-transitive families.

    free: free group on `gens` letters (lowercase letters, uppercase
        inverses, empty word at the basepoint).
    grid_Z / grid_Z2: the line and the square grid (L1 ball).
    tree: `degree`-regular tree, labels are root paths.
    tree_with_end: same tree plus integer levels against the all-"0" ray,
        level(v) = depth(v) - 2 * (length of the maximal all-"0" prefix).
    """
    if family not in FAMILIES or family == "finite":
        raise BadParams(f"unknown family {family!r}")
    if radius < 2:
        raise NoFrontier(f"radius {radius} leaves no usable frontier")
    m = (radius + 1) // 2 if inner_radius is None else inner_radius
    if not (0 <= m < radius):
        raise BadParams(f"inner radius {m} must lie in [0, {radius})")

    levels: Optional[List[int]] = None
    params: Dict[str, int] = {}
    if family == "free":
        if not (1 <= gens <= 26):
            raise BadParams(f"generator count {gens} out of range")
        params["gens"] = gens
        labels, edges, elabs, dist = _grow_ball("", radius, _free_neighbors(gens))
    elif family == "grid_Z":
        def fn(lab: str) -> List[Tuple[str, str]]:
            i = int(lab)
            return [(str(i - 1), "a"), (str(i + 1), "a")]

        labels, edges, elabs, dist = _grow_ball("0", radius, fn)
    elif family == "grid_Z2":
        def fn2(lab: str) -> List[Tuple[str, str]]:
            x, y = (int(t) for t in lab[1:-1].split(","))
            return [
                (f"({x - 1},{y})", "a"),
                (f"({x + 1},{y})", "a"),
                (f"({x},{y - 1})", "b"),
                (f"({x},{y + 1})", "b"),
            ]

        labels, edges, elabs, dist = _grow_ball("(0,0)", radius, fn2)
    else:
        if degree < 3:
            raise BadParams(f"tree degree {degree} must be at least 3")
        params["degree"] = degree
        labels, edges, elabs, dist = _grow_ball("", radius, _tree_neighbors(degree))
        if family == "tree_with_end":
            levels = []
            for lab in labels:
                zeros = 0
                while zeros < len(lab) and lab[zeros] == "0":
                    zeros += 1
                levels.append(len(lab) - 2 * zeros)

    graph = build_graph(len(labels), edges, labels, elabs)
    return Window(graph, radius, m, dist, family=family, levels=levels, params=params)


class WindowEnd:
    """One escaping direction: a zone component touching the frontier."""

    def __init__(self, end_id: int, shadow: int) -> None:
        self.id = end_id
        self.shadow = shadow

    def __repr__(self) -> str:
        return f"WindowEnd({self.id}, |shadow|={self.shadow.bit_count()})"


def window_ends(window: Window, inner_radius: Optional[int] = None) -> List[WindowEnd]:
    """Zone components that touch the frontier, ordered by least vertex.

    These are the window-scale stand-ins for ends: each is the trace of at
    least one escaping direction of the ambient graph.
    """
    if window.frontier_mask == 0:
        raise NoFrontier("finite windows have no ends")
    m = window.inner_radius if inner_radius is None else inner_radius
    if not (0 <= m < window.radius):
        raise BadParams(f"inner radius {m} must lie in [0, {window.radius})")
    cached = window._ends_cache.get(m)
    if cached is not None:
        return cached
    zone = window.zone_mask if m == window.inner_radius else window.zone_mask_at(m)
    shadows = [
        comp
        for comp in components(window.graph, zone)
        if comp & window.frontier_mask
    ]
    ends = [WindowEnd(i, s) for i, s in enumerate(shadows)]
    window._ends_cache[m] = ends
    return ends


def _classify(count: int) -> str:
    if count <= 2:
        return LIMIT_SIZE_CLASSES[count]
    return "Many"


def limit_size_class(
    window: Window, subset: int, inner_radius: Optional[int] = None
) -> str:
    """Zero / One / Two / Many limiting directions of a vertex set.

    Counts window-ends whose component meets the set. Guarded: the class
    must agree at inner radii m and m+1, otherwise the window is too small
    to trust and StabilityError is raised.
    """
    if window.frontier_mask == 0:
        raise NoFrontier("finite windows have no ends")
    if subset & ~window.graph.full_mask:
        raise BadParams("subset contains ids outside the window")
    m = window.inner_radius if inner_radius is None else inner_radius
    if m + 1 >= window.radius:
        raise BadParams(
            f"inner radius {m} leaves no room for the stability check at {m + 1}"
        )
    at_m = _classify(sum(1 for e in window_ends(window, m) if e.shadow & subset))
    at_m1 = _classify(
        sum(1 for e in window_ends(window, m + 1) if e.shadow & subset)
    )
    if at_m != at_m1:
        raise StabilityError(
            f"size class flips from {at_m} at {m} to {at_m1} at {m + 1}",
            at_m=at_m,
            at_m1=at_m1,
        )
    return at_m
