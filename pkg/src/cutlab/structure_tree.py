"""Structure trees: ultrafilters on a nested cut family, and pullbacks.

A nested, complement-closed family E of cuts gives a tree: vertices are
the ultrafilters on E (one orientation per complement pair, upward
closed), and each pair contributes one edge. Construction goes through
head ultrafilters of the family members (linear in |E| per cut) and, on
small inputs, is verified against brute-force orientation enumeration.
"""

from __future__ import annotations

from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple

from .bitset import bit_list, iter_bits
from .boolean_ring import Cut, canonical_side, complement, cut_sort_key, is_nested
from .errors import (
    BadParams,
    ContainsTrivial,
    CutlabError,
    GraphMismatch,
    Inadmissible,
    InadmissiblePullback,
    NoFixedVertex,
    NotNested,
)
from .graph_core import Window, label_mult
from .peripheral import Peripheral, rel_escape_ideal

__all__ = [
    "NestedFamily",
    "validate_nested_family",
    "Ultrafilter",
    "StructureTree",
    "build_structure_tree",
    "enumerate_ultrafilters",
    "vertex_map",
    "tree_edge_cut",
    "pullback",
    "peripheral_fixed_vertex",
    "orbit_map",
    "translation_difference",
]


class NestedFamily:
    """Validated nested cut family: complement-closed, canonical order."""

    def __init__(self, window: Window, cuts: List[Cut], pair: List[int]) -> None:
        self.window = window
        self.cuts = cuts
        self.pair = pair
        self.index_of_side: Dict[int, int] = {c.side: i for i, c in enumerate(cuts)}
        self.pair_reps: List[int] = [i for i in range(len(cuts)) if i < pair[i]]
        # superset masks drive the upward-closure checks
        self.sup: List[int] = []
        for i, c in enumerate(cuts):
            m = 0
            for j, d in enumerate(cuts):
                if i != j and c.side & ~d.side == 0:
                    m |= 1 << j
            self.sup.append(m)

    def __len__(self) -> int:
        return len(self.cuts)

    @property
    def n_pairs(self) -> int:
        return len(self.pair_reps)

    def __repr__(self) -> str:
        return f"NestedFamily({self.n_pairs} pairs)"


def validate_nested_family(cuts: Sequence[Cut]) -> NestedFamily:
    """Dedupe, close under complement, check pairwise nesting."""
    if not cuts:
        raise BadParams("empty cut family")
    window = cuts[0].window
    full = window.graph.full_mask
    by_side: Dict[int, Cut] = {}
    for c in cuts:
        if c.window is not window:
            raise GraphMismatch("cuts live on different windows")
        if c.side == 0 or c.side == full:
            raise ContainsTrivial("family contains the empty or full cut")
        by_side.setdefault(c.side, c)
    for c in list(by_side.values()):
        if c.star not in by_side:
            by_side[c.star] = complement(c)
    ordered = sorted(by_side.values(), key=cut_sort_key)
    for i in range(len(ordered)):
        for j in range(i + 1, len(ordered)):
            if ordered[i].side == ordered[j].star:
                continue
            if not is_nested(ordered[i], ordered[j]):
                raise NotNested(
                    "cuts cross: all four corners inhabited",
                    pair=(ordered[i], ordered[j]),
                )
    side_to_idx = {c.side: i for i, c in enumerate(ordered)}
    pair = [side_to_idx[c.star] for c in ordered]
    return NestedFamily(window, ordered, pair)


class Ultrafilter:
    """One orientation of every pair, upward closed under inclusion."""

    def __init__(self, family: NestedFamily, mask: int) -> None:
        self.family = family
        self.mask = mask

    def chosen(self) -> List[Cut]:
        return [self.family.cuts[i] for i in iter_bits(self.mask)]

    def is_valid(self) -> bool:
        fam = self.family
        for i in fam.pair_reps:
            j = fam.pair[i]
            if ((self.mask >> i) & 1) == ((self.mask >> j) & 1):
                return False
        for i in iter_bits(self.mask):
            if fam.sup[i] & ~self.mask:
                return False
        return True

    def __repr__(self) -> str:
        return f"Ultrafilter({bin(self.mask)})"


def enumerate_ultrafilters(family: NestedFamily) -> List[int]:
    """Brute-force oracle: all upward-closed orientations, as masks."""
    reps = family.pair_reps
    if len(reps) > 20:
        raise BadParams(f"{len(reps)} pairs is too many to enumerate")
    out = []
    for choice in range(1 << len(reps)):
        mask = 0
        for t, i in enumerate(reps):
            mask |= 1 << (i if (choice >> t) & 1 else family.pair[i])
        ok = True
        for i in iter_bits(mask):
            if family.sup[i] & ~mask:
                ok = False
                break
        if ok:
            out.append(mask)
    return out


def _head_mask(family: NestedFamily, b_idx: int) -> int:
    """Ultrafilter pointing at b: pick c when b <= c or c* < b."""
    b = family.cuts[b_idx].side
    mask = 0
    for i in family.pair_reps:
        j = family.pair[i]
        if b_idx == i or b_idx == j:
            mask |= 1 << b_idx
            continue
        ci = family.cuts[i].side
        cj = family.cuts[j].side
        pick_i = (b & ~ci == 0) or (cj & ~b == 0 and cj != b)
        pick_j = (b & ~cj == 0) or (ci & ~b == 0 and ci != b)
        if pick_i == pick_j:
            raise CutlabError("head orientation is not determined; family not nested")
        mask |= 1 << (i if pick_i else j)
    return mask


class StructureTree:
    """Tree of ultrafilters; one edge per complement pair."""

    def __init__(
        self,
        family: NestedFamily,
        vertices: List[Ultrafilter],
        edges: List[Tuple[int, int, int]],
    ) -> None:
        self.family = family
        self.vertices = vertices
        self.edges = edges
        self.vertex_index: Dict[int, int] = {
            u.mask: t for t, u in enumerate(vertices)
        }
        self.adj: List[List[Tuple[int, int]]] = [[] for _ in vertices]
        for (u, v, rep) in edges:
            self.adj[u].append((v, rep))
            self.adj[v].append((u, rep))
        self.edge_for_pair: Dict[int, Tuple[int, int]] = {
            rep: (u, v) for (u, v, rep) in edges
        }

    @property
    def n(self) -> int:
        return len(self.vertices)

    def is_tree(self) -> bool:
        if len(self.edges) != self.n - 1:
            return False
        seen = {0}
        q = deque([0])
        while q:
            u = q.popleft()
            for (v, _rep) in self.adj[u]:
                if v not in seen:
                    seen.add(v)
                    q.append(v)
        return len(seen) == self.n

    def __repr__(self) -> str:
        return f"StructureTree({self.n} vertices, {len(self.edges)} edges)"


def build_structure_tree(family: NestedFamily) -> StructureTree:
    """Region construction, cross-checked against the oracle when small."""
    heads: Dict[int, int] = {}
    order: List[int] = []
    head_of: List[int] = []
    for idx in range(len(family.cuts)):
        h = _head_mask(family, idx)
        if h not in heads:
            heads[h] = len(order)
            order.append(h)
        head_of.append(heads[h])
    edges: List[Tuple[int, int, int]] = []
    for i in family.pair_reps:
        j = family.pair[i]
        u, v = head_of[i], head_of[j]
        diff = order[u] ^ order[v]
        if diff != (1 << i) | (1 << j):
            raise CutlabError("pair heads differ off their own pair")
        edges.append((u, v, i))
    vertices = [Ultrafilter(family, m) for m in order]
    for u in vertices:
        if not u.is_valid():
            raise CutlabError("constructed head is not an ultrafilter")
    tree = StructureTree(family, vertices, edges)
    if not tree.is_tree():
        raise CutlabError("region construction did not produce a tree")
    if len(family.cuts) <= 24:
        if sorted(order) != sorted(enumerate_ultrafilters(family)):
            raise CutlabError("region construction disagrees with the oracle")
    return tree


def vertex_map(window: Window, tree: StructureTree) -> List[int]:
    """Graph vertex v to the tree vertex of U_v = {b in E : v in b}."""
    fam = tree.family
    if fam.window is not window:
        raise GraphMismatch("tree family lives on a different window")
    out = []
    for v in range(window.graph.n):
        mask = 0
        for i in fam.pair_reps:
            j = fam.pair[i]
            mask |= 1 << (i if (fam.cuts[i].side >> v) & 1 else j)
        t = tree.vertex_index.get(mask)
        if t is None:
            raise CutlabError(f"U_{v} is not a tree vertex")
        out.append(t)
    return out


def tree_edge_cut(tree: StructureTree, pair_rep: int) -> Tuple[int, int]:
    """Tree-vertex masks of the two sides of a pair's edge.

    First mask: vertices whose ultrafilter contains cuts[pair_rep];
    second: the rest. These are the components of the tree minus the edge.
    """
    if pair_rep not in tree.edge_for_pair:
        raise BadParams(f"{pair_rep} is not a pair representative")
    side = 0
    for t, u in enumerate(tree.vertices):
        if (u.mask >> pair_rep) & 1:
            side |= 1 << t
    return side, ((1 << tree.n) - 1) ^ side


def pullback(
    window: Window, tree: StructureTree, f: Sequence[int], cut_index: int
) -> Cut:
    """Preimage under f of the tree side associated with cuts[cut_index].

    f assigns a tree vertex to every window vertex. On windows the
    preimage must still be admissible; if its coboundary touches the
    frontier the pullback does not exist at this scale.
    """
    fam = tree.family
    rep = cut_index if cut_index in tree.edge_for_pair else fam.pair[cut_index]
    tree_side, _rest = tree_edge_cut(tree, rep)
    if rep != cut_index:
        tree_side = ((1 << tree.n) - 1) ^ tree_side
    side = 0
    for v in range(window.graph.n):
        t = f[v]
        if not (0 <= t < tree.n):
            raise BadParams(f"f({v}) = {t} is not a tree vertex")
        if (tree_side >> t) & 1:
            side |= 1 << v
    try:
        return Cut(window, side)
    except Inadmissible as ex:
        raise InadmissiblePullback(str(ex)) from ex


def orbit_map(
    window: Window, tree: StructureTree, f: Sequence[int], x0: int
) -> List[Optional[int]]:
    """g -> f(g * x0) on label groups; None where the product leaves the window.

    f is a vertex map to the tree and x0 a window vertex; the composite
    sends a group element (window vertex) to the tree vertex over its
    translate of x0.
    """
    g = window.graph
    x_lab = g.labels[x0]
    out: List[Optional[int]] = []
    for v in range(g.n):
        lab = label_mult(window.family, g.labels[v], x_lab)
        w = g.label_to_id.get(lab)
        out.append(None if w is None else f[w])
    return out


def translation_difference(
    window: Window,
    tree: StructureTree,
    f: Sequence[int],
    x0: int,
    y0: int,
    pair_rep: int,
) -> Tuple[int, int]:
    """Where the pullbacks of a tree cut through two basepoints disagree.

    Returns (difference mask, domain mask): the domain holds the group
    elements whose translates of both basepoints stay in the window, and
    the difference holds those sent to opposite sides of the tree cut.
    The difference concentrates on translates of the x0-y0 geodesic that
    cross the cut's tree edge, so for shallow cuts it stays near the
    basepoint instead of escaping.
    """
    side, _rest = tree_edge_cut(tree, pair_rep)
    phi_x = orbit_map(window, tree, f, x0)
    phi_y = orbit_map(window, tree, f, y0)
    domain = 0
    diff = 0
    for v in range(window.graph.n):
        tx, ty = phi_x[v], phi_y[v]
        if tx is None or ty is None:
            continue
        domain |= 1 << v
        if ((side >> tx) & 1) != ((side >> ty) & 1):
            diff |= 1 << v
    return diff, domain


def peripheral_fixed_vertex(tree: StructureTree, peripheral: Peripheral) -> int:
    """Tree vertex whose orientation points every pair at the peripheral.

    Each pair is oriented to the side holding the peripheral's escape
    ideal; blind pairs go to the side with more members, ties to the
    canonical side. If the result is not upward closed, some family
    member splits the peripheral and there is no fixed vertex.
    """
    fam = tree.family
    w = fam.window
    z = rel_escape_ideal(w, peripheral.members)
    members = peripheral.members
    mask = 0
    for i in fam.pair_reps:
        j = fam.pair[i]
        si = fam.cuts[i].side
        zi = si & z
        if z and zi == z:
            pick = i
        elif z and zi == 0:
            pick = j
        else:
            ni = (si & members).bit_count()
            nj = (fam.cuts[j].side & members).bit_count()
            if ni > nj:
                pick = i
            elif nj > ni:
                pick = j
            else:
                canon = canonical_side(w.graph.full_mask, si)
                pick = i if canon == si else j
        mask |= 1 << pick
    for i in iter_bits(mask):
        bad = fam.sup[i] & ~mask
        if bad:
            j = bad & -bad
            raise NoFixedVertex(
                f"orientation of {peripheral.name} is not upward closed",
                witness=(fam.cuts[i], fam.cuts[j.bit_length() - 1]),
            )
    t = tree.vertex_index.get(mask)
    if t is None:
        raise NoFixedVertex(
            f"orientation of {peripheral.name} is not a tree vertex"
        )
    return t
