"""The Boolean ring of cuts of a graph or window.

A cut is a vertex set b together with its coboundary db (edges with one
endpoint in b, one in the complement b*). Addition is symmetric difference,
multiplication is intersection. On windows only admissible cuts (db away
from frontier-incident edges) are representable; those are exactly the cuts
that persist under growing the window.
"""

from __future__ import annotations

from functools import cmp_to_key
from typing import Iterable, List, Optional, Sequence, Tuple

from .bitset import iter_bits
from .errors import (
    BadParams,
    DimensionMismatch,
    GraphMismatch,
    Inadmissible,
    ShadowSplit,
)
from .gf2 import Gf2Basis
from .graph_core import Window, WindowEnd

__all__ = [
    "Cut",
    "complement",
    "sym_diff",
    "intersect",
    "CornerProfile",
    "corners",
    "is_nested",
    "is_nested_family",
    "separates",
    "canonical_side",
    "canonical_compare",
    "cut_sort_key",
    "CutSpan",
]


class Cut:
    """One oriented cut: a side bitset on a fixed window.

    Immutable. The complement is a distinct Cut with the same coboundary.
    Construction validates admissibility, so downstream code never sees a
    window cut whose coboundary touches the frontier.
    """

    def __init__(self, window: Window, side: int, _cob: Optional[int] = None) -> None:
        graph = window.graph
        if side & ~graph.full_mask:
            raise BadParams("cut side contains ids outside the graph")
        self.window = window
        self.side = side
        self.cob = graph.coboundary(side) if _cob is None else _cob
        if self.cob & window.frontier_edge_mask:
            raise Inadmissible(
                "coboundary touches a frontier-incident edge"
            )

    @property
    def size(self) -> int:
        """|db|, the number of coboundary edges."""
        return self.cob.bit_count()

    @property
    def star(self) -> int:
        """The complement side b* as a bitset."""
        return self.window.graph.full_mask & ~self.side

    def vertices(self) -> List[int]:
        return list(iter_bits(self.side))

    def is_tight(self) -> bool:
        """Both induced sides connected and nonempty."""
        from .graph_core import component_containing

        g = self.window.graph
        for part in (self.side, self.star):
            if part == 0:
                return False
            if component_containing(g.adj_masks, part, part) != part:
                return False
        return True

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Cut)
            and other.window is self.window
            and other.side == self.side
        )

    def __hash__(self) -> int:
        return hash(self.side)

    def __repr__(self) -> str:
        return f"Cut(|b|={self.side.bit_count()}, |db|={self.size})"


def _check_same(a: Cut, b: Cut) -> None:
    if a.window is not b.window:
        raise GraphMismatch("cuts live on different windows")


def complement(c: Cut) -> Cut:
    return Cut(c.window, c.star, _cob=c.cob)


def sym_diff(a: Cut, b: Cut) -> Cut:
    """a + b. Coboundary is the symmetric difference of coboundaries."""
    _check_same(a, b)
    return Cut(a.window, a.side ^ b.side, _cob=a.cob ^ b.cob)


def intersect(a: Cut, b: Cut) -> Cut:
    """a * b. Only edges of da or db can cross the intersection."""
    _check_same(a, b)
    side = a.side & b.side
    g = a.window.graph
    cob = 0
    for e in iter_bits(a.cob | b.cob):
        u, v = g.edges[e]
        if ((side >> u) ^ (side >> v)) & 1:
            cob |= 1 << e
    return Cut(a.window, side, _cob=cob)


class CornerProfile:
    """Nonemptiness of the four corners of a pair of cuts."""

    def __init__(self, ab: bool, ab_star: bool, a_star_b: bool, a_star_b_star: bool):
        self.ab = ab
        self.ab_star = ab_star
        self.a_star_b = a_star_b
        self.a_star_b_star = a_star_b_star

    def as_tuple(self) -> Tuple[bool, bool, bool, bool]:
        return (self.ab, self.ab_star, self.a_star_b, self.a_star_b_star)

    def __repr__(self) -> str:
        return f"CornerProfile{self.as_tuple()}"


def corners(a: Cut, b: Cut) -> CornerProfile:
    _check_same(a, b)
    return CornerProfile(
        bool(a.side & b.side),
        bool(a.side & b.star),
        bool(a.star & b.side),
        bool(a.star & b.star),
    )


def is_nested(a: Cut, b: Cut) -> bool:
    """True iff some corner is empty."""
    return not all(corners(a, b).as_tuple())


def is_nested_family(
    cuts: Sequence[Cut],
) -> Tuple[bool, Optional[Tuple[Cut, Cut]]]:
    """Pairwise nestedness with the first violating pair as witness."""
    for i in range(len(cuts)):
        for j in range(i + 1, len(cuts)):
            if not is_nested(cuts[i], cuts[j]):
                return False, (cuts[i], cuts[j])
    return True, None


def _shadow_sides(c: Cut, end: WindowEnd, strict: bool) -> int:
    """+1 if the shadow is inside b, -1 if inside b*, 0 if it straddles."""
    inside = end.shadow & ~c.side == 0
    outside = end.shadow & c.side == 0
    if inside:
        return 1
    if outside:
        return -1
    if strict:
        raise ShadowSplit("end shadow meets both sides of the cut")
    return 0


def separates(c: Cut, e1: WindowEnd, e2: WindowEnd, strict: bool = False) -> bool:
    """Shadows wholly on opposite sides.

    A straddled shadow separates nothing; strict mode turns a straddle into
    ShadowSplit for callers that require clean sides.
    """
    if e1.id == e2.id:
        raise BadParams("need two distinct window ends")
    s1 = _shadow_sides(c, e1, strict)
    s2 = _shadow_sides(c, e2, strict)
    return s1 * s2 == -1


def canonical_side(full_mask: int, side: int) -> int:
    """Deduplication representative: the side not containing vertex 0."""
    return (full_mask & ~side) if side & 1 else side


def canonical_compare(a: int, b: int) -> int:
    """Order matching lexicographic comparison of sorted vertex id tuples.

    At the lowest differing bit, the mask holding it comes first unless the
    other mask has nothing beyond it (a strict prefix precedes).
    """
    if a == b:
        return 0
    d = a ^ b
    low = (d & -d).bit_length() - 1
    owner_is_a = bool((a >> low) & 1)
    other = b if owner_is_a else a
    if other >> (low + 1) == 0:
        return 1 if owner_is_a else -1
    return -1 if owner_is_a else 1


def cut_sort_key(c: Cut):
    return _SIDE_KEY(c.side)


_SIDE_KEY = cmp_to_key(canonical_compare)


class CutSpan:
    """GF(2) span of cut sides over a fixed vertex indexing."""

    def __init__(self, n: int, cuts: Iterable[Cut] = ()) -> None:
        self.n = n
        self.basis = Gf2Basis()
        for c in cuts:
            self.insert(c)

    @property
    def rank(self) -> int:
        return self.basis.rank

    def _vec(self, c: Cut) -> int:
        if c.window.graph.n != self.n:
            raise DimensionMismatch(
                f"cut lives on {c.window.graph.n} vertices, span on {self.n}"
            )
        return c.side

    def insert(self, c: Cut) -> bool:
        return self.basis.insert(self._vec(c))

    def contains(self, c: Cut) -> bool:
        return self.basis.contains(self._vec(c))
