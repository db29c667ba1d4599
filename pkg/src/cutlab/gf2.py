"""GF(2) linear algebra on Python int bitsets.

Vectors are arbitrary-precision ints; bit i is coordinate i. Elimination
uses least-index pivots so every result is deterministic.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Tuple

__all__ = [
    "lowest_bit",
    "bit_indices",
    "Gf2Basis",
    "gf2_rank",
    "gf2_span_equal",
    "solve_in_span",
]


def lowest_bit(x: int) -> int:
    """Index of the least significant set bit (x must be nonzero)."""
    return (x & -x).bit_length() - 1


def bit_indices(x: int) -> List[int]:
    """Set bit positions in increasing order."""
    out = []
    while x:
        b = x & -x
        out.append(b.bit_length() - 1)
        x ^= b
    return out


class Gf2Basis:
    """Row-reduced basis of a GF(2) subspace, single writer / many readers.

    Rows are kept reduced against each other, indexed by pivot position.
    """

    def __init__(self, rows: Iterable[int] = ()) -> None:
        self.pivot_rows: dict[int, int] = {}
        for r in rows:
            self.insert(r)

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def reduce(self, v: int) -> int:
        """Remainder of v after elimination against the basis."""
        for p in sorted(self.pivot_rows, reverse=True):
            if (v >> p) & 1:
                v ^= self.pivot_rows[p]
        return v

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def insert(self, v: int) -> bool:
        """Add v to the span. Returns True iff v was independent."""
        r = self.reduce(v)
        if r == 0:
            return False
        p = r.bit_length() - 1
        # keep rows mutually reduced
        for q, row in list(self.pivot_rows.items()):
            if (row >> p) & 1:
                self.pivot_rows[q] = row ^ r
        self.pivot_rows[p] = r
        return True

    def copy(self) -> "Gf2Basis":
        b = Gf2Basis()
        b.pivot_rows = dict(self.pivot_rows)
        return b


def gf2_rank(rows: Iterable[int]) -> int:
    return Gf2Basis(rows).rank


def gf2_span_equal(rows_a: Iterable[int], rows_b: Iterable[int]) -> bool:
    a = Gf2Basis(rows_a)
    b = Gf2Basis(rows_b)
    if a.rank != b.rank:
        return False
    return all(a.contains(r) for r in b.pivot_rows.values())


def solve_in_span(rows: List[int], target: int) -> Optional[Tuple[int, ...]]:
    """Indices of rows XOR-ing to target, or None if target is outside the span.

    Deterministic: elimination in row order with least-index pivots.
    """
    basis: dict[int, Tuple[int, int]] = {}  # pivot -> (row value, combo mask)
    for i, row in enumerate(rows):
        v, combo = row, 1 << i
        for p in sorted(basis, reverse=True):
            if (v >> p) & 1:
                rv, rc = basis[p]
                v ^= rv
                combo ^= rc
        if v:
            basis[v.bit_length() - 1] = (v, combo)
    v, combo = target, 0
    for p in sorted(basis, reverse=True):
        if (v >> p) & 1:
            rv, rc = basis[p]
            v ^= rv
            combo ^= rc
    if v:
        return None
    return tuple(bit_indices(combo))
