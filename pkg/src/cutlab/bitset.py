"""Small helpers for int-encoded vertex and edge sets."""

from __future__ import annotations

from typing import Iterable, Iterator, List

__all__ = ["mask_of", "iter_bits", "bit_list", "popcount", "lowest_set"]


def mask_of(ids: Iterable[int]) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in increasing order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def bit_list(mask: int) -> List[int]:
    return list(iter_bits(mask))


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest_set(mask: int) -> int:
    """Position of the least set bit (mask must be nonzero)."""
    return (mask & -mask).bit_length() - 1
