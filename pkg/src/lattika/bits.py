"""Bit-vector helpers: element subsets are plain ints, bit i = element i."""

from __future__ import annotations

from typing import Iterable, Iterator


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(elems: Iterable[int]) -> int:
    m = 0
    for e in elems:
        m |= 1 << e
    return m


def popcount(mask: int) -> int:
    return mask.bit_count()


def canonical_key(mask: int) -> tuple[int, int]:
    """Sort key used for every enumeration: (size, numeric value)."""
    return (mask.bit_count(), mask)


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0
