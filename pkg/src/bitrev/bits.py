"""Bit-level index reversal primitives.

An array index is treated as a fixed-width string of b bits; reversing the
string gives the target slot of the bit-reversed permutation.  The
functions here work on plain Python integers and are the reference for the
compiled array kernels elsewhere in the package, which inline the same
tricks.
"""

from typing import NamedTuple

import numpy as np
from numba import njit, uint64

WORD_BITS = 64
# n * 16 bytes must stay addressable and shifts of the form 64 - b must not
# degenerate, so index widths are capped well below the word size.
MAX_BITS = 48


def check_width(b: int) -> None:
    if not 1 <= b <= MAX_BITS:
        raise ValueError(f"bit width must be in 1..{MAX_BITS}, got {b}")


def _check_index(i: int, b: int) -> None:
    if not 0 <= i < (1 << b):
        raise ValueError(f"index {i} out of range for width {b}")


def rev_naive(i: int, b: int) -> int:
    """Reverse the low b bits of i, one bit per step.

    >>> rev_naive(1, 3)
    4
    >>> rev_naive(0b0110, 4)
    6
    >>> rev_naive(0, 17)
    0
    """
    check_width(b)
    _check_index(i, b)
    r = 0
    for _ in range(b):
        r = (r << 1) | (i & 1)
        i >>= 1
    return r


def build_byte_table() -> np.ndarray:
    """Build the 256-entry table mapping every byte to its bit reversal."""
    table = np.empty(256, dtype=np.uint8)
    for v in range(256):
        table[v] = rev_naive(v, 8)
    table.setflags(write=False)
    return table


BYTE_TABLE = build_byte_table()


def rev_bytetable(i: int, b: int, table: np.ndarray = BYTE_TABLE) -> int:
    """Reverse the low b bits of i via byte table lookups.

    The whole 64-bit word is reversed with eight lookups composed in
    swapped byte order, then shifted right by 64 - b.  Branch-free and
    constant in instruction count regardless of b.
    """
    check_width(b)
    _check_index(i, b)
    w = 0
    for k in range(8):
        w = (w << 8) | int(table[(i >> (8 * k)) & 0xFF])
    return w >> (WORD_BITS - b)


def count_leading_zeros(x: int) -> int:
    """Zero bits above the most significant set bit of a 64-bit word.

    Undefined for 0, mirroring the hardware operation.  CPython's
    int.bit_length is the constant-time path here; compiled kernels use
    the shift-and-test bisection in _clz64 instead.
    """
    if x == 0:
        raise ValueError("count_leading_zeros is undefined for 0")
    if x >> WORD_BITS:
        raise ValueError(f"{x:#x} does not fit in a 64-bit word")
    return WORD_BITS - x.bit_length()


class RevPair(NamedTuple):
    """An index travelling with its bit reversal."""

    index: int
    reversed: int


def xor_next(state: RevPair, b: int) -> RevPair:
    """Advance (index, rev(index)) to (index + 1, rev(index + 1)).

    index XOR (index + 1) is a solid block of ones anchored at bit 0, so
    its b-bit reversal is the same block shifted to the top of the frame.
    XORing that into the running reversed value flips exactly the bits
    that differ, with no per-bit reversal work.
    """
    check_width(b)
    index, rev = state
    if not 0 <= index < (1 << b) - 1:
        raise ValueError(f"index {index} cannot be advanced within width {b}")
    assert rev == rev_naive(index, b), "RevPair is inconsistent"
    diff = index ^ (index + 1)
    rev ^= diff << (b - diff.bit_length())
    return RevPair(index + 1, rev)


@njit(cache=True, nogil=True)
def _clz64(x):
    # Shift-and-test bisection over successively smaller halves; x != 0.
    n = 0
    if (x >> uint64(32)) == uint64(0):
        n += 32
        x = x << uint64(32)
    if (x >> uint64(48)) == uint64(0):
        n += 16
        x = x << uint64(16)
    if (x >> uint64(56)) == uint64(0):
        n += 8
        x = x << uint64(8)
    if (x >> uint64(60)) == uint64(0):
        n += 4
        x = x << uint64(4)
    if (x >> uint64(62)) == uint64(0):
        n += 2
        x = x << uint64(2)
    if (x >> uint64(63)) == uint64(0):
        n += 1
    return n
