"""Swap schedules: explicit pair lists that realize the permutation.

A schedule for width b holds every index pair (i, rev(i)) with i < rev(i).
Swapping the listed pairs, in any order, performs the bit-reversed
permutation; doing it twice restores the array.  Generation walks the
index space from both ends inward, pruning whole subtrees where the
comparison against the reversal is already decided, so no index is ever
reversed and compared individually.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numba import njit

# A 26-bit schedule is ~2^25 pairs of two 8-byte words (512 MiB); beyond
# that the pair list stops being a sensible in-memory artifact.
SCHEDULE_MAX_BITS = 26
SCHEDULE_MAGIC = b"BRSCHD01"


def swap_count(b: int) -> int:
    """Number of pairs with i < rev(i) for width b.

    Follows the two-bits-smaller recurrence r(b) = 2**(b-2) + 2*r(b-2)
    with r(1) = 0 and r(2) = 1, which closes to
    (2**b - 2**ceil(b/2)) // 2: everything except the palindromic fixed
    points, halved.
    """
    if b < 1:
        raise ValueError(f"width must be >= 1, got {b}")
    if b <= 2:
        return b - 1
    return (1 << (b - 2)) + 2 * swap_count(b - 2)


@dataclass(frozen=True)
class SwapSchedule:
    """Width plus the (count, 2) int64 array of (lo, hi) index pairs."""

    b: int
    pairs: np.ndarray

    def __post_init__(self):
        if self.pairs.ndim != 2 or self.pairs.shape[1] != 2:
            raise ValueError("pairs must have shape (count, 2)")

    def __len__(self) -> int:
        return len(self.pairs)


@njit(cache=True, nogil=True)
def _fill_pairs(base, depth, b, out, pos):
    # Fix one more (top, bottom) bit pair per level.  Equal pairs defer
    # the index-versus-reversal comparison inward; top 0 with bottom 1
    # decides it in favour of every middle value; top 1 with bottom 0 can
    # never yield i < rev(i).  base carries the symmetric outer bits.
    rem = b - 2 * depth
    if rem < 2:
        return pos
    pos = _fill_pairs(base, depth + 1, b, out, pos)
    mid = rem - 2
    lo_bit = 1 << depth
    hi_bit = 1 << (b - 1 - depth)
    for x in range(1 << mid):
        rx = 0
        v = x
        for _ in range(mid):
            rx = (rx << 1) | (v & 1)
            v >>= 1
        out[pos, 0] = base | (x << (depth + 1)) | lo_bit
        out[pos, 1] = base | (rx << (depth + 1)) | hi_bit
        pos += 1
    return _fill_pairs(base | lo_bit | hi_bit, depth + 1, b, out, pos)


def generate_swap_schedule(b: int, max_bits: int = SCHEDULE_MAX_BITS) -> SwapSchedule:
    """Enumerate all (i, rev(i)) pairs with i < rev(i) for width b.

    Emission order is deterministic: depth first with the 0-prefix branch
    before the 1-prefix branch, middle values ascending within each
    emitting branch.
    """
    if not 1 <= b <= max_bits:
        raise ValueError(f"schedule width must be in 1..{max_bits}, got {b}")
    pairs = np.empty((swap_count(b), 2), dtype=np.int64)
    filled = _fill_pairs(0, 0, b, pairs, 0)
    assert filled == len(pairs), "pair count diverged from the counting law"
    pairs.setflags(write=False)
    return SwapSchedule(b, pairs)


@lru_cache(maxsize=None)
def cached_schedule(b: int) -> SwapSchedule:
    """Shared read-only schedule, generated once per width."""
    return generate_swap_schedule(b)


@njit(cache=True, nogil=True)
def _apply_pairs(a, pairs):
    for k in range(pairs.shape[0]):
        i = pairs[k, 0]
        j = pairs[k, 1]
        tmp = a[i]
        a[i] = a[j]
        a[j] = tmp


@njit(cache=True, nogil=True)
def _apply_pairs_blocks(a, pairs, block_len, blk_lo, blk_hi):
    # Same schedule replayed at each block offset; used where a batch of
    # equal-sized sub-permutations would otherwise be dispatched one by one.
    for blk in range(blk_lo, blk_hi):
        off = blk * block_len
        for k in range(pairs.shape[0]):
            i = off + pairs[k, 0]
            j = off + pairs[k, 1]
            tmp = a[i]
            a[i] = a[j]
            a[j] = tmp


def apply_schedule(array: np.ndarray, schedule: SwapSchedule) -> None:
    """Swap every scheduled pair in place."""
    if array.shape[0] != (1 << schedule.b):
        raise ValueError(
            f"array length {array.shape[0]} does not match 2**{schedule.b}"
        )
    _apply_pairs(array, schedule.pairs)


def save_schedule(schedule: SwapSchedule, path) -> None:
    """Write magic, the width byte, then the pair stream as little-endian u64."""
    with open(path, "wb") as fh:
        fh.write(SCHEDULE_MAGIC)
        fh.write(bytes([schedule.b]))
        fh.write(schedule.pairs.astype("<u8").tobytes())


def load_schedule(path) -> SwapSchedule:
    with open(path, "rb") as fh:
        magic = fh.read(8)
        if magic != SCHEDULE_MAGIC:
            raise ValueError(f"{path}: bad magic {magic!r}")
        width = fh.read(1)
        if not width:
            raise ValueError(f"{path}: truncated header")
        b = width[0]
        raw = fh.read()
    pairs = np.frombuffer(raw, dtype="<u8").astype(np.int64)
    if pairs.size != 2 * swap_count(b):
        raise ValueError(
            f"{path}: expected {swap_count(b)} pairs for width {b}, "
            f"found {pairs.size // 2}"
        )
    pairs = pairs.reshape(-1, 2)
    pairs.setflags(write=False)
    return SwapSchedule(b, pairs)
