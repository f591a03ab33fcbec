"""Cache-oblivious bit-reversed permutation by recursive halving.

An even-width index splits as (hi, lo) with h = b/2 bits each; reversing
both halves locally and then exchanging them is the whole reversal.
Exchanging the halves is a transposition of the 2**h x 2**h row-major
matrix laid over the array, done in place by quadrant subdivision.  Odd
widths peel off one even-odd pass first, which costs an n/2 scratch
buffer.  No block size is tuned anywhere: locality comes from the
subdivision itself.
"""

from dataclasses import dataclass

import numpy as np
from numba import njit

from .bits import check_width
from .schedule import (
    SCHEDULE_MAX_BITS,
    _apply_pairs,
    _apply_pairs_blocks,
    cached_schedule,
)

# Large enough to amortize recursion overhead, small enough that a tile
# pair (two 8x8 blocks of 16-byte elements) sits comfortably in L1.
TRANSPOSE_LEAF = 8


@njit(cache=True, nogil=True)
def _transpose_offdiag(a, row_len, r0, c0, size):
    # Swap-transpose the mirrored blocks at (r0, c0) and (c0, r0) jointly.
    if size <= TRANSPOSE_LEAF:
        for i in range(size):
            for j in range(size):
                p = (r0 + i) * row_len + c0 + j
                s = (c0 + j) * row_len + r0 + i
                tmp = a[p]
                a[p] = a[s]
                a[s] = tmp
        return
    h = size >> 1
    _transpose_offdiag(a, row_len, r0, c0, h)
    _transpose_offdiag(a, row_len, r0, c0 + h, h)
    _transpose_offdiag(a, row_len, r0 + h, c0, h)
    _transpose_offdiag(a, row_len, r0 + h, c0 + h, h)


@njit(cache=True, nogil=True)
def _transpose_diag(a, row_len, r0, size):
    # On-diagonal block: recurse on both diagonal quadrants, swap the pair.
    if size <= TRANSPOSE_LEAF:
        for i in range(size):
            for j in range(i + 1, size):
                p = (r0 + i) * row_len + r0 + j
                s = (r0 + j) * row_len + r0 + i
                tmp = a[p]
                a[p] = a[s]
                a[s] = tmp
        return
    h = size >> 1
    _transpose_diag(a, row_len, r0, h)
    _transpose_diag(a, row_len, r0 + h, h)
    _transpose_offdiag(a, row_len, r0, r0 + h, h)


def transpose_square_inplace(region: np.ndarray, h: int) -> None:
    """Transpose the 2**h x 2**h row-major matrix stored flat in region.

    Rows are the high h index bits, columns the low h.  Quadrant
    subdivision keeps every working set shrinking geometrically until the
    direct-loop leaf tile.
    """
    if h < 0:
        raise ValueError(f"h must be >= 0, got {h}")
    if region.ndim != 1 or region.shape[0] != (1 << (2 * h)):
        raise ValueError(f"region length {region.shape[0]} does not match 4**{h}")
    if h == 0:
        return
    side = 1 << h
    _transpose_diag(region, side, 0, side)


@njit(cache=True, nogil=True)
def _even_odd(a, scratch):
    n = a.shape[0]
    half = n >> 1
    for j in range(half):
        scratch[j] = a[2 * j + 1]
    for j in range(half):
        a[j] = a[2 * j]
    for j in range(half):
        a[half + j] = scratch[j]


def even_odd_permute(array: np.ndarray, b: int, scratch: np.ndarray | None = None) -> None:
    """Evens to the bottom half, odds to the top, keeping relative order.

    Odds are parked in the n/2 scratch buffer, evens compact in place
    left to right, then the scratch contents become the top half.
    """
    check_width(b)
    if array.ndim != 1 or array.shape[0] != (1 << b):
        raise ValueError(f"array length {array.shape[0]} does not match 2**{b}")
    half = array.shape[0] >> 1
    scratch = _ensure_scratch(scratch, half, array.dtype)
    _even_odd(array, scratch[:half])


def _ensure_scratch(scratch, needed, dtype):
    if scratch is None:
        return np.empty(needed, dtype=dtype)
    if scratch.shape[0] < needed:
        raise ValueError(f"scratch holds {scratch.shape[0]} elements, need {needed}")
    if scratch.dtype != dtype:
        raise ValueError(f"scratch dtype {scratch.dtype} does not match {dtype}")
    return scratch


@dataclass
class RecursionPolicy:
    """When to stop subdividing and run the precomputed swap schedule.

    base_bits is the width at or below which the schedule runs.  A
    depth_limit forces the schedule path once that many subdivisions have
    happened, regardless of width; None means subdivide all the way down.
    """

    base_bits: int = 9
    depth_limit: int | None = None

    def __post_init__(self):
        if not 1 <= self.base_bits <= SCHEDULE_MAX_BITS:
            raise ValueError(f"base_bits must be in 1..{SCHEDULE_MAX_BITS}")
        if self.depth_limit is not None and self.depth_limit < 1:
            raise ValueError("depth_limit must be >= 1 when set")


def _hits_base(bb: int, depth: int, policy: RecursionPolicy) -> bool:
    if bb <= policy.base_bits:
        return True
    # The depth limit can only force the schedule path for widths a
    # schedule can actually be generated for; wider problems keep
    # subdividing until they fit.
    return (
        policy.depth_limit is not None
        and depth >= policy.depth_limit
        and bb <= SCHEDULE_MAX_BITS
    )


def _run(a, off, bb, depth, policy, scratch, trace):
    n = 1 << bb
    if _hits_base(bb, depth, policy):
        if trace is not None:
            trace.append(("base", off, bb))
        _apply_pairs(a[off : off + n], cached_schedule(bb).pairs)
        return
    nxt = depth + 1
    if bb & 1:
        half = n >> 1
        if trace is not None:
            trace.append(("even_odd", off, bb))
        scratch = _ensure_scratch(scratch, half, a.dtype)
        _even_odd(a[off : off + n], scratch[:half])
        _run(a, off, bb - 1, nxt, policy, scratch, trace)
        _run(a, off + half, bb - 1, nxt, policy, scratch, trace)
        return
    h = bb >> 1
    m = 1 << h
    if trace is None and _hits_base(h, nxt, policy):
        # Whole batch of equal-width base cases: replay the schedule over
        # all blocks in one pass instead of dispatching per block.
        pairs = cached_schedule(h).pairs
        view = a[off : off + n]
        _apply_pairs_blocks(view, pairs, m, 0, m)
        _transpose_diag(view, m, 0, m)
        _apply_pairs_blocks(view, pairs, m, 0, m)
        return
    for blk in range(m):
        _run(a, off + blk * m, h, nxt, policy, scratch, trace)
    if trace is not None:
        trace.append(("transpose", off, h))
    _transpose_diag(a[off : off + n], m, 0, m)
    for blk in range(m):
        _run(a, off + blk * m, h, nxt, policy, scratch, trace)


def recursive_permute(
    array: np.ndarray,
    b: int,
    policy: RecursionPolicy | None = None,
    scratch: np.ndarray | None = None,
    trace: list | None = None,
) -> None:
    """Permute by subdividing into half-width sub-permutations.

    Even widths become 2**(b/2) contiguous block sub-permutations, the
    square transposition, and a second block batch.  Odd widths run one
    even-odd pass and recurse on both halves with width b-1.  At or below
    policy.base_bits (or past policy.depth_limit) the swap schedule takes
    over.  scratch of n/2 elements is needed only when an odd width
    occurs anywhere along the chain; it is allocated on the fly when not
    supplied.

    trace, when given, collects ("base" | "even_odd" | "transpose",
    offset, width) events in execution order; intended for structural
    tests, and disables the batched base-case fast path.
    """
    check_width(b)
    if array.ndim != 1 or array.shape[0] != (1 << b):
        raise ValueError(f"array length {array.shape[0]} does not match 2**{b}")
    _run(array, 0, b, 0, policy or RecursionPolicy(), scratch, trace)


def semi_recursive_permute(
    array: np.ndarray,
    b: int,
    base_bits: int = 9,
    depth_limit: int = 1,
    scratch: np.ndarray | None = None,
) -> None:
    """Depth-limited recursion: fewer, flatter passes at some locality cost.

    depth_limit=1 sends every sub-permutation straight to the swap
    schedule after the first subdivision.
    """
    recursive_permute(array, b, RecursionPolicy(base_bits, depth_limit), scratch)
