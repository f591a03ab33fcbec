"""Loop-based bit-reversed permutation methods.

Six ways to put element i where element rev(i) was: the buffered even-odd
cascade (Stockham), plain index-reversal loops (bitwise and byte-table),
the XOR-increment walk that never reverses an index from scratch, the
per-bit-pair exchange, and the two matrix-buffer (COBRA) variants.  All
operate on 1-D numpy arrays of length 2**b and produce the identical
permutation; they differ only in how they touch memory.
"""

from dataclasses import dataclass, field

import numpy as np
from numba import njit, int64, uint64

from .bits import BYTE_TABLE, check_width, rev_naive, _clz64


def _check_array(array: np.ndarray, b: int, name: str = "array") -> None:
    check_width(b)
    if array.ndim != 1:
        raise ValueError(f"{name} must be 1-D")
    if array.shape[0] != (1 << b):
        raise ValueError(f"{name} length {array.shape[0]} does not match 2**{b}")


# ---------------------------------------------------------------------------
# Stockham: buffered even-odd passes over descending block sizes


@njit(cache=True, nogil=True)
def _stockham(a, scratch):
    n = a.shape[0]
    size = n
    while size >= 2:
        half = size >> 1
        for start in range(0, n, size):
            for j in range(half):
                scratch[j] = a[start + 2 * j]
                scratch[half + j] = a[start + 2 * j + 1]
            for j in range(size):
                a[start + j] = scratch[j]
        size = half


def stockham_permute(array: np.ndarray, b: int, scratch: np.ndarray | None = None) -> None:
    """Even-odd split every aligned block, from the whole array down to pairs.

    Performing the split for every level up front is what makes the result
    the full bit-reversed order rather than a single shuffle.  Needs a
    scratch buffer of the full array length.
    """
    _check_array(array, b)
    n = array.shape[0]
    if scratch is None:
        scratch = np.empty(n, dtype=array.dtype)
    elif scratch.shape[0] < n or scratch.dtype != array.dtype:
        raise ValueError(f"scratch must hold {n} elements of {array.dtype}")
    _stockham(array, scratch)


# ---------------------------------------------------------------------------
# Plain swap loops: reverse each index, swap once per unique pair


@njit(cache=True, nogil=True)
def _naive_bitwise(a, b):
    n = 1 << b
    for idx in range(1, n - 1):
        r = 0
        v = idx
        for _ in range(b):
            r = (r << 1) | (v & 1)
            v >>= 1
        if idx < r:
            tmp = a[idx]
            a[idx] = a[r]
            a[r] = tmp


def naive_bitwise_permute(array: np.ndarray, b: int) -> None:
    """Swap a[i] with a[rev(i)] whenever i < rev(i), reversing bit by bit.

    The comparison ensures each unique pair is swapped exactly once;
    indices 0 and n-1 are palindromes and are skipped outright.
    """
    _check_array(array, b)
    _naive_bitwise(array, b)


@njit(cache=True, nogil=True)
def _bytetable(a, b, table):
    n = 1 << b
    down = uint64(64 - b)
    for idx in range(1, n - 1):
        v = uint64(idx)
        w = uint64(0)
        for k in range(8):
            w = (w << uint64(8)) | uint64(table[(v >> uint64(8 * k)) & uint64(0xFF)])
        r = int64(w >> down)
        if idx < r:
            tmp = a[idx]
            a[idx] = a[r]
            a[r] = tmp


def bytetable_permute(array: np.ndarray, b: int, table: np.ndarray = BYTE_TABLE) -> None:
    """Same swap loop as the bitwise method, reversing a byte at a time."""
    _check_array(array, b)
    _bytetable(array, b, table)


# ---------------------------------------------------------------------------
# XOR walk: carry the reversed index along instead of recomputing it


@njit(cache=True, nogil=True)
def _xor_walk(a, b):
    n = int64(1) << int64(b)
    down = uint64(64 - b)
    idx = int64(0)
    rev = int64(0)
    while idx < n - 1:
        if idx < rev:
            tmp = a[idx]
            a[idx] = a[rev]
            a[rev] = tmp
        # idx ^ (idx + 1) is a block of ones at the bottom; shifted to the
        # top of the b-bit frame it is exactly the reversed difference.
        d = uint64(idx) ^ uint64(idx + 1)
        rev = int64(uint64(rev) ^ ((d << uint64(_clz64(d))) >> down))
        idx += 1


def xor_permute(array: np.ndarray, b: int) -> None:
    """Swap loop driven by the XOR-increment walk over (index, rev(index)).

    No index is ever reversed from scratch: each step flips only the bits
    that differ between consecutive reversed values, found with one
    count-leading-zeros.
    """
    _check_array(array, b)
    _xor_walk(array, b)


# ---------------------------------------------------------------------------
# Pair-bitwise: exchange one (low, high) bit position pair per pass


@njit(cache=True, nogil=True)
def _pair_bitwise(a, b):
    for k in range(b // 2):
        lo_bit = 1 << k
        hi_bit = 1 << (b - 1 - k)
        mask = lo_bit | hi_bit
        # Enumerate indices with the high bit set and the low bit clear;
        # free positions split into top k, middle b-2k-2, and low k bits.
        for top in range(1 << k):
            t = (top << (b - k)) | hi_bit
            for mid in range(1 << (b - 2 * k - 2)):
                start = t | (mid << (k + 1))
                for low in range(1 << k):
                    i = start | low
                    j = i ^ mask
                    tmp = a[i]
                    a[i] = a[j]
                    a[j] = tmp


def pair_bitwise_permute(array: np.ndarray, b: int) -> None:
    """Compose the permutation from per-pass exchanges of bit positions.

    Pass k swaps bit positions k and b-1-k of every index: each element
    whose high bit of the pair is set and low bit clear trades places with
    its partner.  floor(b/2) passes, n/4 swaps each, and the middle bit of
    odd widths never moves.  More swaps than the single-pass loops, but
    each pass walks memory far more locally.
    """
    _check_array(array, b)
    _pair_bitwise(array, b)


# ---------------------------------------------------------------------------
# COBRA: shuttle blocks through a cache-resident square buffer


@dataclass
class CobraConfig:
    """Block-bit parameter q for the matrix-buffer methods.

    The top and bottom q index bits address a 2**q x 2**q buffer (t =
    2**(2q) elements) that is meant to stay resident in L1/L2, so both
    row-major and column-major sweeps over it stay cheap.
    """

    q: int
    buffer: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.q < 0:
            raise ValueError(f"q must be >= 0, got {self.q}")

    @property
    def buffer_size(self) -> int:
        return 1 << (2 * self.q)

    def buffer_for(self, dtype) -> np.ndarray:
        t = self.buffer_size
        if self.buffer is None or self.buffer.dtype != dtype or self.buffer.shape[0] < t:
            self.buffer = np.empty(t, dtype=dtype)
        return self.buffer


def default_cobra_q(b: int) -> int:
    """Library default block width: at most 4096 buffer elements."""
    return min(b // 2, 6)


def _rev_table(q: int) -> np.ndarray:
    if q == 0:
        return np.zeros(1, dtype=np.int64)
    return np.array([rev_naive(x, q) for x in range(1 << q)], dtype=np.int64)


@njit(cache=True, nogil=True)
def _cobra_copy(src, dst, buf, b, q, rev_q):
    # index = x y z with q-bit x and z.  The buffer keeps one y slab,
    # rows permuted by rev(x) so the fill walks z contiguously and the
    # drain can emit destination runs contiguous in x.
    side = 1 << q
    mid = b - 2 * q
    hi_shift = b - q
    for y in range(1 << mid):
        ry = 0
        v = y
        for _ in range(mid):
            ry = (ry << 1) | (v & 1)
            v >>= 1
        y_base = y << q
        ry_base = ry << q
        for x in range(side):
            src_base = (x << hi_shift) | y_base
            buf_base = rev_q[x] << q
            for z in range(side):
                buf[buf_base + z] = src[src_base + z]
        for z in range(side):
            dst_base = (rev_q[z] << hi_shift) | ry_base
            for x in range(side):
                dst[dst_base + x] = buf[(x << q) + z]


@njit(cache=True, nogil=True)
def _cobra_swap(a, buf, b, q, rev_q):
    side = 1 << q
    mid = b - 2 * q
    hi_shift = b - q
    for y in range(1 << mid):
        ry = 0
        v = y
        for _ in range(mid):
            ry = (ry << 1) | (v & 1)
            v >>= 1
        if ry < y:
            continue  # each unordered slab pair is handled once, by the lower y
        y_base = y << q
        ry_base = ry << q
        # load the y slab, rows permuted by rev(x)
        for x in range(side):
            src_base = (x << hi_shift) | y_base
            buf_base = rev_q[x] << q
            for z in range(side):
                buf[buf_base + z] = a[src_base + z]
        # exchange buffer cells with their destinations in the rev(y) slab
        for z in range(side):
            dst_base = (rev_q[z] << hi_shift) | ry_base
            for x in range(side):
                tmp = a[dst_base + x]
                a[dst_base + x] = buf[(x << q) + z]
                buf[(x << q) + z] = tmp
        # displaced rev(y) data drops back into the y slab source slots
        for x in range(side):
            src_base = (x << hi_shift) | y_base
            buf_base = rev_q[x] << q
            for z in range(side):
                a[src_base + z] = buf[buf_base + z]


def _check_cobra(cfg: CobraConfig, b: int) -> None:
    if 2 * cfg.q > b:
        raise ValueError(f"block bits q={cfg.q} need 2q <= b, got b={b}")


def cobra_out_of_place(
    source: np.ndarray, dest: np.ndarray, cfg: CobraConfig, b: int
) -> None:
    """Copy source into dest in bit-reversed order through the buffer.

    For each middle value y, one buffer fill gathers the slab with rows
    permuted by rev(x), then one drain scatters it to rev(z), rev(y), x.
    Only the drain's slab base jumps; everything else is sequential or
    buffer-resident.  source is never written and dest never read.
    """
    _check_array(source, b, "source")
    _check_array(dest, b, "dest")
    if np.shares_memory(source, dest):
        raise ValueError("source and dest must not overlap")
    _check_cobra(cfg, b)
    _cobra_copy(source, dest, cfg.buffer_for(source.dtype), b, cfg.q, _rev_table(cfg.q))


def cobra_in_place(array: np.ndarray, cfg: CobraConfig, b: int) -> None:
    """Permute in place, swapping through the buffer instead of copying.

    Each unordered slab pair {y, rev(y)} is processed once: load the y
    slab, swap buffer cells with their destination slots in the rev(y)
    slab, then store the displaced data back into the y slab.  The third
    pass is the price of not having a separate destination array.
    """
    _check_array(array, b)
    _check_cobra(cfg, b)
    _cobra_swap(array, cfg.buffer_for(array.dtype), b, cfg.q, _rev_table(cfg.q))
