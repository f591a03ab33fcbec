"""Threaded variant of the depth-limited recursive permutation.

After one subdivision every piece of work touches a disjoint index range:
block sub-permutations, transpose tiles, then the second block batch.
Each phase is distributed over a thread pool and joined before the next
starts.  The compiled kernels release the GIL, so plain threads give real
parallelism.  Results are identical to the sequential method regardless
of thread count because no two work items ever write the same index.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .bits import check_width
from .recursive import (
    TRANSPOSE_LEAF,
    _ensure_scratch,
    _even_odd,
    _run,
    _transpose_diag,
    _transpose_offdiag,
    RecursionPolicy,
)
from .schedule import _apply_pairs_blocks, cached_schedule

THREADS_ENV = "BITREV_THREADS"


@dataclass
class ParallelConfig:
    """Worker count and base-case policy; the depth limit stays at 1."""

    threads: int = 0  # 0 = BITREV_THREADS, else CPU count
    base_bits: int = 9
    depth_limit: int = 1

    def __post_init__(self):
        if self.threads < 0:
            raise ValueError("threads must be >= 0")
        if self.depth_limit != 1:
            raise ValueError("the parallel variant is defined for depth_limit=1")


def resolve_threads(requested: int = 0) -> int:
    """Explicit request wins; otherwise BITREV_THREADS, otherwise CPU count."""
    if requested > 0:
        return requested
    env = os.environ.get(THREADS_ENV)
    if env:
        value = int(env)
        if value < 1:
            raise ValueError(f"{THREADS_ENV} must be >= 1, got {env}")
        return value
    return os.cpu_count() or 1


def chunk_ranges(count: int, workers: int) -> list[tuple[int, int]]:
    """Split range(count) into at most `workers` contiguous chunks."""
    if count <= 0:
        return []
    workers = max(1, min(workers, count))
    step = -(-count // workers)
    return [(lo, min(lo + step, count)) for lo in range(0, count, step)]


def transpose_tiles(h: int, bands: int = 8) -> list[tuple[str, int, int, int]]:
    """Disjoint tile items covering the 2**h square transposition.

    Diagonal tiles are transposed alone; mirrored off-diagonal tiles are
    exchanged jointly, so every item owns its index ranges outright.
    """
    side = 1 << h
    if side <= TRANSPOSE_LEAF or side < bands:
        return [("diag", 0, 0, side)]
    tile = side // bands
    items = []
    for i in range(bands):
        items.append(("diag", i * tile, i * tile, tile))
        for j in range(i + 1, bands):
            items.append(("offdiag", i * tile, j * tile, tile))
    return items


def _run_tile(view, side, item):
    kind, r0, c0, size = item
    if kind == "diag":
        _transpose_diag(view, side, r0, size)
    else:
        _transpose_offdiag(view, side, r0, c0, size)


def parallel_semi_recursive_permute(
    array: np.ndarray,
    b: int,
    cfg: ParallelConfig | None = None,
    scratch: np.ndarray | None = None,
) -> None:
    """Permute with block batches and transpose tiles spread over threads.

    Even widths run three barrier-separated phases: the 2**(b/2) block
    sub-permutations (each a swap-schedule replay) chunked over workers,
    the transposition as disjoint tile items, and the second block batch.
    Odd widths run the even-odd pass single-threaded, then hand each
    width b-1 half to its own worker.
    """
    check_width(b)
    if array.ndim != 1 or array.shape[0] != (1 << b):
        raise ValueError(f"array length {array.shape[0]} does not match 2**{b}")
    cfg = cfg or ParallelConfig()
    workers = resolve_threads(cfg.threads)
    policy = RecursionPolicy(cfg.base_bits, cfg.depth_limit)

    if b <= cfg.base_bits:
        _run(array, 0, b, 0, policy, scratch, None)
        return

    n = array.shape[0]
    if b & 1:
        half = n >> 1
        scratch = _ensure_scratch(scratch, half, array.dtype)
        _even_odd(array, scratch[:half])
        quarter = half >> 1
        jobs = [
            (array[:half], scratch[:quarter]),
            (array[half:], scratch[quarter : 2 * quarter]),
        ]
        with ThreadPoolExecutor(max_workers=min(workers, 2)) as pool:
            futures = [
                pool.submit(_run, view, 0, b - 1, 1, policy, sub, None)
                for view, sub in jobs
            ]
            for f in futures:
                f.result()
        return

    h = b >> 1
    m = 1 << h
    pairs = cached_schedule(h).pairs
    block_chunks = chunk_ranges(m, workers)
    tiles = transpose_tiles(h)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for phase in ("blocks", "tiles", "blocks"):
            if phase == "blocks":
                futures = [
                    pool.submit(_apply_pairs_blocks, array, pairs, m, lo, hi)
                    for lo, hi in block_chunks
                ]
            else:
                futures = [
                    pool.submit(_run_tile, array, m, item) for item in tiles
                ]
            for f in futures:
                f.result()
