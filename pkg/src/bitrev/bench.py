"""Benchmark harness: replicated timings per method and size, CSV out.

Protocol per (method, size): allocate once, prime with warmup runs (which
also absorb JIT compilation), then for each replicate refill the array
from a replicate-specific generator and time one permutation on the
monotonic clock.  Sizes below 12 bits loop the call enough times that a
sample spans at least a millisecond and divide; the loop count is kept
odd so in-place methods, being involutions, leave the array in permuted
state for the optional post-run oracle check.  Method order is shuffled
per size so no method consistently inherits another's cache state.
"""

import csv
import logging
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .bits import BYTE_TABLE, MAX_BITS
from .parallel import ParallelConfig, parallel_semi_recursive_permute
from .permutations import (
    CobraConfig,
    bytetable_permute,
    cobra_in_place,
    cobra_out_of_place,
    default_cobra_q,
    naive_bitwise_permute,
    pair_bitwise_permute,
    stockham_permute,
    xor_permute,
)
from .recursive import (
    RecursionPolicy,
    recursive_permute,
    semi_recursive_permute,
)
from .schedule import apply_schedule, cached_schedule, swap_count
from .verify import oracle_permute

log = logging.getLogger("bitrev.bench")

METHOD_IDS = (
    "stockham",
    "bitwise",
    "bytewise",
    "pair",
    "cobra",
    "cobra_inplace",
    "xor",
    "unrolled",
    "recursive",
    "semirecursive",
    "parallel",
)

ELEMENT_KINDS = {
    "pair": np.dtype(np.complex128),  # 16-byte two-component float cell
    "f8": np.dtype(np.float64),
    "f4": np.dtype(np.float32),
    "i8": np.dtype(np.int64),
}

_MIN_SAMPLE_S = 1e-3
_LOOPED_BELOW_BITS = 12


@dataclass
class BenchConfig:
    """Everything one benchmark invocation needs, validated before any run."""

    methods: tuple[str, ...] = METHOD_IDS
    b_min: int = 8
    b_max: int = 20
    replicates: int = 100
    warmup: int = 3
    element_kind: str = "pair"
    cobra_q: int | None = None  # None = library default per size
    tune_cobra_q: bool = False  # pick q by measurement per size instead
    base_bits: int = 9
    depth_limit: int = 1  # applies to semirecursive; recursive is unlimited
    threads: int = 0
    seed: int = 0
    verify: bool = False
    out: str | None = None
    unrolled_max_bits: int = 16
    memory_cap_bytes: int = 1 << 30


def validate_config(cfg: BenchConfig) -> None:
    if not cfg.methods:
        raise ValueError("no methods selected")
    unknown = [m for m in cfg.methods if m not in METHOD_IDS]
    if unknown:
        raise ValueError(f"unknown methods: {unknown}; choose from {METHOD_IDS}")
    if not 1 <= cfg.b_min <= cfg.b_max <= MAX_BITS:
        raise ValueError(f"need 1 <= b_min <= b_max <= {MAX_BITS}")
    if cfg.replicates < 1:
        raise ValueError("replicates must be >= 1")
    if cfg.warmup < 0:
        raise ValueError("warmup must be >= 0")
    if cfg.element_kind not in ELEMENT_KINDS:
        raise ValueError(f"unknown element kind {cfg.element_kind!r}")
    if cfg.cobra_q is not None and cfg.cobra_q < 0:
        raise ValueError("cobra_q must be >= 0")
    if cfg.memory_cap_bytes < 1:
        raise ValueError("memory_cap_bytes must be positive")
    RecursionPolicy(cfg.base_bits, cfg.depth_limit)  # reuse its validation


@dataclass
class BenchmarkRecord:
    """One timing observation for one method, size, and replicate."""

    method: str
    b: int
    replicate: int
    elapsed_s: float
    per_element_s: float

    @property
    def n(self) -> int:
        return 1 << self.b


def make_record(method: str, b: int, replicate: int, elapsed_s: float) -> BenchmarkRecord:
    return BenchmarkRecord(method, b, replicate, elapsed_s, elapsed_s / (1 << b))


class SkipMethod(Exception):
    """A (method, size) cell that cannot or should not run."""


def make_method(
    method: str,
    *,
    cobra_q: int | None = None,
    base_bits: int = 9,
    depth_limit: int = 1,
    threads: int = 0,
) -> Callable[[np.ndarray, int], np.ndarray | None]:
    """Uniform (array, b) adapter over every method id.

    In-place methods mutate the array and return None; out-of-place ones
    return the permuted copy.  Aux buffers are allocated per call, which
    is fine for verification and tests; the benchmark loop preallocates
    its own.
    """
    if method == "stockham":
        return lambda a, b: stockham_permute(a, b)
    if method == "bitwise":
        return lambda a, b: naive_bitwise_permute(a, b)
    if method == "bytewise":
        return lambda a, b: bytetable_permute(a, b)
    if method == "pair":
        return lambda a, b: pair_bitwise_permute(a, b)
    if method == "xor":
        return lambda a, b: xor_permute(a, b)
    if method == "unrolled":
        return lambda a, b: apply_schedule(a, cached_schedule(b))
    if method == "cobra":

        def run_cobra(a, b):
            dest = np.empty_like(a)
            q = default_cobra_q(b) if cobra_q is None else cobra_q
            cobra_out_of_place(a, dest, CobraConfig(q), b)
            return dest

        return run_cobra
    if method == "cobra_inplace":

        def run_cobra_ip(a, b):
            q = default_cobra_q(b) if cobra_q is None else cobra_q
            cobra_in_place(a, CobraConfig(q), b)

        return run_cobra_ip
    if method == "recursive":
        return lambda a, b: recursive_permute(a, b, RecursionPolicy(base_bits, None))
    if method == "semirecursive":
        return lambda a, b: semi_recursive_permute(a, b, base_bits, depth_limit)
    if method == "parallel":
        pcfg = ParallelConfig(threads=threads, base_bits=base_bits)
        return lambda a, b: parallel_semi_recursive_permute(a, b, pcfg)
    raise ValueError(f"unknown method {method!r}")


@dataclass
class _Prepared:
    array: np.ndarray
    run: Callable[[], None]
    result: Callable[[], np.ndarray]


def _odd_on_chain(b: int, base_bits: int, depth_limit: int | None) -> bool:
    depth = 0
    while b > base_bits and not (depth_limit is not None and depth >= depth_limit):
        if b & 1:
            return True
        b >>= 1
        depth += 1
    return False


def _prepare(method: str, b: int, cfg: BenchConfig, dtype: np.dtype) -> _Prepared:
    n = 1 << b
    esize = dtype.itemsize
    extra = 0
    if method == "stockham" or method == "cobra":
        extra = n * esize
    elif method == "unrolled":
        if b > cfg.unrolled_max_bits:
            raise SkipMethod(f"unrolled is capped at b={cfg.unrolled_max_bits}")
        extra = 16 * swap_count(b)
    estimate = n * esize + extra
    if estimate > cfg.memory_cap_bytes:
        raise SkipMethod(
            f"estimated {estimate / 2**20:.0f} MiB exceeds the "
            f"{cfg.memory_cap_bytes / 2**20:.0f} MiB cap"
        )
    try:
        array = np.empty(n, dtype=dtype)
    except MemoryError as e:
        raise SkipMethod(f"allocation failed: {e}") from e

    if method == "stockham":
        scratch = np.empty(n, dtype=dtype)
        return _Prepared(array, lambda: stockham_permute(array, b, scratch), lambda: array)
    if method == "bitwise":
        return _Prepared(array, lambda: naive_bitwise_permute(array, b), lambda: array)
    if method == "bytewise":
        return _Prepared(array, lambda: bytetable_permute(array, b, BYTE_TABLE), lambda: array)
    if method == "pair":
        return _Prepared(array, lambda: pair_bitwise_permute(array, b), lambda: array)
    if method == "xor":
        return _Prepared(array, lambda: xor_permute(array, b), lambda: array)
    if method == "unrolled":
        t0 = time.perf_counter()
        schedule = cached_schedule(b)
        dt = time.perf_counter() - t0
        log.info(
            "unrolled b=%d: swap schedule ready in %.3fs (%d pairs)",
            b, dt, len(schedule),
        )
        return _Prepared(array, lambda: apply_schedule(array, schedule), lambda: array)
    if method in ("cobra", "cobra_inplace"):
        q = _resolve_cobra_q(method, b, cfg)
        if 2 * q > b:
            raise SkipMethod(f"cobra q={q} needs 2q <= b")
        ccfg = CobraConfig(q)
        ccfg.buffer_for(dtype)
        if method == "cobra":
            dest = np.empty(n, dtype=dtype)
            return _Prepared(
                array, lambda: cobra_out_of_place(array, dest, ccfg, b), lambda: dest
            )
        return _Prepared(array, lambda: cobra_in_place(array, ccfg, b), lambda: array)
    if method in ("recursive", "semirecursive"):
        limit = None if method == "recursive" else cfg.depth_limit
        policy = RecursionPolicy(cfg.base_bits, limit)
        scratch = None
        if _odd_on_chain(b, cfg.base_bits, limit):
            scratch = np.empty(n // 2, dtype=dtype)
        return _Prepared(
            array,
            lambda: recursive_permute(array, b, policy, scratch),
            lambda: array,
        )
    if method == "parallel":
        pcfg = ParallelConfig(threads=cfg.threads, base_bits=cfg.base_bits)
        scratch = np.empty(n // 2, dtype=dtype) if b & 1 else None
        return _Prepared(
            array,
            lambda: parallel_semi_recursive_permute(array, b, pcfg, scratch),
            lambda: array,
        )
    raise ValueError(f"unknown method {method!r}")


def _resolve_cobra_q(method: str, b: int, cfg: BenchConfig) -> int:
    if cfg.cobra_q is not None:
        return cfg.cobra_q
    if cfg.tune_cobra_q:
        # buffers beyond 2**16 elements stop being cache-resident anywhere
        candidates = list(range(0, min(b // 2, 8) + 1))
        result = tune_cobra(
            b,
            candidates,
            replicates=3,
            element_kind=cfg.element_kind,
            seed=cfg.seed,
            variant=method,
        )
        log.info("%s b=%d: tuned q=%d", method, b, result.best_q)
        return result.best_q
    return default_cobra_q(b)


def _fill(array: np.ndarray, seed: int, method: str, b: int, replicate: int) -> None:
    ss = np.random.SeedSequence([seed, METHOD_IDS.index(method), b, replicate + 1])
    rng = np.random.default_rng(ss)
    n = array.shape[0]
    if array.dtype.kind == "c":
        array.real = rng.standard_normal(n)
        array.imag = rng.standard_normal(n)
    elif array.dtype.kind == "f":
        array[:] = rng.standard_normal(n, dtype=array.dtype)
    else:
        array[:] = rng.integers(0, 1 << 62, n, dtype=array.dtype)


def _calibrate(prep: _Prepared, b: int) -> int:
    if b >= _LOOPED_BELOW_BITS:
        return 1
    t0 = time.perf_counter()
    prep.run()
    dt = time.perf_counter() - t0
    k = int(np.ceil(_MIN_SAMPLE_S / max(dt, 1e-8)))
    k = min(k, 100001)
    return k if k % 2 else k + 1


def run_benchmark(cfg: BenchConfig) -> list[BenchmarkRecord]:
    """Run the configured grid and return one record per replicate.

    Unrunnable (method, size) cells are skipped with a logged notice and
    contribute no records.  With cfg.verify set, the state left by the
    final replicate of every cell is compared against the oracle and a
    RuntimeError raised on any difference.
    """
    validate_config(cfg)
    dtype = ELEMENT_KINDS[cfg.element_kind]
    order_rng = np.random.default_rng(cfg.seed)
    records: list[BenchmarkRecord] = []
    for b in range(cfg.b_min, cfg.b_max + 1):
        methods = list(cfg.methods)
        order_rng.shuffle(methods)
        for method in methods:
            try:
                prep = _prepare(method, b, cfg, dtype)
            except SkipMethod as skip:
                log.warning("skipping %s at b=%d: %s", method, b, skip)
                continue
            _fill(prep.array, cfg.seed, method, b, -1)
            for _ in range(cfg.warmup):
                prep.run()
            k = _calibrate(prep, b)
            for rep in range(cfg.replicates):
                _fill(prep.array, cfg.seed, method, b, rep)
                t0 = time.perf_counter_ns()
                for _ in range(k):
                    prep.run()
                elapsed = (time.perf_counter_ns() - t0) / k / 1e9
                records.append(make_record(method, b, rep, elapsed))
            if cfg.verify:
                _verify_cell(prep, method, b, cfg)
    return records


def _verify_cell(prep: _Prepared, method: str, b: int, cfg: BenchConfig) -> None:
    reference = np.empty_like(prep.array)
    _fill(reference, cfg.seed, method, b, cfg.replicates - 1)
    expected = oracle_permute(reference, b)
    if not np.array_equal(prep.result(), expected):
        raise RuntimeError(f"{method} at b={b} left a non-permuted array")
    log.info("verified %s at b=%d against the oracle", method, b)


@dataclass
class CobraTuneResult:
    """Per-candidate timing table and the winning block width."""

    b: int
    variant: str
    best_q: int
    means: dict[int, float]
    records: list[BenchmarkRecord] = field(default_factory=list)


def tune_cobra(
    b: int,
    q_candidates,
    replicates: int = 5,
    element_kind: str = "pair",
    seed: int = 0,
    variant: str = "cobra",
) -> CobraTuneResult:
    """Time each candidate buffer width and pick the fastest mean.

    The per-candidate rows are regular benchmark records (method id
    "cobra_q<q>" or "cobra_inplace_q<q>") so the table can go straight to
    CSV.  Ties break toward the smaller buffer.
    """
    q_candidates = list(q_candidates)
    if not q_candidates:
        raise ValueError("q_candidates must not be empty")
    bad = [q for q in q_candidates if q < 0 or 2 * q > b]
    if bad:
        raise ValueError(f"candidates {bad} violate 0 <= 2q <= b for b={b}")
    if variant not in ("cobra", "cobra_inplace"):
        raise ValueError(f"variant must be cobra or cobra_inplace, not {variant!r}")
    if replicates < 1:
        raise ValueError("replicates must be >= 1")

    dtype = ELEMENT_KINDS[element_kind]
    n = 1 << b
    array = np.empty(n, dtype=dtype)
    dest = np.empty(n, dtype=dtype) if variant == "cobra" else None
    result = CobraTuneResult(b, variant, -1, {})
    for q in q_candidates:
        ccfg = CobraConfig(q)
        ccfg.buffer_for(dtype)
        if variant == "cobra":
            run = lambda: cobra_out_of_place(array, dest, ccfg, b)
        else:
            run = lambda: cobra_in_place(array, ccfg, b)
        _fill(array, seed, variant, b, -1)
        run()
        prep = _Prepared(array, run, lambda: array)
        k = _calibrate(prep, b)
        label = f"{variant}_q{q}"
        samples = []
        for rep in range(replicates):
            _fill(array, seed, variant, b, rep)
            t0 = time.perf_counter_ns()
            for _ in range(k):
                run()
            elapsed = (time.perf_counter_ns() - t0) / k / 1e9
            samples.append(elapsed)
            result.records.append(make_record(label, b, rep, elapsed))
        result.means[q] = sum(samples) / len(samples)
    result.best_q = min(result.means, key=lambda q: (result.means[q], q))
    return result


CSV_HEADER = ("method", "b", "n", "replicate", "elapsed_s", "per_element_s")


def write_csv(records: list[BenchmarkRecord], path) -> None:
    """Emit the record table; floats use repr so parsing them back is exact."""
    try:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            for r in records:
                writer.writerow(
                    [r.method, r.b, r.n, r.replicate, repr(r.elapsed_s), repr(r.per_element_s)]
                )
    except OSError as e:
        raise OSError(f"cannot write CSV to {path}: {e}") from e


def read_csv(path) -> list[BenchmarkRecord]:
    records = []
    try:
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = tuple(next(reader, ()))
            if header != CSV_HEADER:
                raise ValueError(f"{path}: unexpected header {header!r}")
            for lineno, row in enumerate(reader, start=2):
                if len(row) != len(CSV_HEADER):
                    raise ValueError(f"{path}:{lineno}: expected {len(CSV_HEADER)} fields")
                method, b, n, replicate, elapsed, per_element = row
                record = BenchmarkRecord(
                    method, int(b), int(replicate), float(elapsed), float(per_element)
                )
                if record.n != int(n):
                    raise ValueError(f"{path}:{lineno}: n={n} does not match 2**{b}")
                records.append(record)
    except OSError as e:
        raise OSError(f"cannot read CSV from {path}: {e}") from e
    return records
