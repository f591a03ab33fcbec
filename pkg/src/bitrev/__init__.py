"""Bit-reversed permutation of power-of-two arrays.

Eight interchangeable methods with very different memory behaviour, the
index-reversal primitives underneath them, an oracle to judge them all,
and a benchmark harness that times them and writes CSV.
"""

from .bits import (
    BYTE_TABLE,
    MAX_BITS,
    RevPair,
    WORD_BITS,
    build_byte_table,
    count_leading_zeros,
    rev_bytetable,
    rev_naive,
    xor_next,
)
from .schedule import (
    SCHEDULE_MAX_BITS,
    SwapSchedule,
    apply_schedule,
    cached_schedule,
    generate_swap_schedule,
    load_schedule,
    save_schedule,
    swap_count,
)
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
    even_odd_permute,
    recursive_permute,
    semi_recursive_permute,
    transpose_square_inplace,
)
from .parallel import (
    ParallelConfig,
    chunk_ranges,
    parallel_semi_recursive_permute,
    resolve_threads,
    transpose_tiles,
)
from .verify import (
    EquivalenceReport,
    audit_swap_counts,
    check_method,
    oracle_permute,
    rev_index_array,
)
from .bench import (
    BenchConfig,
    BenchmarkRecord,
    CobraTuneResult,
    ELEMENT_KINDS,
    METHOD_IDS,
    make_method,
    read_csv,
    run_benchmark,
    tune_cobra,
    write_csv,
)

__version__ = "0.1.0"

__all__ = [
    "BYTE_TABLE",
    "BenchConfig",
    "BenchmarkRecord",
    "CobraConfig",
    "CobraTuneResult",
    "ELEMENT_KINDS",
    "EquivalenceReport",
    "MAX_BITS",
    "METHOD_IDS",
    "ParallelConfig",
    "RecursionPolicy",
    "RevPair",
    "SCHEDULE_MAX_BITS",
    "SwapSchedule",
    "WORD_BITS",
    "apply_schedule",
    "audit_swap_counts",
    "build_byte_table",
    "bytetable_permute",
    "cached_schedule",
    "check_method",
    "chunk_ranges",
    "cobra_in_place",
    "cobra_out_of_place",
    "count_leading_zeros",
    "default_cobra_q",
    "even_odd_permute",
    "generate_swap_schedule",
    "load_schedule",
    "make_method",
    "naive_bitwise_permute",
    "oracle_permute",
    "pair_bitwise_permute",
    "parallel_semi_recursive_permute",
    "read_csv",
    "recursive_permute",
    "resolve_threads",
    "rev_bytetable",
    "rev_index_array",
    "rev_naive",
    "run_benchmark",
    "save_schedule",
    "semi_recursive_permute",
    "stockham_permute",
    "swap_count",
    "transpose_square_inplace",
    "transpose_tiles",
    "tune_cobra",
    "write_csv",
    "xor_next",
    "xor_permute",
]
