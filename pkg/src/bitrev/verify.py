"""Ground truth and equivalence checking for the permutation methods.

The oracle builds the full reversed-index table with vectorized shifts and
gathers through it, sharing no code with the swap loops it is used to
judge.  Checks run on sentinel arrays whose value equals their index, so
any misplaced element names both the source and destination of the fault.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from .bits import MAX_BITS
from .schedule import SCHEDULE_MAX_BITS, generate_swap_schedule, swap_count


@lru_cache(maxsize=64)
def rev_index_array(b: int) -> np.ndarray:
    """All reversed indices for width b, one vectorized shift pass per bit."""
    if not 0 <= b <= MAX_BITS:
        raise ValueError(f"width must be in 0..{MAX_BITS}, got {b}")
    idx = np.arange(1 << b, dtype=np.uint64)
    out = np.zeros(1 << b, dtype=np.uint64)
    for _ in range(b):
        out = (out << np.uint64(1)) | (idx & np.uint64(1))
        idx = idx >> np.uint64(1)
    out = out.astype(np.int64)
    out.setflags(write=False)
    return out


def oracle_permute(source: np.ndarray, b: int) -> np.ndarray:
    """Out-of-place reference permutation: slot i receives source[rev(i)]."""
    source = np.asarray(source)
    if source.shape[0] != (1 << b):
        raise ValueError(f"source length {source.shape[0]} does not match 2**{b}")
    return source[rev_index_array(b)]


@dataclass
class Mismatch:
    b: int
    trial: int
    indices: list[int]  # first few offending positions


@dataclass
class EquivalenceReport:
    """Outcome of comparing one method against the oracle over a width range."""

    method: str
    b_max: int
    trials: int
    seed: int
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        state = "ok" if self.passed else f"{len(self.mismatches)} mismatching runs"
        return f"{self.method}: b=1..{self.b_max} x{self.trials}: {state}"


def check_method(
    method: Callable[[np.ndarray, int], np.ndarray | None],
    b_max: int,
    trials: int = 1,
    seed: int = 0,
    name: str | None = None,
) -> EquivalenceReport:
    """Diff a method against the oracle on value-equals-index sentinels.

    The callable receives (array, b); in-place methods mutate and may
    return None, out-of-place ones return the permuted copy.  Failures
    are collected in the report, not raised.  Repeating trials is only
    interesting for methods with internal scheduling freedom; the fill is
    the same each time.
    """
    if name is None:
        name = getattr(method, "__name__", repr(method))
    report = EquivalenceReport(name, b_max, trials, seed)
    for b in range(1, b_max + 1):
        n = 1 << b
        expected = oracle_permute(np.arange(n, dtype=np.int64), b)
        for trial in range(trials):
            a = np.arange(n, dtype=np.int64)
            out = method(a, b)
            result = a if out is None else out
            bad = np.nonzero(result != expected)[0]
            if bad.size:
                report.mismatches.append(Mismatch(b, trial, bad[:8].tolist()))
    return report


def audit_swap_counts(b_max: int) -> dict[int, bool]:
    """Check schedule sizes against the recurrence and a direct count.

    For each width up to b_max the generated pair list, the recurrence
    value, and the number of indices strictly below their reversal must
    all agree.
    """
    if not 1 <= b_max <= SCHEDULE_MAX_BITS:
        raise ValueError(f"b_max must be in 1..{SCHEDULE_MAX_BITS}")
    results = {}
    for b in range(1, b_max + 1):
        brute = int(np.count_nonzero(np.arange(1 << b, dtype=np.int64) < rev_index_array(b)))
        generated = len(generate_swap_schedule(b))
        results[b] = generated == swap_count(b) == brute
    return results
