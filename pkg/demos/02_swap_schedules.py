#!/usr/bin/env python3
# Swap schedules: precompute every (i, rev(i)) pair with i < rev(i),
# then the whole permutation is just a replay of pairwise swaps.

import tempfile
from pathlib import Path

import numpy as np

import bitrev as br

for b in (1, 2, 3, 4):
    schedule = br.generate_swap_schedule(b)
    print(f"b={b}: {len(schedule)} swaps  {[tuple(p) for p in schedule.pairs.tolist()]}")
print()

# The pair count obeys r(b) = 2**(b-2) + 2*r(b-2) with r(1)=0, r(2)=1,
# which closes to (2**b - 2**ceil(b/2)) / 2: all indices except the
# palindromes, halved.  The generator, the recurrence, and a brute count
# must agree; audit_swap_counts checks all three at once.
print("width  pairs      palindromes")
for b in (4, 8, 12, 16, 20):
    print(f"  {b:2d}   {br.swap_count(b):8d}   {(1 << b) - 2 * br.swap_count(b):6d}")
print("audit b=1..20:", "ok" if all(br.audit_swap_counts(20).values()) else "FAIL")
print()

# Applying a schedule permutes; applying it again un-permutes.
a = np.arange(8, dtype=np.int64)
schedule = br.cached_schedule(3)
br.apply_schedule(a, schedule)
print("applied once: ", a.tolist())
br.apply_schedule(a, schedule)
print("applied twice:", a.tolist())
print()

# Schedules serialize to a small binary format for caching.
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "b12.sched"
    br.save_schedule(br.generate_swap_schedule(12), path)
    loaded = br.load_schedule(path)
    print(f"round-trip through {path.name}: b={loaded.b}, "
          f"{len(loaded)} pairs, {path.stat().st_size} bytes")
