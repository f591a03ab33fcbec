#!/usr/bin/env python3
# Anatomy of the recursive method: half-width sub-permutations around an
# in-place square transposition, and the threaded variant built on it.

import numpy as np

import bitrev as br

# The index (hi, lo) split makes the exchange of halves a matrix
# transposition: rows are the high bits, columns the low bits.
h = 2
side = 1 << h
m = np.arange(side * side, dtype=np.int64)
print("4x4 region before:")
print(m.reshape(side, side))
br.transpose_square_inplace(m, h)
print("after transpose_square_inplace:")
print(m.reshape(side, side))
print()

# Odd widths first peel one even-odd pass (evens down, odds up).
a = np.arange(8, dtype=np.int64)
br.even_odd_permute(a, 3)
print("even-odd pass on [0..7]:", a.tolist())
print()

# The trace shows the recursion plan: block batches around a transpose
# for even widths, an even-odd pass plus two halves for odd ones.
b = 12
trace = []
data = np.random.default_rng(1).standard_normal(1 << b)
br.recursive_permute(data.copy(), b, br.RecursionPolicy(base_bits=4, depth_limit=1),
                     trace=trace)
kinds = [kind for kind, _, _ in trace]
print(f"b={b}, depth_limit=1 plan: {kinds.count('base')} schedule replays "
      f"of width {b // 2}, {kinds.count('transpose')} transposition")
print("first events:", trace[:3], "...")
print()

# Same permutation whatever the policy; depth limits only change the plan.
expected = br.oracle_permute(data, b)
for policy in (br.RecursionPolicy(9), br.RecursionPolicy(1),
               br.RecursionPolicy(9, depth_limit=1)):
    work = data.copy()
    br.recursive_permute(work, b, policy)
    assert np.array_equal(work, expected)
print("output independent of base_bits and depth_limit: True")
print()

# The block batches and transpose tiles are data-disjoint, which is what
# the threaded variant exploits; any thread count gives the same bytes.
b = 16
data = np.random.default_rng(2).standard_normal(1 << b)
reference = None
for threads in (1, 2, 4):
    work = data.copy()
    br.parallel_semi_recursive_permute(work, b, br.ParallelConfig(threads=threads))
    if reference is None:
        reference = work
    assert np.array_equal(work, reference)
print(f"parallel result at b={b} identical for 1, 2, 4 threads: True")
