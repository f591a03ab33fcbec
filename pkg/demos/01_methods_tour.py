#!/usr/bin/env python3
# Tour of the permutation methods: same reordering, different memory behaviour.

import numpy as np

import bitrev as br

print("The bit-reversed permutation of [0..7]:")
print("  indices  ", list(range(8)))
print("  reversed ", [br.rev_naive(i, 3) for i in range(8)])
print("  permuted ", br.oracle_permute(np.arange(8), 3).tolist())
print()

# Every method produces that exact reordering.  In-place methods mutate
# their argument; the out-of-place COBRA returns a fresh array.
print("All methods on [0..7]:")
for method in br.METHOD_IDS:
    a = np.arange(8, dtype=np.int64)
    out = br.make_method(method)(a, 3)
    result = a if out is None else out
    print(f"  {method:14s} -> {result.tolist()}")
print()

# On a larger random array, check a few of them against the oracle.
b = 16
rng = np.random.default_rng(0)
data = rng.standard_normal(1 << b) + 1j * rng.standard_normal(1 << b)
expected = br.oracle_permute(data, b)

work = data.copy()
br.xor_permute(work, b)
print(f"xor_permute matches oracle at b={b}:", np.array_equal(work, expected))

work = data.copy()
br.recursive_permute(work, b)
print(f"recursive_permute matches oracle at b={b}:", np.array_equal(work, expected))

dest = np.empty_like(data)
br.cobra_out_of_place(data, dest, br.CobraConfig(br.default_cobra_q(b)), b)
print(f"cobra_out_of_place matches oracle at b={b}:", np.array_equal(dest, expected))

# Bit reversal is an involution, so running any in-place method twice
# hands the original array back.
work = data.copy()
br.pair_bitwise_permute(work, b)
br.pair_bitwise_permute(work, b)
print("pair_bitwise twice restores the input:", np.array_equal(work, data))
