#!/usr/bin/env python3
# The benchmark harness: replicated timings, COBRA tuning, CSV round trip.
# The CLI front end for the same machinery is `bitrev-bench`.

import tempfile
from collections import defaultdict
from pathlib import Path

import bitrev as br

cfg = br.BenchConfig(
    methods=("bitwise", "bytewise", "xor", "unrolled", "recursive", "cobra_inplace"),
    b_min=10,
    b_max=14,
    replicates=5,
    warmup=2,
    verify=True,  # after the last replicate, each cell is checked against the oracle
)
records = br.run_benchmark(cfg)
print(f"{len(records)} records "
      f"({len(cfg.methods)} methods x {cfg.b_max - cfg.b_min + 1} sizes x "
      f"{cfg.replicates} replicates)\n")

means = defaultdict(dict)
for r in records:
    means[r.method].setdefault(r.b, []).append(r.per_element_s)
print("mean seconds per element:")
header = "  ".join(f"b={b:<2d}    " for b in range(cfg.b_min, cfg.b_max + 1))
print(f"{'method':14s}  {header}")
for method in cfg.methods:
    row = "  ".join(
        f"{sum(v) / len(v):.2e}" for v in
        (means[method][b] for b in range(cfg.b_min, cfg.b_max + 1))
    )
    print(f"{method:14s}  {row}")
print()

# The COBRA buffer width is a tuning knob; pick it by measurement.
result = br.tune_cobra(14, range(0, 8), replicates=3)
print(f"cobra buffer tuning at b=14: best q={result.best_q} "
      f"(buffer of {1 << (2 * result.best_q)} elements)")
for q in sorted(result.means):
    print(f"  q={q}: {result.means[q] / (1 << 14):.2e} s/element")
print()

# Records round-trip through CSV exactly.
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "bench.csv"
    br.write_csv(records, path)
    back = br.read_csv(path)
    print(f"CSV round trip through {path.name}: "
          f"{len(back)} records, identical={back == records}")
