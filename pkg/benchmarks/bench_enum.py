"""Benchmark the enumeration core: compiled extension vs pure Python.

Times the histogram kernel behind character_oracle on the acceptance-scale
windows.  Run from the repository root:

    python benchmarks/bench_enum.py
"""

import statistics
import time

from fstchar import _enumpure

try:
    from fstchar import _enumcore
except ImportError:
    _enumcore = None

WORKLOADS = [
    ("level 2, caps (8,8), q<=20", dict(
        l=2, level=2, init_bounds=(1, 2), q_order=20, caps=(8, 8))),
    ("level 3, caps (6,6), q<=20", dict(
        l=2, level=3, init_bounds=(1, 2), q_order=20, caps=(6, 6))),
    ("level 2, caps (10,16), q<=26", dict(
        l=2, level=2, init_bounds=(2, 2), q_order=26, caps=(10, 16))),
    ("level 2, rank 3, caps (5,5,5), q<=12", dict(
        l=3, level=2, init_bounds=(1, 1, 2), q_order=12, caps=(5, 5, 5))),
    ("level 1, prefix (0,0), energy<=24", dict(
        l=2, level=1, init_prefix=(0, 0), energy_max=24)),
]


def best_of(fn, repeats=5):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times), result


def main():
    if _enumcore is None:
        print("compiled core not built; timing the pure core only")
    header = f"{'workload':42} {'configs':>9} {'pure':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, kwargs in WORKLOADS:
        pure_time, pure_counts = best_of(
            lambda: _enumpure.count_weight_degree(**kwargs)
        )
        row = f"{name:42} {sum(pure_counts.values()):>9} {pure_time * 1e3:>8.1f}ms"
        if _enumcore is not None:
            fast_time, fast_counts = best_of(
                lambda: _enumcore.count_weight_degree(**kwargs)
            )
            assert fast_counts == pure_counts, f"kernel mismatch on {name}"
            row += f" {fast_time * 1e3:>8.1f}ms {pure_time / fast_time:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
