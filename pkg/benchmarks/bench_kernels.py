"""Compare the compiled and pure-Python counting kernels on one workload.

Usage: python benchmarks/bench_kernels.py [max_n]

The workload is the kind of sweep the verification suite leans on:
for each n, an avoidance count, an exactly-once count and a two-pattern
count over all of S_n(132).
"""

from __future__ import annotations

import sys
import time

from pattgf import _kernel_py

try:
    from pattgf import _core
except ImportError:
    _core = None

WORKLOAD = [
    ("avoid [4,2]", ((3, 4, 1, 2),), None, 0, False),
    ("once 321", (), (3, 2, 1), 1, False),
    ("avoid 3214 & once 213", ((3, 2, 1, 4),), (2, 1, 3), 1, False),
]


def run(kernel, max_n: int) -> tuple[float, list[int]]:
    t0 = time.perf_counter()
    results = []
    for n in range(max_n + 1):
        for _, avoid, contain, t, at_least in WORKLOAD:
            results.append(kernel.count_constrained(n, avoid, contain, t, at_least))
    return time.perf_counter() - t0, results


def main(argv: list[str]) -> int:
    max_n = int(argv[1]) if len(argv) > 1 else 10
    py_time, py_results = run(_kernel_py, max_n)
    print(f"python backend:  {py_time:8.3f}s  (n <= {max_n}, {len(py_results)} counts)")
    if _core is None:
        print("cython backend:  not built (pip install -e . with a C compiler)")
        return 0
    cy_time, cy_results = run(_core, max_n)
    print(f"cython backend:  {cy_time:8.3f}s")
    if py_results != cy_results:
        print("MISMATCH between backends!")
        return 1
    print(f"agreement: yes   speedup: {py_time / cy_time:.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main(sys.argv))
