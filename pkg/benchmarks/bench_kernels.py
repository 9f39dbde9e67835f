#!/usr/bin/env python3
"""Compare the compiled and pure-Python backtracking kernels on the same
workloads.

Run from the repository root after building the extension in place:

    python setup.py build_ext --inplace
    PYTHONPATH=src python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import time

from incolour import kernel
from incolour.families import gen_basic, gen_cycle_power, gen_random_graph
from incolour.harness import random_list_assignment, regression_chi
from incolour.solver import (
    check_choosability_exhaustive,
    incidence_chromatic_number,
    solve_list_colouring,
)


def batch_solves() -> int:
    found = 0
    for seed in range(300):
        g = gen_random_graph(9, seed, density=0.45)
        if not g.edges:
            continue
        k = g.max_degree + 1
        lists = random_list_assignment(g, k, 2 * k, seed)
        found += solve_list_colouring(g, lists).found
    return found


WORKLOADS = [
    ("chi regression suite", lambda: regression_chi().ok),
    ("chi(K6)", lambda: incidence_chromatic_number(gen_basic("complete", 6)[0])),
    ("chi(C12^2)", lambda: incidence_chromatic_number(gen_cycle_power(12, 2)[0])),
    ("choosability sweep P3 k=3 u=6",
     lambda: check_choosability_exhaustive(gen_basic("path", 3)[0], 3, 6).choosable),
    ("choosability sweep C3 k=3 u=5",
     lambda: check_choosability_exhaustive(gen_basic("cycle", 3)[0], 3, 5).choosable),
    ("300 random solves n=9", batch_solves),
]


def main() -> None:
    backends = kernel.available_backends()
    print(f"available kernels: {', '.join(backends)}")
    if len(backends) < 2:
        print("compiled kernel missing; run `python setup.py build_ext --inplace`")
    rows = []
    for name, fn in WORKLOADS:
        timings = {}
        result = None
        for backend in backends:
            kernel.set_backend(backend)
            start = time.perf_counter()
            result = fn()
            timings[backend] = time.perf_counter() - start
        rows.append((name, result, timings))
    kernel.set_backend(backends[-1])

    width = max(len(name) for name, _, _ in rows)
    for name, result, timings in rows:
        parts = [f"{b}={timings[b]*1000:8.1f}ms" for b in backends]
        if "python" in timings and "c" in timings and timings["c"] > 0:
            parts.append(f"speedup={timings['python'] / timings['c']:5.1f}x")
        print(f"{name:<{width}}  result={result!r:<6}  " + "  ".join(parts))


if __name__ == "__main__":
    main()
