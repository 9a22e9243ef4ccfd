"""Time the compiled search and counting kernels against their fallbacks.

Runs each workload with the numba-compiled kernel and with the pure
Python / numpy fallback in the same process, so the comparison needs
numba to be importable.  Under DIVGRACE_NO_NUMBA=1 the compiled column
is unavailable and only the fallback is timed.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from divgrace import SearchConfig, base_blocks, build_grid, check_alpha, construct
from divgrace import _kernels
from divgrace.constructions import F1
from divgrace.decomp import develop
from divgrace.oracle import _prepare


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def dfs_workloads():
    t8 = build_grid(1, 2)
    out = []
    for name, cfg in [("T_8 d=3 alpha", SearchConfig(d=3, alpha_only=True)),
                      ("T_8 d=3 full", SearchConfig(d=3))]:
        arrays = _prepare(t8, cfg)
        store = np.zeros((0, arrays.order.shape[0]), dtype=np.int64)

        def run(kernel, arrays=arrays, cfg=cfg, store=store):
            total, _ = kernel(arrays.nbr_flat, arrays.nbr_off, arrays.order,
                              arrays.n_labels, arrays.allowed, cfg.alpha_only,
                              arrays.side, arrays.n_labels,
                              np.empty(0, dtype=np.int64), 0, store)
            return total
        out.append((name, run))
    return out


def count_workload():
    lab = construct(2, 3, F1)
    cert = check_alpha(lab.graph, lab)
    dec = develop(base_blocks(lab.graph, lab, cert, F1.divisor(3), 2))
    dev = dec.development
    idx = dec.graph.edge_indices()
    ends_a = np.ascontiguousarray(dev[:, idx[:, 0]].ravel())
    ends_b = np.ascontiguousarray(dev[:, idx[:, 1]].ravel())
    v = dec.spec.v

    def run(kernel):
        counts = np.zeros((v, v), dtype=np.int64)
        for _ in range(50):
            kernel(ends_a, ends_b, counts)
        return counts
    return f"coverage {dec.spec.describe()} x50", run


def report(label, workload, columns, repeat):
    timings = []
    for col_name, kernel in columns:
        workload(kernel)  # warm up: triggers compilation on the njit path
        timings.append((col_name, best_of(repeat, lambda: workload(kernel))))
    cells = [f"{name} {elapsed * 1000:9.2f} ms" for name, elapsed in timings]
    line = f"{label:28s}" + "   ".join(cells)
    if len(timings) > 1 and timings[0][1] > 0:
        line += f"   ({timings[-1][1] / timings[0][1]:.1f}x)"
    print(line)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions, best is reported")
    args = parser.parse_args()

    if _kernels.NUMBA_ENABLED:
        dfs_columns = [("compiled", _kernels.dfs_search),
                       ("python", _kernels.dfs_search_py)]
        count_columns = [("compiled", _kernels.count_pairs),
                         ("numpy", _kernels.count_pairs_numpy),
                         ("python", _kernels.count_pairs_py)]
    else:
        print("numba disabled or unavailable; timing fallback paths only")
        dfs_columns = [("python", _kernels.dfs_search)]
        count_columns = [("numpy", _kernels.count_pairs_numpy),
                         ("python", _kernels.count_pairs_py)]

    for name, run in dfs_workloads():
        report(name, run, dfs_columns, args.repeat)
    name, run = count_workload()
    report(name, run, count_columns, args.repeat)


if __name__ == "__main__":
    main()
