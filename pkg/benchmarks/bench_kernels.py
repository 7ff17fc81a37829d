"""Compare the numba-compiled kernels with their uncompiled bodies.

    python3 benchmarks/bench_kernels.py [--repeat N]

Workloads: exhaustive patch enumeration on Z^2 (backtracking kernel),
window pruning on a free group (closure kernel) and domain propagation on a
free-group ball (arc-consistency kernel).
"""
import argparse
import time

import numpy as np

from groupshift import FreeAbelianGroup, FreeGroup, Pattern, Sft, kernels
from groupshift._accel import USE_NUMBA
from groupshift.windows import WindowGeometry
from groupshift.subshift import admissible_patches


def search_workload():
    G = FreeAbelianGroup(2)
    x = Sft(G, "012", [Pattern.make(G, {(): a, (s,): a}) for s in "ab" for a in "012"])
    con = x.compile(x.cells(2))
    doms = np.ones((con.n_cells, len(x.alphabet)), np.bool_)
    out = np.zeros((1, con.n_cells), np.int64)
    args = (doms, con.trig_ptr, con.trig_con, con.con_cells, con.con_len, con.con_masks, 0, 0, out)
    return args


def prune_workload():
    G = FreeGroup("ab")
    x = Sft(G, "012", [Pattern.make(G, {(): "0", (s,): "0"}) for s in "ab"]
            + [Pattern.make(G, {(): "1", ("a",): "2"})])
    geo = WindowGeometry(G, 1)
    wins = [p.symbols for p in admissible_patches(x, 1)]
    out, inn, n_keys = geo.keys(wins)
    return (np.ones(len(wins), np.bool_), out, inn, np.int64(n_keys))


def arc_workload():
    G = FreeGroup("ab")
    x = Sft(G, "0123", [Pattern.make(G, {(): a, (s,): b}) for s in "ab" for a in "0123" for b in "0123"
                        if (int(a) + int(b)) % 3 == 0])
    con = x.compile(x.cells(4))
    pi, pj, rel = con._binary_relations()
    doms = np.ones((con.n_cells, len(x.alphabet)), np.bool_)
    return (doms, pi, pj, rel)


def bench(fn, args, repeat):
    # kernels may write into their array arguments, so each call gets fresh copies
    def fresh():
        return [a.copy() if isinstance(a, np.ndarray) else a for a in args]

    fn(*fresh())  # warm-up (triggers compilation)
    best = float("inf")
    for _ in range(repeat):
        a = fresh()
        t = time.perf_counter()
        res = fn(*a)
        best = min(best, time.perf_counter() - t)
    return best, res


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"numba active: {USE_NUMBA}")
    for name, kern, work in (("search_assignments", kernels.search_assignments, search_workload),
                             ("prune_windows", kernels.prune_windows, prune_workload),
                             ("arc_consistency", kernels.arc_consistency, arc_workload)):
        a = work()
        t_fast, r_fast = bench(kern, a, args.repeat)
        t_slow, r_slow = bench(kern.py_func, a, 1)
        same = np.array_equal(np.asarray(r_fast), np.asarray(r_slow))
        print(f"{name:20s} compiled {t_fast * 1e3:9.2f} ms   python {t_slow * 1e3:9.2f} ms   "
              f"speedup {t_slow / max(t_fast, 1e-9):7.1f}x   identical={same}")


if __name__ == "__main__":
    main()
