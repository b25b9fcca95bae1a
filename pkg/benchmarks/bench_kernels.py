"""Compiled vs pure-Python kernels on the searches the pipeline actually runs.

    python benchmarks/bench_kernels.py [--repeat 5]

Each row is the best of ``--repeat`` wall-clock runs. Results are also
checked for equality across backends, so a speedup never hides a mismatch.
"""

import argparse
import time

from holesat import kernels
from holesat.formula import all_sign_patterns, brute_force_sat, random_3sat
from holesat.holes import harvest_holes
from holesat.reduction import build_reduction


def _first_unsat(n, m):
    for seed in range(1000):
        f = random_3sat(n, m, seed)
        if brute_force_sat(f) is None:
            return f
    raise RuntimeError(f"no unsatisfiable instance at n={n}, m={m}")


def _best(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def _odd_hole(backend, rg):
    adj = rg.graph.adjacency_lists()
    return lambda: backend.odd_hole_through(adj, rg.u, 10**8)


def _harvest(backend, g):
    def run():
        saved = kernels.shortest_hole
        kernels.shortest_hole = backend.shortest_hole
        try:
            r = harvest_holes(g)
        finally:
            kernels.shortest_hole = saved
        return [h.cycle for h in r.holes], r.iterations
    return run


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    backends = kernels.backends()
    if "cython" not in backends:
        print("compiled backend not built; only timing the fallback")

    workloads = [
        ("odd hole, 8-clause example", _odd_hole, build_reduction(all_sign_patterns())),
        ("odd hole, unsat n=5 m=30", _odd_hole, build_reduction(_first_unsat(5, 30))),
        ("odd hole, unsat n=6 m=40", _odd_hole, build_reduction(_first_unsat(6, 40))),
        ("odd hole, sat n=8 m=30", _odd_hole, build_reduction(random_3sat(8, 30, 3))),
        ("harvest, 8-clause example", _harvest, build_reduction(all_sign_patterns()).graph),
        ("harvest, n=4 m=12", _harvest, build_reduction(random_3sat(4, 12, 5)).graph),
    ]

    names = list(backends)
    print(f"{'workload':32}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}")
    for title, make, arg in workloads:
        row, results = [], []
        for name in names:
            t, res = _best(make(backends[name], arg), args.repeat)
            row.append(t)
            results.append(res)
        if any(r != results[0] for r in results):
            raise SystemExit(f"backends disagree on {title}")
        speed = f"{row[0] / row[-1]:9.1f}x" if len(row) > 1 else ""
        print(f"{title:32}" + "".join(f"{t * 1e3:10.2f}ms" for t in row) + speed)


if __name__ == "__main__":
    main()
