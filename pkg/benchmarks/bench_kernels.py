"""Compare the compiled and pure-Python kernels on the verifier's hot loops.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--graphs 500] [--json]
"""

from __future__ import annotations

import argparse
import json
import random
import time

from quasirandic.graph import pair_count
from quasirandic.kernels import available_backends
from quasirandic.verifier.enumeration import random_connected_graph


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def workloads(count, seed):
    rng = random.Random(seed)
    canon = [random_connected_graph(8, rng) for _ in range(count)]
    search = [random_connected_graph(10, rng, rng.uniform(0.0, 0.4)) for _ in range(count)]
    return canon, search


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--graphs", type=int, default=500, help="random graphs per per-graph workload")
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--json", action="store_true", help="print machine-readable results")
    args = ap.parse_args(argv)

    canon, search = workloads(args.graphs, args.seed)
    tasks = {
        "scan n=5": lambda m: m.scan(5, 0, 1 << pair_count(5)),
        "scan n=6": lambda m: m.scan(6, 0, 1 << pair_count(6)),
        f"canonical_code x{len(canon)} (n=8)": lambda m: [m.canonical_code(G.rows, G.n) for G in canon],
        f"deletion_search x{len(search)} (n=10, all witnesses)": lambda m: [
            m.deletion_search(G.rows, G.n, True) for G in search
        ],
    }
    backends = available_backends()
    results = {name: {b: best_of(lambda: fn(mod), args.repeat) for b, mod in backends.items()}
               for name, fn in tasks.items()}

    if args.json:
        print(json.dumps(results, indent=2))
        return
    names = sorted(backends)
    print(f"{'workload':<44}" + "".join(f"{b:>12}" for b in names) + ("     speedup" if "cython" in names else ""))
    for name, row in results.items():
        line = f"{name:<44}" + "".join(f"{row[b]:>11.4f}s" for b in names)
        if "cython" in row:
            line += f"{row['python'] / row['cython']:>11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
