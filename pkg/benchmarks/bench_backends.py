"""Compare the numba and numpy kernel backends on random realizable boxes.

    python3 benchmarks/bench_backends.py
    python3 benchmarks/bench_backends.py --sizes 1000,10000 --repeat 7

Prints one CSV row per (operation, size): median seconds for each backend,
the speedup, and whether both backends returned the same answer.
"""

import argparse
import time
from statistics import median

import numpy as np

from degreal import backend
from degreal.bench import random_graph_degrees, random_realizable_box
from degreal.certify import certificate, min_deviation_certificate
from degreal.graph_build import realize_graph
from degreal.regular import most_regular_certificate
from degreal.verify import is_realizable

OPERATIONS = {
    "is_realizable": lambda S, d: is_realizable(S),
    "certificate": lambda S, d: certificate(S, "sparsest").degrees,
    "min_deviation": lambda S, d: min_deviation_certificate(S).degrees,
    "most_regular": lambda S, d: most_regular_certificate(S).degrees,
    "realize_graph": lambda S, d: realize_graph(d).edges,
}

# quadratic or python-loop fallbacks get smaller inputs
SIZE_CAP = {"most_regular": 4000, "realize_graph": 20000}


def timed(fn, repeat):
    out = fn()
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return median(times), out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="1000,10000,100000")
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    rng = np.random.default_rng(args.seed)
    with backend.use("numba"):
        warm = random_realizable_box(64, rng)
        for op in OPERATIONS.values():
            op(warm, random_graph_degrees(64, rng))

    print("operation,size,numba_s,numpy_s,speedup,agree")
    for n in sizes:
        S = random_realizable_box(n, rng)
        d = random_graph_degrees(n, rng)
        for name, op in OPERATIONS.items():
            if n > SIZE_CAP.get(name, n):
                continue
            results = {}
            for kind in ("numba", "numpy"):
                with backend.use(kind):
                    results[kind] = timed(lambda: op(S, d), args.repeat)
            (t_jit, r_jit), (t_np, r_np) = results["numba"], results["numpy"]
            print(f"{name},{n},{t_jit:.6f},{t_np:.6f},{t_np / t_jit:.1f},{np.array_equal(r_jit, r_np)}")


if __name__ == "__main__":
    main()
