"""Random workloads and timing helpers shared by the CLI and the benchmarks."""

from __future__ import annotations

import time
from statistics import median

import numpy as np

from . import backend
from .certify import certificate
from .core import IntervalSequence
from .regular import most_regular_certificate


def random_graph_degrees(n: int, rng: np.random.Generator, mean_degree: float = 16.0) -> np.ndarray:
    """Degrees of a random simple graph with about n * mean_degree / 2 edges."""
    m = int(n * mean_degree / 2)
    if n < 2 or m == 0:
        return np.zeros(n, dtype=np.int64)
    u = rng.integers(0, n, size=m)
    v = rng.integers(0, n, size=m)
    keep = u != v
    lo = np.minimum(u[keep], v[keep])
    hi = np.maximum(u[keep], v[keep])
    codes = np.unique(lo * n + hi)
    ends = np.concatenate((codes // n, codes % n))
    return np.bincount(ends, minlength=n).astype(np.int64)


def random_realizable_box(n: int, rng: np.random.Generator, max_width: int | None = None) -> IntervalSequence:
    """Box of random widths around the degrees of a random graph."""
    d = random_graph_degrees(n, rng, mean_degree=min(16.0, n - 1.0))
    if max_width is None:
        max_width = max(1, n // 2)
    below = rng.integers(0, max_width + 1, size=n)
    above = rng.integers(0, max_width + 1, size=n)
    return IntervalSequence(np.maximum(d - below, 0), np.minimum(d + above, n - 1))


COMMANDS = {
    "certify": lambda S: certificate(S) is not None,
    "most-regular": lambda S: most_regular_certificate(S) is not None,
}


def time_command(command: str, S: IntervalSequence, repeat: int = 3):
    """Median wall time in seconds and the verdict of the last run."""
    run = COMMANDS[command]
    times = []
    verdict = None
    for _ in range(repeat):
        start = time.perf_counter()
        verdict = run(S)
        times.append(time.perf_counter() - start)
    return median(times), verdict


def run_bench(sizes, seed=0, repeat=3, backends=("numba",), command="certify"):
    """Yield (size, backend, seconds, verdict) rows; one box per size, shared across backends."""
    rng = np.random.default_rng(seed)
    boxes = [(n, random_realizable_box(n, rng)) for n in sizes]
    for name in backends:
        with backend.use(name):
            # compile / warm caches outside the timed region
            time_command(command, random_realizable_box(64, np.random.default_rng(seed)), repeat=1)
            for n, S in boxes:
                seconds, verdict = time_command(command, S, repeat)
                yield n, name, seconds, verdict
