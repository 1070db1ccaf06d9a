"""Havel-Hakimi realization of a graphic sequence.

Vertices live in one array sorted by residual degree. Each step removes the
front vertex v and decrements the next d_v entries; entries that share the
smallest affected degree are taken from the back of their run, so the array
stays sorted without re-sorting. Cost is O(sum(d) + n log n).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend
from .core import NotGraphicError, as_sequence


@dataclass(frozen=True)
class Graph:
    n: int
    edges: np.ndarray  # (m, 2) int64, 0-based, u < v, lexicographic

    def degrees(self) -> np.ndarray:
        return np.bincount(self.edges.ravel(), minlength=self.n).astype(np.int64)

    def edge_list(self, one_based: bool = True):
        shift = 1 if one_based else 0
        return [(u + shift, v + shift) for u, v in self.edges.tolist()]


def realize_graph(d) -> Graph:
    d = as_sequence(d)
    n = d.size
    if n == 0:
        raise NotGraphicError("empty degree sequence")
    if int(d.max()) > n - 1:
        raise NotGraphicError(f"degree {int(d.max())} exceeds n - 1 = {n - 1}")
    edges, ok = backend.kernels().havel_hakimi(d)
    if not ok:
        raise NotGraphicError(f"sequence with sum {int(d.sum())} is not graphic")
    codes = np.sort(edges[:, 0] * n + edges[:, 1])
    return Graph(n, np.stack((codes // n, codes % n), axis=1))
