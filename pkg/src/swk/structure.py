"""Modular-triple testing and modular/median graph recognition.

A triple {a, b, c} is modular when the three pairwise geodesic intervals
share a vertex (a median).  A graph is modular when every triple is, and
median when that median is always unique.  The scan intersects precomputed
interval bitmasks, which makes each triple an O(n/word) AND.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .bitset import as_vertex_list, bits
from .errors import PreconditionError
from .graphs import Graph
from .metric import all_pairs_distances, interval, interval_masks

# C(n,3) interval intersections and n^2 bitmasks get impractical above this.
MAX_TRIPLE_N = 512


def median_set(D: np.ndarray, a: int, b: int, c: int) -> int:
    """Bitmask of vertices on shortest paths between every pair of a, b, c."""
    return interval(D, a, b) & interval(D, a, c) & interval(D, b, c)


def is_modular_triple(D: np.ndarray, a: int, b: int, c: int) -> bool:
    return median_set(D, a, b, c) != 0


@dataclass(frozen=True)
class TripleClassification:
    total: int
    modular: int
    nonmodular: int
    median_unique: bool  # every modular triple has exactly one median


def _scan_guard(n: int) -> None:
    if n > MAX_TRIPLE_N:
        raise PreconditionError(f"triple scan limited to {MAX_TRIPLE_N} vertices")


def classify_triples(G: Graph, dist: np.ndarray | None = None) -> TripleClassification:
    """Count modular and non-modular 3-sets over all C(n, 3) triples."""
    n = G.n
    if n < 3:
        raise PreconditionError("triple classification needs at least 3 vertices")
    _scan_guard(n)
    D = all_pairs_distances(G) if dist is None else dist
    I = interval_masks(D)
    modular = 0
    unique = True
    for a in range(n - 2):
        Ia = I[a]
        for b in range(a + 1, n - 1):
            iab = Ia[b]
            Ib = I[b]
            for c in range(b + 1, n):
                mset = iab & Ia[c] & Ib[c]
                if mset:
                    modular += 1
                    if unique and mset & (mset - 1):
                        unique = False
    total = comb(n, 3)
    return TripleClassification(total, modular, total - modular, unique)


def _scan_all_triples(G: Graph, dist: np.ndarray | None, need_unique: bool) -> bool:
    n = G.n
    if n < 3:
        return True
    _scan_guard(n)
    D = all_pairs_distances(G) if dist is None else dist
    I = interval_masks(D)
    for a in range(n - 2):
        Ia = I[a]
        for b in range(a + 1, n - 1):
            iab = Ia[b]
            Ib = I[b]
            for c in range(b + 1, n):
                mset = iab & Ia[c] & Ib[c]
                if not mset:
                    return False
                if need_unique and mset & (mset - 1):
                    return False
    return True


def is_modular(G: Graph, dist: np.ndarray | None = None) -> bool:
    """True iff every vertex triple has a median (short-circuits)."""
    return _scan_all_triples(G, dist, need_unique=False)


def is_median(G: Graph, dist: np.ndarray | None = None) -> bool:
    """True iff every vertex triple has exactly one median."""
    return _scan_all_triples(G, dist, need_unique=True)


def steiner_via_2intersection(
    D: np.ndarray, terminals: int | Iterable[int]
) -> int | None:
    """d(S) from any member of the 2-intersection interval of S.

    When some vertex x lies on a shortest path between every pair of
    terminals, d(S) = sum of d(u, x) over the terminals; every such x gives
    the same total (asserted).  Returns None when the intersection is empty.
    """
    n = D.shape[0]
    try:
        ids = as_vertex_list(terminals, n)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None
    if len(ids) < 2:
        raise PreconditionError("needs at least two distinct terminals")
    i2 = -1  # all-ones; narrowed by each pair
    for x, y in combinations(ids, 2):
        i2 &= interval(D, x, y)
        if not i2:
            return None
    values = {sum(int(D[u, x]) for u in ids) for x in bits(i2)}
    if len(values) != 1:
        raise AssertionError("2-intersection members disagree on the distance sum")
    return values.pop()
