"""Shortest-path distances, Wiener index, average distance, intervals.

Distance matrices are plain numpy int32 arrays (hop counts), materialized
because the Steiner and structure layers look distances up n^3..n^4 times.
All averages are exact fractions; floats never enter an equality check.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

import numpy as np

from .bitset import pack_bool
from .errors import PreconditionError
from .graphs import Graph, is_connected

# n*n int32 beyond this is not worth materializing.
_MATRIX_LIMIT = 8192


def all_pairs_distances(G: Graph) -> np.ndarray:
    """All-pairs hop distances as an (n, n) int32 array (BFS per source)."""
    if not is_connected(G):
        raise PreconditionError("graph must be connected")
    n = G.n
    if n > _MATRIX_LIMIT:
        raise PreconditionError(f"distance matrix limited to {_MATRIX_LIMIT} vertices")
    out = np.zeros((n, n), dtype=np.int32)
    if n <= 1:
        return out
    adj = G.adj_bits
    row = [0] * n
    for s in range(n):
        seen = frontier = 1 << s
        row[s] = 0
        d = 0
        while frontier:
            nxt = 0
            while frontier:
                b = frontier & -frontier
                nxt |= adj[b.bit_length() - 1]
                frontier ^= b
            frontier = nxt & ~seen
            seen |= frontier
            d += 1
            f = frontier
            while f:
                b = f & -f
                row[b.bit_length() - 1] = d
                f ^= b
        out[s] = row
    return out


def wiener_index(G: Graph, dist: np.ndarray | None = None) -> int:
    """Sum of hop distances over unordered vertex pairs."""
    D = all_pairs_distances(G) if dist is None else dist
    return int(D.sum(dtype=np.int64)) // 2


def average_distance(G: Graph, dist: np.ndarray | None = None) -> Fraction:
    """Wiener index divided by C(n, 2), in lowest terms."""
    if G.n < 2:
        raise PreconditionError("average distance needs at least 2 vertices")
    return Fraction(wiener_index(G, dist), comb(G.n, 2))


def interval(D: np.ndarray, u: int, v: int) -> int:
    """Bitmask of vertices on some shortest u-v path (always contains u, v)."""
    return pack_bool(D[u] + D[v] == D[u, v])


def interval_masks(D: np.ndarray) -> list[list[int]]:
    """All-pairs interval bitmasks: masks[u][v] = interval(D, u, v)."""
    n = D.shape[0]
    out = []
    for u in range(n):
        on = (D[u][None, :] + D) == D[u][:, None]
        packed = np.packbits(on, axis=1, bitorder="little")
        out.append([int.from_bytes(r.tobytes(), "little") for r in packed])
    return out
