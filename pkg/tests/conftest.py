"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately take different routes than the library code
(path enumeration instead of distance-sum tests, explicit 2-coloring, ...)
so that agreement means something.
"""

from __future__ import annotations

import random
from collections.abc import Iterator
from itertools import combinations

import pytest
from hypothesis import strategies as st

from swk.generators import (
    curated_modular,
    curated_nonmodular,
    random_connected,
    random_tree,
)
from swk.graphs import Graph, is_connected


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Every labeled connected graph on exactly n vertices (no sampling)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        if mask.bit_count() < n - 1:
            continue
        edges = [p for i, p in enumerate(pairs) if (mask >> i) & 1]
        g = Graph(n, edges)
        if is_connected(g):
            yield g


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 9) -> Graph:
    """Connected graph strategy: random spanning tree plus extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, i - 1)), i) for i in range(1, n)}
    pool = sorted(
        {(u, v) for u in range(n) for v in range(u + 1, n)} - edges
    )
    if pool:
        edges.update(draw(st.lists(st.sampled_from(pool), max_size=len(pool))))
    return Graph(n, edges)


@pytest.fixture(scope="session")
def small_corpus() -> list[Graph]:
    """Curated modular/non-modular graphs plus seeded random connected ones,
    all with at most 9 vertices."""
    rng = random.Random(90125)
    graphs = curated_modular() + curated_nonmodular()
    graphs += [random_connected(rng, 9) for _ in range(60)]
    graphs += [random_tree(rng.randint(3, 9), rng) for _ in range(15)]
    assert all(g.n <= 9 for g in graphs)
    return graphs


def brute_interval(G: Graph, D, u: int, v: int) -> set[int]:
    """Union of vertices over all shortest u-v paths, by path enumeration."""
    target = int(D[u, v])
    found: set[int] = set()

    def walk(w: int, path: list[int]) -> None:
        if w == v:
            found.update(path)
            return
        for x in G.adjacency[w]:
            if int(D[u, x]) == int(D[u, w]) + 1 and int(D[u, x]) + int(D[x, v]) == target:
                walk(x, path + [x])

    walk(u, [u])
    return found


def is_bipartite(G: Graph) -> bool:
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in G.adjacency[v]:
                if color[w] == -1:
                    color[w] = color[v] ^ 1
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True
