"""Seeded random graph corpora for tests and verification suites.

Every generator takes an explicit ``random.Random`` so corpora are
reproducible from a seed alone.
"""

from __future__ import annotations

import random
from itertools import combinations

from .graphs import (
    Graph,
    cartesian_product,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    hypercube,
    path_graph,
    star_graph,
)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random attachment tree on n >= 1 vertices."""
    return Graph(n, [(rng.randrange(i), i) for i in range(1, n)])


def random_connected_graph(n: int, m: int, rng: random.Random) -> Graph:
    """Connected graph on n vertices with exactly m edges (tree + extras)."""
    max_m = n * (n - 1) // 2
    if not n - 1 <= m <= max_m:
        raise ValueError(f"edge count must be in {n - 1}..{max_m}")
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u, v = order[rng.randrange(i)], order[i]
        edges.add((u, v) if u < v else (v, u))
    spare = [e for e in combinations(range(n), 2) if e not in edges]
    rng.shuffle(spare)
    edges.update(spare[: m - len(edges)])
    return Graph(n, edges)


def random_connected(rng: random.Random, max_n: int, min_n: int = 3) -> Graph:
    """Random connected graph with a sparse-leaning edge count."""
    n = rng.randint(min_n, max_n)
    max_extra = n * (n - 1) // 2 - (n - 1)
    extra = min(rng.randint(0, max_extra), rng.randint(0, max_extra))
    return random_connected_graph(n, n - 1 + extra, rng)


def random_block_graph(rng: random.Random, max_n: int = 12) -> Graph:
    """Random block graph: cliques of size 2..5 glued at random vertices."""
    target = rng.randint(3, max_n)
    edges = []
    n = 1
    while n < target:
        size = rng.randint(2, min(5, target - n + 1))
        anchor = rng.randrange(n)
        members = [anchor] + list(range(n, n + size - 1))
        edges.extend(combinations(members, 2))
        n += size - 1
    return Graph(n, edges)


def random_terminals(rng: random.Random, n: int, k: int) -> list[int]:
    return sorted(rng.sample(range(n), k))


def paw_graph() -> Graph:
    """Triangle with one pendant vertex; the smallest non-tree block graph."""
    return Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


def grid_graph(rows: int, cols: int) -> Graph:
    return cartesian_product(path_graph(rows), path_graph(cols))


def curated_modular() -> list[Graph]:
    """Small graphs known to be modular (trees, cycles of length 4, grids,
    hypercubes, complete bipartite)."""
    return [
        path_graph(5),
        star_graph(5),
        cycle_graph(4),
        complete_bipartite_graph(2, 3),
        complete_bipartite_graph(3, 3),
        hypercube(3),
        grid_graph(3, 3),
        Graph(7, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (0, 6)]),  # a tree
    ]


def curated_nonmodular() -> list[Graph]:
    """Small graphs with at least one median-free triple (anything with a
    triangle, and odd or long cycles)."""
    return [
        complete_graph(3),
        complete_graph(4),
        complete_graph(5),
        cycle_graph(5),
        cycle_graph(6),
        cycle_graph(7),
        paw_graph(),
        Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),  # diamond
    ]
