"""Verification suites: closed forms and structural identities against
brute-force recomputation on seeded corpora.

Each suite aggregates named properties over many instances; the first
failing instance (if any) is serialized as graph6 so it can be replayed.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from itertools import combinations, permutations

from .blocks import block_decomposition, nm_block_graph, sw3_block_formula
from .errors import ParseError
from .families import (
    fibonacci,
    lucas,
    mu3_ratio,
    sw3_fibonacci_closed,
    sw3_lucas_closed,
    sw3_product_modular,
    wiener_fibonacci_closed,
    wiener_lucas_closed,
)
from .generators import (
    curated_modular,
    curated_nonmodular,
    random_block_graph,
    random_connected,
    random_terminals,
    random_tree,
)
from .graphs import (
    Graph,
    cartesian_product,
    complete_bipartite_graph,
    fibonacci_cube,
    hypercube,
    is_connected,
    lucas_cube,
    path_graph,
    read_graph6_file,
    star_graph,
    write_graph6,
)
from .metric import all_pairs_distances, interval_masks, wiener_index
from .report import Report
from .steiner import (
    check_bounds,
    check_sw3_modular_bound,
    steiner_distance_3,
    steiner_distance_dw,
    steiner_distance_oracle,
    steiner_wiener,
)
from .structure import classify_triples, is_modular

SUITE_NAMES = (
    "trees",
    "modular-bound",
    "block-graphs",
    "products",
    "fibonacci",
    "lucas",
    "bounds",
    "steiner-oracle",
)

# Reference value tables for the cube families (order 0..10).
FIBONACCI_SW3_SEQUENCE = (
    0, 0, 2, 24, 162, 968, 5206, 26672, 131652, 634752, 3006708,
)
LUCAS_SW3_SEQUENCE = (
    0, 0, 2, 9, 100, 540, 3120, 15876, 79560, 384615, 1830730,
)


class Check:
    """One named property aggregated over many instances."""

    def __init__(self, name: str, required: bool = True):
        self.name = name
        self.required = required
        self.count = 0
        self.failures = 0
        self.first_failure: dict | None = None

    def record(self, ok: bool, graph: Graph | None = None, detail: str | None = None):
        self.count += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                info: dict = {}
                if graph is not None:
                    info["graph6"] = write_graph6(graph).decode("ascii")
                if detail is not None:
                    info["detail"] = detail
                self.first_failure = info

    @property
    def holds(self) -> bool:
        return self.failures == 0

    def add_to(self, report: Report) -> None:
        extra: dict = {"instances": self.count, "failures": self.failures}
        if self.first_failure:
            extra["first_failure"] = self.first_failure
        report.add_check(self.name, self.holds, required=self.required, **extra)


def _finish(report: Report, checks: list[Check], started: float) -> Report:
    for check in checks:
        check.add_to(report)
    report.timing_ms["suite"] = (time.perf_counter() - started) * 1000.0
    return report


def _suite_trees(*, count: int = 200, max_n: int = 12, seed: int = 42, **_) -> Report:
    started = time.perf_counter()
    rng = random.Random(seed)
    c_ident = Check("tree-double-sw3-equals-(n-2)-wiener")
    c_median = Check("tree-is-median-with-no-nonmodular-triples")
    c_block = Check("tree-block-formula-agrees")
    for _ in range(count):
        T = random_tree(rng.randint(3, max_n), rng)
        D = all_pairs_distances(T)
        w = wiener_index(T, dist=D)
        s3 = steiner_wiener(T, 3, dist=D)
        c_ident.record(2 * s3 == (T.n - 2) * w, T)
        cls = classify_triples(T, dist=D)
        c_median.record(cls.nonmodular == 0 and cls.median_unique, T)
        c_block.record(sw3_block_formula(T, dist=D) == 2 * s3, T)
    return _finish(Report(), [c_ident, c_median, c_block], started)


def _modular_bound_corpus(count, max_n, seed, corpus):
    if corpus is not None:
        for G in read_graph6_file(corpus):
            yield G
        return
    for G in curated_modular():
        yield G
    for G in curated_nonmodular():
        yield G
    rng = random.Random(seed)
    for _ in range(count):
        # trees guarantee the equality direction shows up in the sample
        if rng.random() < 0.2:
            yield random_tree(rng.randint(3, max_n), rng)
        else:
            yield random_connected(rng, max_n)


def _suite_modular_bound(
    *, count: int = 10000, max_n: int = 9, seed: int = 42, corpus=None, **_
) -> Report:
    started = time.perf_counter()
    c_lower = Check("double-sw3-at-least-(n-2)-wiener")
    c_iff = Check("equality-iff-modular")
    modular_seen = nonmodular_seen = skipped = 0
    for G in _modular_bound_corpus(count, max_n, seed, corpus):
        if G.n < 3 or not is_connected(G):
            skipped += 1
            continue
        D = all_pairs_distances(G)
        result = check_sw3_modular_bound(G, dist=D)
        modular = is_modular(G, dist=D)
        modular_seen += modular
        nonmodular_seen += not modular
        c_lower.record(result.twice_sw3 >= result.scaled_wiener, G)
        c_iff.record(result.equality == modular, G)
    report = Report()
    report.add_result("modular-instances", modular_seen)
    report.add_result("nonmodular-instances", nonmodular_seen)
    if skipped:
        report.add_result("skipped-instances", skipped)
    return _finish(report, [c_lower, c_iff], started)


def _triangle_gates(D, triple, tri) -> bool:
    a, b, c = triple
    for p, q, r in permutations(tri):
        if (
            D[a, p] + 1 + D[q, b] == D[a, b]
            and D[b, q] + 1 + D[r, c] == D[b, c]
            and D[a, p] + 1 + D[r, c] == D[a, c]
        ):
            return True
    return False


def _pseudo_median_ok(G: Graph, D) -> bool:
    # Every triple has a unique median vertex or a unique gating triangle.
    n = G.n
    I = interval_masks(D)
    triangles = [
        (p, q, r)
        for p in range(n)
        for q in range(p + 1, n)
        if G.has_edge(p, q)
        for r in range(q + 1, n)
        if G.has_edge(p, r) and G.has_edge(q, r)
    ]
    for a in range(n - 2):
        for b in range(a + 1, n - 1):
            iab = I[a][b]
            for c in range(b + 1, n):
                mset = iab & I[a][c] & I[b][c]
                if mset:
                    if mset.bit_count() != 1:
                        return False
                    continue
                gating = sum(
                    1 for tri in triangles if _triangle_gates(D, (a, b, c), tri)
                )
                if gating != 1:
                    return False
    return True


def _suite_block_graphs(
    *, count: int = 1000, max_n: int = 12, seed: int = 42, **_
) -> Report:
    started = time.perf_counter()
    rng = random.Random(seed)
    c_formula = Check("block-formula-equals-double-brute-sw3")
    c_nm = Check("blockwise-nonmodular-count-equals-triple-scan")
    c_half = Check("nonmodular-triples-exceed-half-perimeter-by-half")
    c_pm = Check("pseudo-median-triples")
    for _ in range(count):
        G = random_block_graph(rng, max_n)
        D = all_pairs_distances(G)
        decomp = block_decomposition(G)
        s3 = steiner_wiener(G, 3, dist=D)
        cls = classify_triples(G, dist=D)
        c_formula.record(sw3_block_formula(G, decomp, dist=D) == 2 * s3, G)
        c_nm.record(nm_block_graph(G, decomp) == cls.nonmodular, G)
        I = interval_masks(D)
        ok_half = all(
            2 * steiner_distance_3(D, a, b, c)
            == int(D[a, b]) + int(D[a, c]) + int(D[b, c]) + 1
            for a, b, c in combinations(range(G.n), 3)
            if not I[a][b] & I[a][c] & I[b][c]
        )
        c_half.record(ok_half, G)
        c_pm.record(_pseudo_median_ok(G, D), G)
    return _finish(Report(), [c_formula, c_nm, c_half, c_pm], started)


def _product_factors() -> list[tuple[str, Graph]]:
    factors: list[tuple[str, Graph]] = []
    factors += [(f"path{n}", path_graph(n)) for n in range(2, 6)]
    factors += [(f"star{n}", star_graph(n)) for n in range(3, 6)]
    factors += [(f"cube{n}", hypercube(n)) for n in range(1, 4)]
    factors += [
        (f"K{a},{b}", complete_bipartite_graph(a, b))
        for a in range(1, 4)
        for b in range(a, 4)
    ]
    return factors


def _suite_products(*, max_size: int = 200, **_) -> Report:
    started = time.perf_counter()
    c_sw3 = Check("product-sw3-identity-matches-brute")
    c_w = Check("product-wiener-identity")
    c_frac = Check("product-fractional-form-identity")
    c_mod = Check("product-of-modular-is-modular")
    factors = _product_factors()
    for i, (name_a, A) in enumerate(factors):
        for name_b, B in factors[i:]:
            if A.n * B.n > max_size:
                continue
            P = cartesian_product(A, B)
            D = all_pairs_distances(P)
            detail = f"{name_a} x {name_b}"
            formula = sw3_product_modular(A, B)
            brute = steiner_wiener(P, 3, dist=D)
            c_sw3.record(formula == brute, P, detail)
            wp = wiener_index(P, dist=D)
            c_w.record(
                wp == A.n**2 * wiener_index(B) + B.n**2 * wiener_index(A), P, detail
            )
            if A.n > 2 and B.n > 2:
                fractional = (A.n * B.n - 2) * (
                    Fraction(A.n**2, B.n - 2) * steiner_wiener(B, 3)
                    + Fraction(B.n**2, A.n - 2) * steiner_wiener(A, 3)
                )
                c_frac.record(fractional == formula, P, detail)
            if P.n <= 100:
                c_mod.record(is_modular(P, dist=D), P, detail)
    return _finish(Report(), [c_sw3, c_w, c_frac, c_mod], started)


def _cube_vertex_count(family: str, n: int) -> int:
    if family == "fibonacci":
        return fibonacci(n + 2)
    return lucas(n) if n >= 1 else 1


def _suite_cubes(family: str, *, max_n: int = 10, wiener_max_n: int = 14, **_) -> Report:
    started = time.perf_counter()
    if family == "fibonacci":
        table = FIBONACCI_SW3_SEQUENCE
        closed_sw3, closed_w, build = (
            sw3_fibonacci_closed,
            wiener_fibonacci_closed,
            fibonacci_cube,
        )
        wiener_lo = 0  # the Lucas Wiener closed form starts at order 1
    else:
        table = LUCAS_SW3_SEQUENCE
        closed_sw3, closed_w, build = sw3_lucas_closed, wiener_lucas_closed, lucas_cube
        wiener_lo = 1
    c_seq = Check("closed-form-matches-reference-sequence")
    for n, expected in enumerate(table):
        c_seq.record(closed_sw3(n) == expected, detail=f"n={n}")
    c_counts = Check("vertex-count-matches-number-sequence")
    for n in range(21):
        G = build(n)
        c_counts.record(
            G.n == _cube_vertex_count(family, n) and is_connected(G), G, f"n={n}"
        )
    c_brute = Check("closed-form-matches-brute-sw3")
    for n in range(max_n + 1):
        G = build(n)
        c_brute.record(steiner_wiener(G, 3) == closed_sw3(n), G, f"n={n}")
    c_wiener = Check("wiener-closed-form-matches-bfs")
    for n in range(wiener_lo, wiener_max_n + 1):
        G = build(n)
        c_wiener.record(wiener_index(G) == closed_w(n), G, f"n={n}")
    c_pair = Check("double-sw3-equals-(count-2)-wiener")
    for n in range(wiener_lo, 21):
        count = _cube_vertex_count(family, n)
        c_pair.record(2 * closed_sw3(n) == (count - 2) * closed_w(n), detail=f"n={n}")
    target = Fraction(3, 5)
    c_limit = Check("mu3-over-n-within-0.02-of-3/5-at-30")
    c_limit.record(abs(mu3_ratio(30, family) - target) <= Fraction(2, 100))
    c_mono = Check("mu3-over-n-gap-nonincreasing-10-40")
    gaps = [abs(mu3_ratio(n, family) - target) for n in range(10, 41)]
    c_mono.record(all(b <= a for a, b in zip(gaps, gaps[1:])))
    checks = [c_seq, c_counts, c_brute, c_wiener, c_pair, c_limit, c_mono]
    return _finish(Report(), checks, started)


def _suite_bounds(
    *, count: int = 500, max_n: int = 10, seed: int = 42, k_cap: int = 5, **_
) -> Report:
    started = time.perf_counter()
    rng = random.Random(seed)
    rows: dict[str, Check] = {}
    for _ in range(count):
        G = random_connected(rng, max_n)
        D = all_pairs_distances(G)
        cache: dict[int, Fraction] = {}
        for k in range(3, min(k_cap, G.n) + 1):
            bounds = check_bounds(G, k, dist=D, mu_cache=cache)
            for chk in bounds.checks:
                row = rows.get(chk.name)
                if row is None:
                    row = rows[chk.name] = Check(
                        chk.name, required=chk.status == "proved"
                    )
                row.record(chk.holds, G)
    ordered = [rows[name] for name in sorted(rows)]
    return _finish(Report(), ordered, started)


def _suite_steiner_oracle(
    *, count: int = 200, max_n: int = 9, seed: int = 42, **_
) -> Report:
    started = time.perf_counter()
    rng = random.Random(seed)
    c_triples = Check("steiner-triple-routes-agree")
    c_sets = Check("steiner-dp-matches-oracle-on-4-and-5-sets")
    for _ in range(count):
        G = random_connected(rng, max_n)
        D = all_pairs_distances(G)
        ok = True
        for a, b, c in combinations(range(G.n), 3):
            s3 = steiner_distance_3(D, a, b, c)
            if s3 != steiner_distance_dw(
                G, (a, b, c), dist=D
            ) or s3 != steiner_distance_oracle(G, (a, b, c)):
                ok = False
                break
        c_triples.record(ok, G)
    for k in (4, 5):
        for _ in range(count):
            G = random_connected(rng, max_n, min_n=max(5, k))
            ids = random_terminals(rng, G.n, k)
            c_sets.record(
                steiner_distance_dw(G, ids) == steiner_distance_oracle(G, ids),
                G,
                f"terminals {ids}",
            )
    return _finish(Report(), [c_triples, c_sets], started)


_SUITES = {
    "trees": _suite_trees,
    "modular-bound": _suite_modular_bound,
    "block-graphs": _suite_block_graphs,
    "products": _suite_products,
    "fibonacci": lambda **kw: _suite_cubes("fibonacci", **kw),
    "lucas": lambda **kw: _suite_cubes("lucas", **kw),
    "bounds": _suite_bounds,
    "steiner-oracle": _suite_steiner_oracle,
}


def run_suite(name: str, **params) -> Report:
    """Run one verification suite; unknown names raise ParseError."""
    if name not in _SUITES:
        raise ParseError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    clean = {k: v for k, v in params.items() if v is not None}
    return _SUITES[name](**clean)
