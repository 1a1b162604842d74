"""Exact Steiner distances and Steiner k-Wiener indices.

The Steiner distance d(S) of a terminal set S is the edge count of a
minimum connected subgraph spanning S (always a tree).  Three independent
routes are implemented:

* a median-candidate scan for |S| = 3 (a Steiner tree on three terminals
  has at most one branch vertex, so d(S) = min_v sum of distances to v),
* a Dreyfus-Wagner dynamic program over (terminal subset, root) states for
  general small S,
* an exponential superset-scan oracle used to cross-check the other two.

Terminal sets are accepted either as iterables of vertex ids or as int
bitmasks; duplicates collapse.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from .bitset import as_vertex_list, mask_of
from .errors import PreconditionError
from .graphs import Graph
from .metric import all_pairs_distances, wiener_index

DEFAULT_K_MAX = 12
_ORACLE_N_LIMIT = 20
_INF = 1 << 40
# Below these sizes plain Python loops beat numpy call overhead.
_SMALL_N = 40


def _terminals(subset: int | Iterable[int], n: int) -> list[int]:
    try:
        ids = as_vertex_list(subset, n)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None
    return ids


def steiner_distance_3(D: np.ndarray, a: int, b: int, c: int) -> int:
    """d({a, b, c}) = min over v of d(a,v) + d(b,v) + d(c,v).

    Repeated ids degenerate to the pairwise distance (or 0).
    """
    return int((D[a] + D[b] + D[c]).min())


def _induced_connected(G: Graph, tmask: int) -> bool:
    adj = G.adj_bits
    start = tmask & -tmask
    seen = frontier = start
    while frontier:
        nxt = 0
        while frontier:
            b = frontier & -frontier
            nxt |= adj[b.bit_length() - 1]
            frontier ^= b
        frontier = nxt & tmask & ~seen
        seen |= frontier
    return seen == tmask


def steiner_distance_oracle(G: Graph, terminals: int | Iterable[int]) -> int:
    """Reference value: min |T| - 1 over connected induced supersets T of S.

    Exponential scan by superset size; restricted to n <= 20.
    """
    if G.n > _ORACLE_N_LIMIT:
        raise PreconditionError(f"oracle limited to {_ORACLE_N_LIMIT} vertices")
    ids = _terminals(terminals, G.n)
    if not ids:
        raise PreconditionError("terminal set is empty")
    smask = mask_of(ids)
    if _induced_connected(G, smask):
        return len(ids) - 1
    rest = [v for v in range(G.n) if not (smask >> v) & 1]
    for extra in range(1, len(rest) + 1):
        for combo in combinations(rest, extra):
            if _induced_connected(G, smask | mask_of(combo)):
                return len(ids) + extra - 1
    raise PreconditionError("terminals are not in one connected component")


def steiner_distance_table(G: Graph) -> list[int]:
    """d(S) for every nonempty vertex subset, indexed by bitmask.

    Downward propagation from connected supersets; an exponential reference
    for tests (n <= 16).  Entry 0 is unused.
    """
    n = G.n
    if n > 16:
        raise PreconditionError("subset table limited to 16 vertices")
    full = 1 << n
    g = [0] * full
    for mask in range(1, full):
        g[mask] = mask.bit_count() - 1 if _induced_connected(G, mask) else _INF
    for mask in range(full - 1, 0, -1):
        gm = g[mask]
        sub = mask
        while sub:
            b = sub & -sub
            prev = mask ^ b
            if prev and g[prev] > gm:
                g[prev] = gm
            sub ^= b
    return g


def _dw_lists(Dl: list[list[int]], ids: list[int]) -> int:
    """Dreyfus-Wagner on Python lists; preferable for small n."""
    k = len(ids)
    n = len(Dl)
    full = 1 << k
    dp: list[list[int]] = [None] * full  # type: ignore[list-item]
    for i, t in enumerate(ids):
        dp[1 << i] = list(Dl[t])
    rng = range(n)
    for mask in range(3, full):
        if mask & (mask - 1) == 0:
            continue
        low = mask & -mask
        best = [_INF] * n
        sub = (mask - 1) & mask
        while sub:
            if sub & low:
                ds = dp[sub]
                do = dp[mask ^ sub]
                for v in rng:
                    x = ds[v] + do[v]
                    if x < best[v]:
                        best[v] = x
            sub = (sub - 1) & mask
        # grow step; D is symmetric so row v serves as the column
        dp[mask] = [min(x + y for x, y in zip(best, Dl[v])) for v in rng]
    return dp[full - 1][ids[0]]


def _dw_numpy(D: np.ndarray, ids: list[int]) -> int:
    k = len(ids)
    n = D.shape[0]
    full = 1 << k
    dp = np.full((full, n), _INF, dtype=np.int64)
    for i, t in enumerate(ids):
        dp[1 << i] = D[t]
    for mask in range(3, full):
        if mask & (mask - 1) == 0:
            continue
        low = mask & -mask
        best = np.full(n, _INF, dtype=np.int64)
        sub = (mask - 1) & mask
        while sub:
            if sub & low:
                np.minimum(best, dp[sub] + dp[mask ^ sub], out=best)
            sub = (sub - 1) & mask
        dp[mask] = (best[:, None] + D).min(axis=0)
    return int(dp[full - 1, ids[0]])


def steiner_distance_dw(
    G: Graph,
    terminals: int | Iterable[int],
    dist: np.ndarray | None = None,
    k_max: int = DEFAULT_K_MAX,
) -> int:
    """Exact d(S) via the Dreyfus-Wagner subset dynamic program.

    Agrees with the pairwise distance at |S| = 2 and with
    :func:`steiner_distance_3` at |S| = 3.  State space is 2^|S| * n, so
    |S| is capped (default 12).
    """
    ids = _terminals(terminals, G.n)
    if not ids:
        raise PreconditionError("terminal set is empty")
    if len(ids) > k_max:
        raise PreconditionError(f"terminal set too large ({len(ids)} > {k_max})")
    if len(ids) == 1:
        return 0
    D = all_pairs_distances(G) if dist is None else dist
    if len(ids) == 2:
        return int(D[ids[0], ids[1]])
    if G.n <= 2 * _SMALL_N:
        return _dw_lists(D.tolist(), ids)
    return _dw_numpy(D, ids)


def _sw3_lists(Dl: list[list[int]], n: int) -> int:
    total = 0
    for a in range(n - 2):
        Da = Dl[a]
        for b in range(a + 1, n - 1):
            s = [x + y for x, y in zip(Da, Dl[b])]
            for c in range(b + 1, n):
                total += min(x + y for x, y in zip(s, Dl[c]))
    return total


def _sw3(D: np.ndarray) -> int:
    n = D.shape[0]
    if n < _SMALL_N:
        return _sw3_lists(D.tolist(), n)
    total = 0
    for a in range(n - 2):
        Da = D[a]
        for b in range(a + 1, n - 1):
            s = Da + D[b]
            total += int((D[b + 1:] + s).min(axis=1).sum(dtype=np.int64))
    return total


def steiner_wiener(
    G: Graph,
    k: int,
    dist: np.ndarray | None = None,
    k_max: int = DEFAULT_K_MAX,
) -> int:
    """Sum of d(S) over all k-element vertex subsets.

    k = 2 reproduces the Wiener index; k = 3 runs the median-candidate
    scan; larger k enumerates subsets through the Dreyfus-Wagner routine.
    When k exceeds the vertex count there are no k-subsets and the sum is 0.
    """
    if k < 2 or k > k_max:
        raise PreconditionError(f"k must be in 2..{k_max}")
    n = G.n
    if k > n:
        return 0
    D = all_pairs_distances(G) if dist is None else dist
    if k == 2:
        return int(D.sum(dtype=np.int64)) // 2
    if k == 3:
        return _sw3(D)
    if n <= 2 * _SMALL_N:
        Dl = D.tolist()
        return sum(_dw_lists(Dl, list(S)) for S in combinations(range(n), k))
    return sum(_dw_numpy(D, list(S)) for S in combinations(range(n), k))


def mean_steiner(
    G: Graph,
    k: int,
    dist: np.ndarray | None = None,
    k_max: int = DEFAULT_K_MAX,
) -> Fraction:
    """Average Steiner distance over k-subsets: SW_k / C(n, k), exact."""
    if k > G.n:
        raise PreconditionError("k exceeds the vertex count")
    return Fraction(steiner_wiener(G, k, dist=dist, k_max=k_max), comb(G.n, k))


def jiang_f(k: int) -> Fraction:
    """Known floor for mu_k/mu over connected graphs with at least k vertices:
    2 - 2/k for even k, 2 - 2/(k+1) for odd k."""
    if k < 2:
        raise ValueError("defined for k >= 2")
    return Fraction(2) - (Fraction(2, k) if k % 2 == 0 else Fraction(2, k + 1))


@dataclass(frozen=True)
class BoundCheck:
    name: str
    left: Fraction
    relation: str  # "<=" or ">="
    right: Fraction
    holds: bool
    status: str = "proved"  # or "conjectural"


@dataclass(frozen=True)
class BoundsReport:
    k: int
    mu_k: Fraction
    checks: tuple[BoundCheck, ...]

    @property
    def proved_hold(self) -> bool:
        return all(c.holds for c in self.checks if c.status == "proved")


def _cmp(name: str, left: Fraction, relation: str, right: Fraction,
         status: str = "proved") -> BoundCheck:
    holds = left <= right if relation == "<=" else left >= right
    return BoundCheck(name, left, relation, right, holds, status)


def check_bounds(
    G: Graph,
    k: int,
    dist: np.ndarray | None = None,
    k_max: int = DEFAULT_K_MAX,
    mu_cache: dict[int, Fraction] | None = None,
) -> BoundsReport:
    """Evaluate the classical mean-Steiner-distance inequalities exactly.

    Relations checked for 3 <= k <= n:

    * mu_k <= mu_r + mu_{k+1-r} for every 2 <= r <= k-1
    * mu_k <= (k-1) mu
    * mu_k <= (k+1)/(k-1) mu_{k-1}
    * mu_k >= 3(k-1)/(k+1) mu -- proved only for k = 3 and k = n, recorded
      as "conjectural" otherwise (counterexamples exist for large graphs)
    * mu_k / mu >= f(k) with f the parity-split floor from
      :func:`jiang_f`, kept as a reference row

    ``mu_cache`` lets callers share mean-Steiner values across several k.
    """
    n = G.n
    if k < 3 or k > min(n, k_max):
        raise PreconditionError(f"k must be in 3..min(n, {k_max})")
    D = all_pairs_distances(G) if dist is None else dist
    cache = mu_cache if mu_cache is not None else {}

    def mu(j: int) -> Fraction:
        if j not in cache:
            cache[j] = mean_steiner(G, j, dist=D, k_max=k_max)
        return cache[j]

    mu_k = mu(k)
    mu2 = mu(2)
    rows = [
        _cmp(f"mu{k}<=mu{r}+mu{k + 1 - r}", mu_k, "<=", mu(r) + mu(k + 1 - r))
        for r in range(2, k)
    ]
    rows.append(_cmp(f"mu{k}<={k - 1}*mu", mu_k, "<=", (k - 1) * mu2))
    rows.append(
        _cmp(
            f"mu{k}<={Fraction(k + 1, k - 1)}*mu{k - 1}",
            mu_k,
            "<=",
            Fraction(k + 1, k - 1) * mu(k - 1),
        )
    )
    status = "proved" if k == 3 or k == n else "conjectural"
    rows.append(
        _cmp(
            f"mu{k}>={Fraction(3 * (k - 1), k + 1)}*mu",
            mu_k,
            ">=",
            Fraction(3 * (k - 1), k + 1) * mu2,
            status,
        )
    )
    rows.append(_cmp(f"mu{k}/mu>=f({k})", mu_k / mu2, ">=", jiang_f(k)))
    return BoundsReport(k, mu_k, tuple(rows))


@dataclass(frozen=True)
class ModularBoundResult:
    """2*SW_3 against (n-2)*W, both as exact integers (doubling avoids
    fractions).  Equality characterizes modular graphs."""

    twice_sw3: int
    scaled_wiener: int
    equality: bool


def check_sw3_modular_bound(
    G: Graph, dist: np.ndarray | None = None
) -> ModularBoundResult:
    """Compare 2*SW_3(G) with (n-2)*W(G); the former is never smaller."""
    if G.n < 3:
        raise PreconditionError("needs at least 3 vertices")
    D = all_pairs_distances(G) if dist is None else dist
    twice_sw3 = 2 * steiner_wiener(G, 3, dist=D)
    scaled = (G.n - 2) * wiener_index(G, dist=D)
    return ModularBoundResult(twice_sw3, scaled, twice_sw3 == scaled)
