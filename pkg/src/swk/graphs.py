"""Graph construction: parsers, family generators, and the Cartesian product.

Graphs are simple, finite, undirected, with dense vertex ids 0..n-1.
Instances are immutable after construction and safe to share read-only.
Two views of the edge set are kept in sync: sorted adjacency lists (for
traversal) and per-vertex neighbor bitmasks (for subset intersections).
"""

from __future__ import annotations

from bisect import bisect_left
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .bitset import mask_of
from .errors import ParseError, PreconditionError
from .families import fibonacci, lucas

DEFAULT_VERTEX_CAP = 1 << 20
CUBE_ORDER_CAP = 30

# Above this, neighbor bitmasks are built lazily on first use so that large
# sparse graphs do not pay n^2/8 bytes up front.
_EAGER_BITSET_LIMIT = 4096


class Graph:
    """Simple undirected graph with adjacency lists and neighbor bitmasks."""

    __slots__ = ("n", "m", "adjacency", "labels", "_adj_bits")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Iterable[str] | None = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        pairs: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            pairs.add((u, v) if u < v else (v, u))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in pairs:
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.m = len(pairs)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(a)) for a in adj
        )
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("labels length must equal vertex count")
        self._adj_bits = (
            tuple(mask_of(a) for a in self.adjacency)
            if n <= _EAGER_BITSET_LIMIT
            else None
        )

    @property
    def adj_bits(self) -> tuple[int, ...]:
        if self._adj_bits is None:
            self._adj_bits = tuple(mask_of(a) for a in self.adjacency)
        return self._adj_bits

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adjacency[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def is_connected(G: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0 (vacuously for n <= 1)."""
    if G.n <= 1:
        return True
    seen = bytearray(G.n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in G.adjacency[v]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count == G.n


# -- edge-list text format ---------------------------------------------------


def _int_token(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer token {token!r}") from None


def parse_edgelist(text: str) -> Graph:
    """Parse an edge list: one "u v" pair per line.

    '#' starts a comment, blank lines are skipped, and an optional first
    line "n <count>" pins the vertex count.  Duplicate edges collapse;
    self-loops are rejected with their line number.
    """
    declared: int | None = None
    edges: list[tuple[int, int]] = []
    max_id = -1
    first = True
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if first and tokens[0] == "n":
            if len(tokens) != 2:
                raise ParseError(f"line {lineno}: expected 'n <count>'")
            declared = _int_token(tokens[1], lineno)
            if declared < 0:
                raise ParseError(f"line {lineno}: negative vertex count")
            first = False
            continue
        first = False
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        u = _int_token(tokens[0], lineno)
        v = _int_token(tokens[1], lineno)
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex id")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
        max_id = max(max_id, u, v)
    if declared is not None and max_id >= declared:
        raise ParseError(
            f"declared vertex count {declared} but vertex id {max_id} appears"
        )
    n = declared if declared is not None else max_id + 1
    return Graph(n, edges)


# -- graph6 byte format ------------------------------------------------------

_G6_CAP = 1 << 18
_G6_HEADER = b">>graph6<<"


def _read_g6_size(data: bytes) -> tuple[int, bytes]:
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise ParseError("truncated graph6 size field")
        n = 0
        for byte in data[1:4]:
            n = (n << 6) | (byte - 63)
        return n, data[4:]
    if len(data) < 8:
        raise ParseError("truncated graph6 size field")
    n = 0
    for byte in data[2:8]:
        n = (n << 6) | (byte - 63)
    return n, data[8:]


def parse_graph6(data: bytes | str) -> Graph:
    """Decode one graph6-encoded graph (an optional '>>graph6<<' prefix is
    tolerated).  The size header, the column-major upper-triangle bit order,
    and the 63-offset 6-bit byte packing follow the standard format."""
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError:
            raise ParseError("graph6 input is not ASCII") from None
    data = data.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    if not data:
        raise ParseError("empty graph6 input")
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise ParseError(f"graph6 byte {byte} at offset {i} outside 63..126")
    n, body = _read_g6_size(data)
    if n >= _G6_CAP:
        raise ParseError(f"graph6 vertex count {n} exceeds the 2^18 limit")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise ParseError(f"graph6 body for n={n} needs {need} bytes, got {len(body)}")
    bitvals: list[int] = []
    for byte in body:
        x = byte - 63
        bitvals.extend((x >> s) & 1 for s in range(5, -1, -1))
    if any(bitvals[nbits:]):
        raise ParseError("nonzero padding bits in graph6 body")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bitvals[k]:
                edges.append((u, v))
            k += 1
    return Graph(n, edges)


def write_graph6(G: Graph, header: bool = False) -> bytes:
    """Encode a graph in graph6 form; inverse of :func:`parse_graph6`."""
    n = G.n
    if n >= _G6_CAP:
        raise PreconditionError(f"graph6 supports fewer than {_G6_CAP} vertices")
    out = bytearray(_G6_HEADER if header else b"")
    if n <= 62:
        out.append(63 + n)
    elif n <= 258047:
        out.append(126)
        out.extend(63 + ((n >> s) & 63) for s in (12, 6, 0))
    else:
        out.extend((126, 126))
        out.extend(63 + ((n >> s) & 63) for s in (30, 24, 18, 12, 6, 0))
    acc = 0
    nb = 0
    for v in range(1, n):
        mask = G.adj_bits[v]
        for u in range(v):
            acc = (acc << 1) | ((mask >> u) & 1)
            nb += 1
            if nb == 6:
                out.append(63 + acc)
                acc = 0
                nb = 0
    if nb:
        out.append(63 + (acc << (6 - nb)))
    return bytes(out)


def read_graph6_file(text: str | bytes) -> list[Graph]:
    """Parse a whole-file graph6 corpus, one graph per line."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


# -- standard families -------------------------------------------------------

FAMILY_NAMES = (
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "star",
    "hypercube",
    "fibonacci_cube",
    "lucas_cube",
)


@dataclass(frozen=True)
class FamilySpec:
    """A named family plus its one or two integer parameters."""

    family: str
    a: int
    b: int | None = None


def path_graph(n: int) -> Graph:
    if n < 1:
        raise PreconditionError("path needs at least 1 vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise PreconditionError("complete graph needs at least 1 vertex")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise PreconditionError("complete bipartite parts must be nonempty")
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def star_graph(n: int) -> Graph:
    """Star on n vertices: center 0, leaves 1..n-1."""
    if n < 1:
        raise PreconditionError("star needs at least 1 vertex")
    return Graph(n, [(0, v) for v in range(1, n)])


def _cube_from_strings(width: int, values: list[int]) -> Graph:
    order = sorted(values)
    index = {x: i for i, x in enumerate(order)}
    edges = []
    for x in order:
        for i in range(width):
            y = x ^ (1 << i)
            if y > x and y in index:
                edges.append((index[x], index[y]))
    labels = [format(x, f"0{width}b") if width else "" for x in order]
    return Graph(len(order), edges, labels=labels)


def _check_cube_order(n: int, nv: int, max_vertices: int) -> None:
    if not 0 <= n <= CUBE_ORDER_CAP:
        raise PreconditionError(f"cube order must be in 0..{CUBE_ORDER_CAP}")
    if nv > max_vertices:
        raise PreconditionError(f"family would have {nv} vertices (cap {max_vertices})")


def hypercube(n: int, max_vertices: int = DEFAULT_VERTEX_CAP) -> Graph:
    """n-cube on all binary strings of length n."""
    _check_cube_order(n, 1 << n, max_vertices)
    return _cube_from_strings(n, list(range(1 << n)))


def fibonacci_cube(n: int, max_vertices: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Subgraph of the n-cube induced by strings with no two consecutive ones.

    Vertex ids follow the numeric order of the strings; labels carry the
    strings themselves.  |V| = F(n+2).
    """
    _check_cube_order(n, fibonacci(n + 2), max_vertices)
    values = [x for x in range(1 << n) if x & (x >> 1) == 0]
    return _cube_from_strings(n, values)


def lucas_cube(n: int, max_vertices: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Fibonacci strings whose first and last bits are not both one.

    |V| = L(n) for n >= 1; the order-0 cube is a single vertex.
    """
    _check_cube_order(n, lucas(n) if n >= 1 else 1, max_vertices)
    hi = 1 << (n - 1) if n >= 1 else 0
    values = [
        x
        for x in range(1 << n)
        if x & (x >> 1) == 0 and not (x & hi and x & 1)
    ]
    return _cube_from_strings(n, values)


def make_family(spec: FamilySpec, max_vertices: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Build the graph described by a :class:`FamilySpec`."""
    name, a, b = spec.family, spec.a, spec.b
    two_param = name == "complete_bipartite"
    if name not in FAMILY_NAMES:
        raise PreconditionError(f"unknown family {name!r}")
    if (b is not None) != two_param:
        raise PreconditionError(
            f"family {name!r} takes {'two parameters' if two_param else 'one parameter'}"
        )
    if two_param:
        if a + b > max_vertices:
            raise PreconditionError(f"family would exceed the {max_vertices}-vertex cap")
        return complete_bipartite_graph(a, b)
    if name in ("path", "cycle", "complete", "star") and a > max_vertices:
        raise PreconditionError(f"family would exceed the {max_vertices}-vertex cap")
    builders = {
        "path": path_graph,
        "cycle": cycle_graph,
        "complete": complete_graph,
        "star": star_graph,
    }
    if name in builders:
        return builders[name](a)
    cubes = {
        "hypercube": hypercube,
        "fibonacci_cube": fibonacci_cube,
        "lucas_cube": lucas_cube,
    }
    return cubes[name](a, max_vertices)


def cartesian_product(
    G: Graph, H: Graph, max_vertices: int = DEFAULT_VERTEX_CAP
) -> Graph:
    """Cartesian product: (a, x) ~ (b, y) iff (a=b and xy is an H-edge) or
    (x=y and ab is a G-edge).  Vertex (g, h) gets id g*|V(H)| + h."""
    if G.n == 0 or H.n == 0:
        raise PreconditionError("product factors must be nonempty")
    n = G.n * H.n
    if n > max_vertices:
        raise PreconditionError(f"product would have {n} vertices (cap {max_vertices})")
    edges = []
    for g in range(G.n):
        base = g * H.n
        for x, y in H.edges():
            edges.append((base + x, base + y))
    for a, b in G.edges():
        for x in range(H.n):
            edges.append((a * H.n + x, b * H.n + x))
    return Graph(n, edges)
