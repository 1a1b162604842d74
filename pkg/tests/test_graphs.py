"""Construction layer: parsers, graph6 codec, families, Cartesian product."""

from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swk import (
    FamilySpec,
    Graph,
    ParseError,
    PreconditionError,
    cartesian_product,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    fibonacci,
    fibonacci_cube,
    hypercube,
    is_connected,
    lucas,
    lucas_cube,
    make_family,
    parse_edgelist,
    parse_graph6,
    path_graph,
    read_graph6_file,
    star_graph,
    write_graph6,
)
from swk.generators import random_connected


@st.composite
def simple_graphs(draw, max_n: int = 12) -> Graph:
    n = draw(st.integers(0, max_n))
    pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pool), max_size=len(pool))) if pool else []
    return Graph(n, edges)


# -- Graph basics ------------------------------------------------------------


def test_graph_dedupes_and_symmetrizes():
    g = Graph(3, [(0, 1), (1, 0), (0, 1), (1, 2)])
    assert g.m == 2
    assert g.adjacency == ((1,), (0, 2), (1,))
    assert g.adj_bits == (0b010, 0b101, 0b010)


def test_graph_rejects_self_loop_and_bad_ids():
    with pytest.raises(ValueError, match="self-loop"):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError, match="outside"):
        Graph(2, [(0, 2)])


def test_edges_iterator_sorted():
    g = cycle_graph(4)
    assert list(g.edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert g.has_edge(0, 3) and not g.has_edge(0, 2)


# -- edge list parser ---------------------------------------------------------


def test_parse_edgelist_path():
    g = parse_edgelist("0 1\n1 2")
    assert g == path_graph(3)


def test_parse_edgelist_collapses_duplicates():
    g = parse_edgelist("0 1\n0 1")
    assert (g.n, g.m) == (2, 1)


def test_parse_edgelist_rejects_self_loop_with_line():
    with pytest.raises(ParseError, match="line 1"):
        parse_edgelist("0 0")


def test_parse_edgelist_comments_blanks_and_declared_count():
    g = parse_edgelist("# a path\nn 5\n\n0 1  # first\n1 2\n")
    assert (g.n, g.m) == (5, 2)


def test_parse_edgelist_rejects_small_declared_count():
    with pytest.raises(ParseError, match="declared"):
        parse_edgelist("n 2\n0 3")


def test_parse_edgelist_rejects_non_integer():
    with pytest.raises(ParseError, match="line 2"):
        parse_edgelist("0 1\n0 x")


def test_parse_edgelist_empty_gives_empty_graph():
    g = parse_edgelist("")
    assert (g.n, g.m) == (0, 0)


# -- graph6 codec -------------------------------------------------------------

# Literals frozen from an independent reference encoder.
G6_KNOWN = [
    (b"A?", Graph(2, [])),
    (b"A_", complete_graph(2)),
    (b"Bg", path_graph(3)),
    (b"C~", complete_graph(4)),
    (b"Dhc", cycle_graph(5)),
]


@pytest.mark.parametrize("encoded,graph", G6_KNOWN)
def test_graph6_known_values(encoded, graph):
    assert write_graph6(graph) == encoded
    assert parse_graph6(encoded) == graph


def test_graph6_header_prefix_tolerated():
    assert parse_graph6(b">>graph6<<A_") == complete_graph(2)
    assert write_graph6(complete_graph(2), header=True) == b">>graph6<<A_"


def test_graph6_rejects_bad_input():
    with pytest.raises(ParseError, match="empty"):
        parse_graph6(b"")
    with pytest.raises(ParseError, match="outside"):
        parse_graph6(b"A\x1f")
    with pytest.raises(ParseError, match="needs"):
        parse_graph6(b"D")  # five vertices but no body
    with pytest.raises(ParseError, match="padding"):
        parse_graph6(b"A~")  # one payload bit, nonzero padding


def test_graph6_roundtrip_seeded_sample():
    rng = random.Random(1234)
    for _ in range(1000):
        n = rng.randint(1, 12)
        pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
        g = Graph(n, rng.sample(pool, rng.randint(0, len(pool))))
        assert parse_graph6(write_graph6(g)) == g


@settings(max_examples=150)
@given(simple_graphs())
def test_graph6_roundtrip_property(g):
    assert parse_graph6(write_graph6(g)) == g


@settings(max_examples=60)
@given(simple_graphs(max_n=10))
def test_graph6_matches_networkx(g):
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(g.n))
    nx_graph.add_edges_from(g.edges())
    theirs = nx.to_graph6_bytes(nx_graph, header=False).strip()
    assert write_graph6(g) == theirs
    decoded = nx.from_graph6_bytes(write_graph6(g))
    assert sorted(decoded.edges()) == list(g.edges())


def test_graph6_three_byte_size_form():
    g = path_graph(100)  # n > 62 switches to the extended size header
    encoded = write_graph6(g)
    assert encoded.startswith(b"~")
    assert parse_graph6(encoded) == g
    theirs = nx.to_graph6_bytes(nx.path_graph(100), header=False).strip()
    assert encoded == theirs


def test_read_graph6_file():
    text = "A_\nDhc\n\n"
    graphs = read_graph6_file(text)
    assert graphs == [complete_graph(2), cycle_graph(5)]


# -- families ------------------------------------------------------------------


def test_family_vertex_counts_match_sequences():
    for n in range(21):
        fib_cube, luc_cube = fibonacci_cube(n), lucas_cube(n)
        assert fib_cube.n == fibonacci(n + 2)
        assert luc_cube.n == (lucas(n) if n >= 1 else 1)
        assert is_connected(fib_cube) and is_connected(luc_cube)


def test_fibonacci_cube_4_has_8_vertices():
    assert fibonacci_cube(4).n == 8


def test_lucas_cube_3_is_star_on_four():
    assert lucas_cube(3) == star_graph(4)


def test_fibonacci_cube_3_is_banner():
    g = fibonacci_cube(3)
    assert g.labels == ("000", "001", "010", "100", "101")
    # 4-cycle 000-001-101-100 with the pendant 010 at 000
    assert sorted(g.edges()) == [(0, 1), (0, 2), (0, 3), (1, 4), (3, 4)]


def test_hypercube_structure():
    q3 = hypercube(3)
    assert (q3.n, q3.m) == (8, 12)
    assert all(q3.degree(v) == 3 for v in range(8))
    assert q3.labels[5] == "101"


def test_generated_families_connected():
    specs = [
        FamilySpec("path", 6),
        FamilySpec("cycle", 6),
        FamilySpec("complete", 5),
        FamilySpec("complete_bipartite", 2, 3),
        FamilySpec("star", 7),
        FamilySpec("hypercube", 4),
        FamilySpec("fibonacci_cube", 6),
        FamilySpec("lucas_cube", 6),
    ]
    for spec in specs:
        assert is_connected(make_family(spec))


def test_family_validation():
    with pytest.raises(PreconditionError):
        cycle_graph(2)
    with pytest.raises(PreconditionError):
        star_graph(0)
    with pytest.raises(PreconditionError):
        hypercube(31)  # order cap
    with pytest.raises(PreconditionError):
        fibonacci_cube(29)  # vertex cap
    with pytest.raises(PreconditionError):
        make_family(FamilySpec("path", 3, 4))  # extra parameter
    with pytest.raises(PreconditionError):
        make_family(FamilySpec("complete_bipartite", 3))  # missing parameter
    with pytest.raises(PreconditionError):
        make_family(FamilySpec("petersen", 1))


# -- Cartesian product ---------------------------------------------------------


def test_product_p2_p2_is_c4():
    p = cartesian_product(path_graph(2), path_graph(2))
    assert sorted(p.edges()) == [(0, 1), (0, 2), (1, 3), (2, 3)]


def test_product_identity_factor_preserves_ids():
    h = cycle_graph(5)
    p = cartesian_product(path_graph(1), h)
    assert p == h


def test_product_grid_2x3():
    p = cartesian_product(path_graph(2), path_graph(3))
    assert (p.n, p.m) == (6, 7)


def test_product_edge_count_law_random_factors():
    rng = random.Random(55)
    for _ in range(20):
        a = random_connected(rng, 15, min_n=1)
        b = random_connected(rng, 15, min_n=1)
        p = cartesian_product(a, b)
        assert p.m == a.n * b.m + b.n * a.m


def test_product_rejects_oversize_and_empty():
    with pytest.raises(PreconditionError, match="cap"):
        cartesian_product(path_graph(100), path_graph(100), max_vertices=5000)
    with pytest.raises(PreconditionError, match="nonempty"):
        cartesian_product(Graph(0, []), path_graph(2))


# -- connectivity ----------------------------------------------------------------


def test_is_connected_cases():
    assert is_connected(path_graph(3))
    assert not is_connected(Graph(4, [(0, 1), (2, 3)]))
    assert is_connected(Graph(1, []))
    assert is_connected(Graph(0, []))
