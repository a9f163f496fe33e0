import math
import warnings

import pytest
from hypothesis import given, settings, strategies as st

from oracles import iso_by_permutation, naive_diameter
from sparsels.errors import InputError, ParseError
from sparsels.generators import (
    GeneratorSpec, complete, cycle, generate, grid, path, random_grid_subgraph, random_k_degenerate, star,
)
from sparsels.graph import Graph, bfs_distances, diameter, induced_subgraph, is_isomorphic
from sparsels.io import dump_graph, load_family, load_graph
from sparsels.structure import degeneracy_ordering, wcol_of_ordering


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)


class TestLoad:
    def test_path(self):
        G = load_graph("3 2\n0 1\n1 2")
        assert G == path(3)

    def test_isolated_vertex(self):
        G = load_graph("1 0")
        assert G.n == 1 and G.m == 0

    def test_triangle(self):
        assert load_graph("3 3\n0 1\n1 2\n0 2") == complete(3)

    def test_order_insensitive(self):
        assert load_graph("3 2\n2 1\n1 0") == load_graph("3 2\n0 1\n1 2")

    def test_comments_and_blank_lines(self):
        assert load_graph("# header\n3 2\n\n0 1\n# mid\n1 2\n") == path(3)

    def test_duplicate_edges_collapse_with_warning(self):
        with pytest.warns(UserWarning, match="duplicate"):
            G = load_graph("2 2\n0 1\n1 0")
        assert G.m == 1

    @pytest.mark.parametrize("text, line", [
        ("3 2\n0 1\n1 x", 3),
        ("3 1\n0 3", 2),
        ("3 1\n1 1", 2),
        ("3 1\n0 1 2", 2),
        ("", 1),
    ])
    def test_errors_name_line(self, text, line):
        with pytest.raises(ParseError) as info:
            load_graph(text)
        assert info.value.line == line

    def test_round_trip_sorted(self):
        G = grid(3, 2)
        text = dump_graph(G)
        lines = text.splitlines()
        assert lines[0] == f"{G.n} {G.m}"
        edges = [tuple(map(int, ln.split())) for ln in lines[1:]]
        assert edges == sorted(edges)
        assert load_graph(text) == G


class TestFamilyFile:
    def test_builtins_and_edge_lists(self):
        fam = load_family("K2\n\n# a triangle\n3 3\n0 1\n1 2\n0 2\n\nclaw\n")
        assert [P.n for P in fam] == [2, 3, 4]
        assert fam[1] == complete(3)

    def test_unknown_builtin(self):
        with pytest.raises(ParseError):
            load_family("K9")

    def test_error_line_numbers_are_file_lines(self):
        with pytest.raises(ParseError) as info:
            load_family("K2\n\n2 1\n0 5\n")
        assert info.value.line == 4


class TestConstructor:
    def test_rejects_asymmetric(self):
        with pytest.raises(InputError):
            Graph(2, [[1], []])

    def test_rejects_self_loop(self):
        with pytest.raises(InputError):
            Graph.from_edges(2, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(InputError):
            Graph(2, [[2], []])


class TestGenerators:
    def test_grid_2x2_is_c4(self):
        G = grid(2, 2)
        assert (G.n, G.m) == (4, 4)
        assert is_isomorphic(G, cycle(4))

    def test_path5(self):
        assert (path(5).n, path(5).m) == (5, 4)

    def test_random_degenerate_deterministic(self):
        a = generate(GeneratorSpec("random-k-degenerate", {"n": 50, "k": 3}, 7))
        b = generate(GeneratorSpec("random-k-degenerate", {"n": 50, "k": 3}, 7))
        assert a.edges() == b.edges()

    def test_random_degenerate_is_k_degenerate(self):
        G = random_k_degenerate(60, 3, seed=11)
        for v in range(G.n):
            assert sum(1 for u in G.adj[v] if u < v) <= 3

    def test_random_grid_subgraph(self):
        full = grid(5, 4)
        G = random_grid_subgraph(5, 4, 0.5, seed=3)
        assert set(G.edges()) <= set(full.edges())
        assert random_grid_subgraph(5, 4, 1.0).edges() == full.edges()
        assert random_grid_subgraph(5, 4, 0.0).m == 0

    def test_star_and_complete(self):
        assert star(4).degree(0) == 4
        assert complete(5).m == 10

    @pytest.mark.parametrize("spec", [
        GeneratorSpec("grid", {"w": 0, "h": 3}),
        GeneratorSpec("cycle", {"n": 2}),
        GeneratorSpec("random-grid-subgraph", {"w": 2, "h": 2, "p": 1.5}),
    ])
    def test_invalid(self, spec):
        with pytest.raises(InputError):
            generate(spec)

    def test_unknown_kind(self):
        with pytest.raises(InputError):
            GeneratorSpec("hypercube", {})

    def test_label(self):
        assert GeneratorSpec("grid", {"w": 3, "h": 2}, 5).label == "grid(w=3,h=2)#5"


class TestQueries:
    def test_bfs_path(self):
        assert bfs_distances(path(5), 0) == [0, 1, 2, 3, 4]

    def test_bfs_triangle(self):
        assert bfs_distances(complete(3), 0) == [0, 1, 1]

    def test_bfs_unreachable(self):
        G = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert bfs_distances(G, 0) == [0, 1, None, None]

    def test_induced_k4(self):
        H, names = induced_subgraph(complete(4), [0, 1, 2])
        assert H == complete(3) and names == [0, 1, 2]

    def test_induced_isolated(self):
        H, names = induced_subgraph(path(5), [4, 0, 2])
        assert H.m == 0 and names == [0, 2, 4]

    def test_induced_out_of_range(self):
        with pytest.raises(InputError):
            induced_subgraph(path(3), [3])

    @pytest.mark.parametrize("G, expected", [(path(4), 3), (complete(3), 1),
                                             (Graph.from_edges(4, [(0, 1), (2, 3)]), math.inf),
                                             (Graph.empty(1), 0)])
    def test_diameter(self, G, expected):
        assert diameter(G) == expected

    def test_diameter_empty_graph_flagged(self):
        with pytest.warns(UserWarning):
            assert diameter(Graph.empty(0)) == math.inf

    def test_iso_permuted_p3(self):
        assert is_isomorphic(path(3), Graph.from_edges(3, [(0, 2), (2, 1)]))

    def test_iso_k3_p3(self):
        assert not is_isomorphic(complete(3), path(3))

    def test_iso_c6_two_triangles(self):
        two = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not is_isomorphic(cycle(6), two)


CORPUS = [grid(3, 3), grid(4, 2), path(7), cycle(8), star(5), complete(4),
          random_k_degenerate(12, 2, seed=1), random_grid_subgraph(4, 4, 0.6, seed=2)]


@pytest.mark.parametrize("G", CORPUS)
def test_invariants_on_corpus(G):
    for v in range(G.n):
        assert v not in G.adj[v]
        assert list(G.adj[v]) == sorted(set(G.adj[v]))
        for u in G.adj[v]:
            assert v in G.adj[u]
    assert induced_subgraph(G, range(G.n))[0] == G
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        assert diameter(G) == naive_diameter(G)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_diameter_matches_floyd_warshall(G):
    if G.n:
        assert diameter(G) == naive_diameter(G)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_isomorphism_matches_permutation_search(G1, G2):
    assert is_isomorphic(G1, G2) == iso_by_permutation(G1, G2)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7), st.permutations(range(7)))
def test_isomorphic_to_relabelled_copy(G, perm):
    perm = [p for p in perm if p < G.n]
    H = Graph.from_edges(G.n, [(perm[u], perm[v]) for u, v in G.edges()])
    assert is_isomorphic(G, H)


def test_iso_on_small_corpus_pairs():
    small = [H for H in CORPUS if H.n <= 7] + [path(4), star(3), cycle(4), Graph.empty(4)]
    for a in small:
        for b in small:
            assert is_isomorphic(a, b) == iso_by_permutation(a, b)


def test_degenerate_generator_bounds_wcol1():
    G = random_k_degenerate(40, 3, seed=5)
    # reversed peeling order has every vertex with <= 3 earlier neighbours
    assert wcol_of_ordering(G, degeneracy_ordering(G, reverse=True), 1) <= 4
