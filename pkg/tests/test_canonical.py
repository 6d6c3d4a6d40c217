import itertools
import networkx as nx
import pytest
from hypothesis import given, settings as hyp_settings, strategies as st
from src.graph.canonical import are_isomorphic, certificate
from src.graph.graph import Graph
from src.utils.errors import TooLarge


def brute_force_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    return any(a.relabel(list(perm)) == b for perm in itertools.permutations(range(a.n)))


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edge_list(n, chosen)


@given(small_graphs(), st.randoms(use_true_random=False))
@hyp_settings(max_examples=150, deadline=None)
def test_certificate_invariant_under_relabelling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert certificate(g) == certificate(g.relabel(perm))


@given(small_graphs(max_n=6), small_graphs(max_n=6))
@hyp_settings(max_examples=150, deadline=None)
def test_certificate_matches_brute_force(a, b):
    assert (certificate(a) == certificate(b)) == brute_force_isomorphic(a, b)


def test_all_graphs_on_five_vertices_split_into_34_classes():
    pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    classes = set()
    for mask in range(1 << len(pairs)):
        g = Graph.from_edge_list(5, [p for k, p in enumerate(pairs) if mask >> k & 1])
        classes.add(certificate(g))
    assert len(classes) == 34


def test_regular_graphs_are_distinguished():
    # C6 and two disjoint triangles are both 2-regular on 6 vertices
    c6 = Graph.from_edge_list(6, [(i, (i + 1) % 6) for i in range(6)])
    triangles = Graph.from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert certificate(c6) != certificate(triangles)
    assert not are_isomorphic(c6, triangles)


def test_petersen_against_networkx():
    petersen = Graph.from_networkx(nx.petersen_graph())
    relabelled = petersen.relabel([3, 7, 1, 9, 0, 5, 2, 8, 6, 4])
    assert are_isomorphic(petersen, relabelled)
    assert nx.is_isomorphic(petersen.to_networkx(), relabelled.to_networkx())


def test_certificate_hex_and_order():
    a = certificate(Graph.from_edge_list(2, []))
    b = certificate(Graph.from_edge_list(2, [(0, 1)]))
    assert a != b
    assert a < b
    assert a.hex().startswith("02")


def test_certificate_budget():
    with pytest.raises(TooLarge):
        certificate(Graph.from_edge_list(13, []), max_order=12)
