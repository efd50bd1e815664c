import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from tga.generators import enumerate_exceptional_pairs
from tga.graph import Edge, GraphError, parse_graph
from tga.semigroup import integer_membership
from tga.spectra import AdmissibleSubgraph, CapExceededError, check_laurent, \
    enumerate_admissible, is_admissible, laurent_free_generators, prime_generators
from tga.terms import generator_weight


def edges(g, text):
    out = []
    for item in text.split():
        a, b = item.split("-")
        out.append(g.edge(g.index(a), g.index(b)))
    return out


def test_admissible_examples(c4):
    assert not is_admissible(edges(c4, "a-b c-d"), c4)
    assert is_admissible(c4.edges, c4)
    assert is_admissible(edges(c4, "a-b b-c"), c4)


def test_admissible_rejects_foreign_edges(c4):
    with pytest.raises(GraphError):
        is_admissible([Edge.of(0, 2)], c4)


def test_enumerate_counts(c4, g_loops):
    assert len(enumerate_admissible(c4)) == 10
    assert len(enumerate_admissible(parse_graph("a b\nb c\nc a"))) == 8
    assert len(enumerate_admissible(g_loops)) == 64


def test_cap(c4):
    with pytest.raises(CapExceededError):
        enumerate_admissible(c4, cap=3)


def test_prime_generators(c4):
    full = AdmissibleSubgraph(c4, frozenset(c4.edges))
    assert prime_generators(full).generators == ()
    assert prime_generators(AdmissibleSubgraph(c4, frozenset())).generators == c4.edges
    k = AdmissibleSubgraph(c4, frozenset(edges(c4, "a-b b-c")))
    assert set(prime_generators(k).generators) == set(edges(c4, "c-d a-d"))
    with pytest.raises(GraphError):
        prime_generators(AdmissibleSubgraph(c4, frozenset(edges(c4, "a-b c-d"))))


def test_laurent_examples(c4, g_loops):
    tri = parse_graph("a b\nb c\nc a")
    assert laurent_free_generators(tri.edges, tri) == sorted(tri.edges)
    basis = laurent_free_generators(c4.edges, c4)
    assert len(basis) == 3 and check_laurent(c4.edges, basis, c4) == (True, True)
    basis = laurent_free_generators(g_loops.edges, g_loops)
    assert [g_loops.edge_name(e) for e in basis] == ["x1-x1", "x1-x4", "x2-x4", "x3-x4"]
    assert check_laurent(g_loops.edges, basis, g_loops) == (True, True)


def test_dot_and_json(c4):
    k = AdmissibleSubgraph(c4, frozenset(edges(c4, "a-b b-c")))
    dot = k.to_dot()
    assert dot.startswith("graph K {") and dot.count("style=dashed") == 2
    assert k.to_json() == {"edges": ["a-b", "b-c"], "vertices": ["a", "b", "c"]}


def _size(g, k):
    import networkx as nx

    h = nx.Graph()
    h.add_edges_from((e.u, e.v) for e in k)
    nb = sum(1 for part in nx.connected_components(h)
             if not nx.is_bipartite(h.subgraph(part)) or any(e.is_loop and e.u in part for e in k))
    return h.number_of_nodes() - nx.number_connected_components(h) + nb


@given(graphs(max_vertices=5))
def test_trivial_subsets_admissible(g):
    assert is_admissible([], g) and is_admissible(g.edges, g)


@given(graphs(max_vertices=5).filter(lambda g: len(g.edges) <= 9))
def test_enumeration_is_power_set_filter(g):
    found = {s.edges for s in enumerate_admissible(g)}
    m = len(g.edges)
    brute = {frozenset(g.edges[i] for i in range(m) if mask >> i & 1) for mask in range(1 << m)}
    assert found == {k for k in brute if is_admissible(k, g)}


@given(graphs(max_vertices=6), st.data())
def test_laurent_random_subsets(g, data):
    k = data.draw(st.sets(st.sampled_from(g.edges))) if g.edges else set()
    basis = laurent_free_generators(k, g)
    assert len(basis) == _size(g, k)
    assert check_laurent(k, basis, g) == (True, True) or not k


@given(graphs(max_vertices=6))
def test_pair_squares_lie_in_edge_semigroup(g):
    for p in enumerate_exceptional_pairs(g):
        w = generator_weight(g, p)
        assert integer_membership(tuple(2 * x for x in w), g)
