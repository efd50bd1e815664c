from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from tga.generators import is_exceptional_pair
from tga.graph import Circuit, Edge, parse_graph
from tga.oracles import BoxOracle
from tga.semigroup import FarkasCertificate, NotMemberError, cone_decompose, \
    decompose_to_generators, edge_weighting_vertex_sum, independent_support, integer_membership, \
    is_member, membership
from tga.terms import Cycle, Pair, generator_weight, parse_weight

HALF = Fraction(1, 2)


def edge(g, a, b):
    return g.edge(g.index(a), g.index(b))


def test_generator_weights(g_loops):
    x1, x2, x3 = (Circuit((g_loops.index(v),)) for v in ("x1", "x2", "x3"))
    assert generator_weight(g_loops, edge(g_loops, "x1", "x1")) == (2, 0, 0, 0)
    assert generator_weight(g_loops, Cycle(x2)) == (0, 1, 0, 0)
    assert generator_weight(g_loops, Pair.of(x2, x3)) == (0, 1, 1, 0)


def test_cone_decompose_loop(g_loops):
    result = cone_decompose((2, 0, 0, 0), g_loops)
    assert result == {edge(g_loops, "x1", "x1"): 1}


def test_cone_decompose_c4_certificate(c4):
    cert = cone_decompose(parse_weight(c4, "a=1,c=1"), c4)
    assert isinstance(cert, FarkasCertificate) and cert.kind == "cone"
    assert cert.verify(c4, parse_weight(c4, "a=1,c=1"))


def test_cone_decompose_bowtie_independent(g_bowtie):
    f = (1,) * 6
    weights = cone_decompose(f, g_bowtie)
    assert not isinstance(weights, FarkasCertificate)
    assert edge_weighting_vertex_sum(g_bowtie, weights) == f
    assert independent_support(g_bowtie, weights)


def test_membership_examples(g_loops, c4, g_tri2):
    assert is_member((1, 1, 1, 1), g_loops)
    assert not is_member(parse_weight(c4, "a=1,c=1"), c4)
    f = parse_weight(g_tri2, "a=1")
    cert = membership(f, g_tri2)
    assert isinstance(cert, FarkasCertificate) and cert.verify(g_tri2, f)


def test_lattice_certificate_for_lone_loop():
    g = parse_graph("a a")
    cert = membership((1,), g)
    assert cert.kind == "lattice" and cert.values == (HALF,)
    assert cert.verify(g, (1,))
    assert cone_decompose((1,), g) == {Edge(0, 0): HALF}


def test_certificate_json(c4):
    cert = membership(parse_weight(c4, "a=1,c=1"), c4)
    data = cert.to_json(c4)
    assert data["kind"] == "cone" and set(data["values"]) == {"a", "b", "c", "d"}


def test_decompose_examples(g_loops, g_tri2, g_bowtie):
    d = decompose_to_generators((1, 1, 1, 1), g_loops)
    assert d.as_word(g_loops).format() == "e:x1-x4 p:(x2|x3)"
    d = decompose_to_generators(parse_weight(g_tri2, "a=1,b=1,c=1,d=1,e=1,f=1"), g_tri2)
    assert d.edges == () and len(d.pairs) == 1
    d = decompose_to_generators((1,) * 6, g_bowtie)
    names = sorted(g_bowtie.edge_name(e) for e in d.edges)
    assert names == ["a-b", "c-d", "e-f"] and d.pairs == ()


def test_decompose_rejects_non_member(c4):
    with pytest.raises(NotMemberError) as info:
        decompose_to_generators(parse_weight(c4, "a=1,c=1"), c4)
    assert info.value.certificate.verify(c4, parse_weight(c4, "a=1,c=1"))


def test_integer_membership_examples(g_loops):
    assert not integer_membership((0, 1, 1, 0), g_loops)
    assert integer_membership((0, 2, 2, 0), g_loops)
    assert not integer_membership((0, 0, 0, 2), g_loops)
    with pytest.raises(ValueError):
        integer_membership((0, 2, 2, 0), g_loops, bound=1)


def _weights(n):
    return st.tuples(*[st.integers(0, 2)] * n)


@given(graphs(max_vertices=5), st.data())
def test_membership_matches_box_oracle(g, data):
    f = data.draw(_weights(g.n))
    result = membership(f, g)
    assert BoxOracle(g).is_member(f) == (not isinstance(result, FarkasCertificate))
    if isinstance(result, FarkasCertificate):
        assert result.verify(g, f)
    else:
        assert edge_weighting_vertex_sum(g, result) == f
        assert all(x >= 0 for x in result.values())
        assert independent_support(g, result)
        assert integer_membership(tuple(2 * k for k in f), g)


@given(graphs(max_vertices=6), st.data())
def test_decomposition_sums_to_f(g, data):
    f = data.draw(_weights(g.n))
    if not is_member(f, g):
        return
    d = decompose_to_generators(f, g)
    assert d.weight(g) == f
    assert all(is_exceptional_pair(p.first, p.second, g) for p in d.pairs)
