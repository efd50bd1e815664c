import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from tga.graph import Circuit, GraphError, parse_graph
from tga.terms import Word, parse_word
from tga.toric import PAIR_DESTROY, PAIR_SHIFT, PAIR_SWAP, ROTATION, BinomialRelation, \
    congruence_check, connect, cycles_to_pairs, enumerate_relations, fiber_words, \
    pairs_to_cycles, saturate, verify_relation

STAR4 = "a a\nb b\nc c\nd d\na o\nb o\nc o\nd o"


def w(g, text):
    return parse_word(g, text)


def fmt(words):
    return sorted(x.format() for x in words)


def test_pairs_to_cycles(g_loops):
    assert pairs_to_cycles(w(g_loops, "p:(x2|x3)")) == w(g_loops, "c:x2 c:x3")
    assert pairs_to_cycles(w(g_loops, "e:x1-x4 p:(x2|x3)")) == w(g_loops, "e:x1-x4 c:x2 c:x3")
    assert pairs_to_cycles(Word(g_loops, [])) == Word(g_loops, [])


def test_cycles_to_pairs(g_loops):
    assert cycles_to_pairs(w(g_loops, "c:x2 c:x3")) == w(g_loops, "p:(x2|x3)")
    assert cycles_to_pairs(w(g_loops, "c:x1 c:x1")) == w(g_loops, "e:x1-x1")
    with pytest.raises(GraphError):
        cycles_to_pairs(w(g_loops, "c:x1 c:x2 c:x3"))


def test_cycles_to_pairs_explicit_matching():
    g = parse_graph(STAR4)
    a, b, c, d = (Circuit((g.index(v),)) for v in "abcd")
    word = w(g, "c:a c:b c:c c:d")
    assert cycles_to_pairs(word, [(a, c), (b, d)]) == w(g, "p:(a|c) p:(b|d)")
    with pytest.raises(GraphError):
        cycles_to_pairs(word, [(a, b)])


def test_example_relation_present(g_loops):
    rels = enumerate_relations(g_loops, max_walk=4)
    texts = {r.format() for r in rels} | {f"{r.right.format()} = {r.left.format()}" for r in rels}
    assert "e:x1-x4 p:(x2|x3) = e:x2-x4 p:(x1|x3)" in texts
    assert "e:x1-x4 p:(x1|x2) = e:x1-x1 e:x2-x4" in texts
    assert all(verify_relation(r) for r in rels)


def test_c4_single_rotation(c4):
    rels = enumerate_relations(c4, max_walk=4)
    assert [r.kind for r in rels] == [ROTATION]
    assert verify_relation(rels[0])


def test_verify_rejects_bad_relation(c4):
    bad = BinomialRelation(w(c4, "e:a-b"), w(c4, "e:b-c"), ROTATION)
    assert not verify_relation(bad)


def test_pair_swap_relations():
    g = parse_graph(STAR4)
    swaps = [r for r in enumerate_relations(g) if r.kind == PAIR_SWAP]
    assert "p:(a|b) p:(c|d) = p:(a|c) p:(b|d)" in {r.format() for r in swaps}
    assert all(verify_relation(r) for r in swaps)


def test_relation_json_and_binomial(g_loops):
    r = next(r for r in enumerate_relations(g_loops) if r.kind == PAIR_DESTROY)
    assert r.to_json()["class"] == PAIR_DESTROY
    assert " - " in r.format(binomial=True)


def test_fiber_examples(g_loops, c4):
    assert len(fiber_words((1, 1, 1, 1), g_loops, 2)) == 3
    assert fiber_words((0, 0, 0, 0), g_loops) == [Word(g_loops, [])]
    assert fmt(fiber_words((1, 1, 1, 1), c4, 2)) == ["e:a-b e:c-d", "e:a-d e:b-c"]


def test_example_fiber_one_class(g_loops):
    assert congruence_check((1, 1, 1, 1), g_loops, 2)
    assert congruence_check((1, 1, 1, 1), parse_graph("a b\nb c\nc d\nd a"), 2)


def test_each_example_relation_follows_from_the_others(g_loops):
    words = fiber_words((1, 1, 1, 1), g_loops, 2)
    inside = set(words)
    rels = [r for r in enumerate_relations(g_loops) if r.left in inside and r.right in inside]
    assert len(rels) == 3 and {r.kind for r in rels} == {PAIR_SHIFT}
    for k in range(3):
        others = rels[:k] + rels[k + 1:]
        assert len(saturate(words, others)) == 1


def test_connect_example(g_loops):
    a, b = w(g_loops, "e:x1-x4 p:(x2|x3)"), w(g_loops, "e:x2-x4 p:(x1|x3)")
    path = connect(a, b)
    assert len(path) == 1 and path[0][0].kind == PAIR_SHIFT and path[0][1] == b
    assert connect(a, w(g_loops, "e:x1-x4 e:x2-x2")) is None


@given(graphs(min_vertices=2, max_vertices=5, connected=True), st.data())
def test_relations_verify_and_fibers_connect(g, data):
    rels = enumerate_relations(g)
    assert all(verify_relation(r) for r in rels)
    gens = list(g.edges)
    chosen = data.draw(st.lists(st.sampled_from(gens), min_size=1, max_size=3))
    f = Word(g, chosen).weight
    assert congruence_check(f, g, None, rels)


@given(graphs(max_vertices=6, connected=True))
def test_pair_round_trip(g):
    from tga.generators import enumerate_exceptional_pairs

    for p in enumerate_exceptional_pairs(g):
        word = Word(g, [p])
        cyc = pairs_to_cycles(word)
        assert cyc.weight == word.weight
        assert cycles_to_pairs(cyc, [(p.first, p.second)]) == word
