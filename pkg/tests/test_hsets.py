import pytest
from hypothesis import given

import oracles as O
from corpus import corpus, graph_and_subset, row_finite_corpus
from lpagraph import (CapExceededError, Graph, HSet,
                      NotHereditarySaturatedError, annihilator_set,
                      dcc_closure, double_annihilator, hs_closure,
                      is_hereditary, is_regular_ideal_set, is_saturated, join,
                      lattice, meet, quotient)
from lpagraph.hsets import INFINITE_EMITTER_WARNING, saturation_layers

S = frozenset


def test_predicate_examples(fork):
    assert is_hereditary(fork, {"u"})
    assert not is_hereditary(fork, {"v"})
    assert is_saturated(fork, {"u", "w"})
    # saturated without being hereditary: v still has w outside
    assert is_saturated(fork, {"v", "u"}) and not is_hereditary(fork, {"v", "u"})
    assert not is_saturated(Graph(["a", "b"], [("e", "a", "b")]), {"b"})


def test_hs_closure_examples(fork, fiber, gshift):
    assert hs_closure(fork, {"u"}) == {"u"}
    assert hs_closure(fiber, {"u"}) == {"u", "v"}
    assert hs_closure(fork, set()) == S()
    # u2 -> u3 only, u1 -> u2 only: saturation climbs the path
    assert hs_closure(gshift, {"u3"}) == {"u1", "u2", "u3"}
    assert len(saturation_layers(gshift, {"u3"})) == 3


def test_hset_validates(fork):
    with pytest.raises(NotHereditarySaturatedError, match="not hereditary"):
        HSet(fork, {"v"})
    g = Graph(["a", "b"], [("e", "a", "b")])
    with pytest.raises(NotHereditarySaturatedError, match="not saturated"):
        HSet(g, {"b"})
    H = HSet(fork, {"u"})
    assert H == {"u"} and H.to_json() == {"hset": ["u"], "hereditary": True,
                                          "saturated": True, "warnings": []}


def test_warning_on_infinite_emitters(fiber):
    assert hs_closure(fiber, {"v"}).warnings == [INFINITE_EMITTER_WARNING]


def test_quotient_examples(gmix, chain4, fork):
    q = quotient(gmix, {"w"}).quotient
    assert q.vertices == ("u", "v")
    assert [(e.name, e.source, e.target) for e in q.edges] == [
        ("a", "u", "u"), ("b", "u", "v"), ("c", "v", "v")]
    assert quotient(fork, set()).quotient == fork
    q = quotient(chain4, {"v1"}).quotient
    assert q.vertices == ("v2", "v3", "v4")
    assert not q.has_edge("e2") and q.has_edge("l2")


def test_quotient_keeps_only_original_edges():
    for g in row_finite_corpus():
        for H in lattice(g):
            q = quotient(g, H).quotient
            assert set(q.vertices) == g.vertex_set - H
            for e in q.edges:
                assert g.edge(e.name) == e and e.source not in H and e.target not in H


def test_lattice_examples(fork, chain4):
    assert lattice(fork) == [S(), S("u"), S("w"), S("uw"), S("vuw")]
    assert lattice(Graph(["v"])) == [S(), S("v")]
    assert lattice(chain4) == [S(), S({"v1"}), S({"v1", "v2"}),
                               S({"v1", "v2", "v3"}), chain4.vertex_set]


def test_lattice_cap():
    with pytest.raises(CapExceededError):
        lattice(Graph([f"x{i}" for i in range(17)]))


def test_lattice_matches_brute_force_on_corpus():
    for g in corpus():
        assert set(lattice(g)) == O.lattice(g)


def test_meet_join_examples(fork):
    assert meet(fork, {"u"}, {"w"}) == S()
    assert join(fork, {"u"}, {"w"}) == {"u", "w"}
    uw = join(fork, {"u"}, {"w"})
    assert join(fork, uw, uw) == uw
    for H in lattice(fork):
        assert join(fork, H, set()) == H


def test_absorption_laws_on_corpus():
    for g in corpus(size=120):
        L = lattice(g)
        for A in L:
            for B in L:
                assert meet(g, A, join(g, A, B)) == A
                assert join(g, A, meet(g, A, B)) == A


def test_annihilator_examples(fork, gmix):
    assert annihilator_set(fork, {"u"}) == {"w"}
    assert annihilator_set(fork, set()) == fork.vertex_set
    assert annihilator_set(gmix, {"w"}) == S()
    assert double_annihilator(fork, {"u"}) == {"u"}
    assert is_regular_ideal_set(fork, {"u"})
    assert double_annihilator(fork, set()) == S() and is_regular_ideal_set(fork, set())
    assert double_annihilator(gmix, {"w"}) == gmix.vertex_set
    assert not is_regular_ideal_set(gmix, {"w"})


@given(graph_and_subset(max_vertices=7))
def test_hs_closure_is_least_hs_superset(gx):
    g, X = gx
    H = hs_closure(g, X)
    assert X <= H
    assert O.is_hereditary(g, H) and O.is_saturated(g, H)
    assert H == O.hs_closure(g, X)
    assert hs_closure(g, H) == H


@given(graph_and_subset(max_vertices=7))
def test_hs_closure_monotone(gx):
    g, X = gx
    for v in g.vertices:
        assert hs_closure(g, X) <= hs_closure(g, X | {v})


def test_annihilator_properties_on_corpus():
    for g in corpus():
        for H in lattice(g):
            A = annihilator_set(g, H)
            assert O.is_hereditary(g, A) and O.is_saturated(g, A)
            AA = double_annihilator(g, H)
            assert H <= AA <= dcc_closure(g, H)
            assert annihilator_set(g, AA) == A
            assert AA == O.exterior(g, O.exterior(g, H))
            assert is_regular_ideal_set(g, H) == (O.exterior(g, O.exterior(g, H)) <= H)


def test_quotient_lattice_correspondence():
    for g in row_finite_corpus():
        L = lattice(g)
        for H in L:
            q = quotient(g, H).quotient
            above = {S(T - H) for T in L if H <= T}
            assert above == set(lattice(q))
