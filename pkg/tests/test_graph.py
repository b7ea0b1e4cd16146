import math
import random

import pytest
from hypothesis import given, strategies as st

import oracles as O
from corpus import graph_and_subset, graphs, random_graph
from lpagraph import (INFINITE, Graph, GraphStructureError, GraphSyntaxError,
                      UnknownVertexError, classify_boundary_vertices,
                      condition_L, connects, dcc_closure, opposite, parse_graph,
                      rename, sccs, to_dot, to_text, tree, vertex_profile)
from lpagraph.graph import component_map, cycle_vertices


# --- parsing ---------------------------------------------------------------

def test_parse_fork(fork):
    assert fork.vertices == ("v", "u", "w")
    assert len(fork) == 3 and len(fork.edges) == 3
    assert fork.edge("f").source == "v" and fork.edge("f").target == "u"


def test_parse_empty():
    g = parse_graph("")
    assert len(g) == 0 and g.edges == () and g.inf_edges == ()


def test_parse_fiber(fiber):
    assert list(fiber.infinite_emitters) == ["u"]
    assert not fiber.row_finite


def test_parse_comments_and_forward_declaration():
    g = parse_graph("# header\nedge a x y  # trailing\n\nvertex x\nvertex y\n")
    assert g.vertices == ("x", "y")
    assert g.edge("a").target == "y"


@pytest.mark.parametrize("text, line, fragment", [
    ("vertex a\nvertex a", 2, "duplicate vertex"),
    ("vertex a\nedge e a b", 2, "undeclared vertex"),
    ("vertex a\nedge e a a\nedge e a a", 3, "duplicate edge"),
    ("vertex a\nbogus a", 2, "unknown directive"),
    ("vertex a b", 1, "expected 'vertex <name>'"),
    ("vertex a\nedge e a", 2, "expected 'edge"),
    ("vertex a\ninfedge a", 2, "expected 'infedge"),
    ("vertex a\ninfedge a a\ninfedge a a", 3, "duplicate infedge"),
    ("vertex a,b", 1, "invalid name"),
])
def test_parse_errors(text, line, fragment):
    with pytest.raises(GraphSyntaxError) as exc:
        parse_graph(text)
    assert exc.value.line == line
    assert fragment in str(exc.value)
    assert str(exc.value).startswith(f"line {line}:")


def test_structure_errors():
    with pytest.raises(GraphStructureError):
        Graph(["a", "a"])
    with pytest.raises(GraphStructureError):
        Graph(["a"], [("e", "a", "b")])
    with pytest.raises(GraphStructureError):
        Graph(["a"], [("e", "a", "a"), ("e", "a", "a")])
    with pytest.raises(UnknownVertexError):
        Graph(["a"]).index("zz")


@given(graphs())
def test_text_round_trip(g):
    assert parse_graph(to_text(g)) == g


def test_fixture_round_trip(fork, gmix, fiber, gshift, fshift, chain4):
    for g in (fork, gmix, fiber, gshift, fshift, chain4):
        assert parse_graph(to_text(g)) == g


# --- reachability ----------------------------------------------------------

def test_tree_examples(fork, fiber):
    assert tree(fork, {"v"}) == {"v", "u", "w"}
    assert tree(fork, set()) == frozenset()
    assert tree(fiber, {"u"}) == {"u", "v"}


def test_connects_examples(gshift, fork):
    assert connects(gshift, "u1", {"u3"})
    assert not connects(fork, "w", {"u"})
    for v in fork.vertices:
        assert connects(fork, v, {v})


@given(graph_and_subset())
def test_tree_hereditary_and_matches_oracle(gx):
    g, X = gx
    T = tree(g, X)
    assert X <= T
    assert O.is_hereditary(g, T)
    assert T == O.tree(g, X)


@given(graphs(), st.data())
def test_tree_union(g, data):
    pick = st.sets(st.sampled_from(g.vertices)) if len(g) else st.just(set())
    X, Y = data.draw(pick), data.draw(pick)
    assert tree(g, X | Y) == tree(g, X) | tree(g, Y)


@given(graph_and_subset(min_vertices=1))
def test_connects_iff_in_closure(gx):
    g, X = gx
    C = dcc_closure(g, X)
    for u in g.vertices:
        assert connects(g, u, X) == (u in C)


# --- profiles and classification -------------------------------------------

def test_vertex_profile_examples(fork, fiber):
    p = vertex_profile(fork, "v")
    assert p.out_degree == 3 and p.is_regular and p.is_bifurcation and p.on_cycle
    p = vertex_profile(fork, "u")
    assert p.is_sink and not p.is_regular and not p.on_cycle
    p = vertex_profile(fiber, "u")
    assert p.is_infinite_emitter and not p.is_regular
    assert p.out_degree == INFINITE == math.inf


def test_boundary_classes_fork(fork):
    classes, summary = classify_boundary_vertices(fork)
    assert classes["v"].label == "initial(1)"
    assert classes["u"].label == "terminal(0)"
    assert classes["w"].label == "terminal(0)"
    assert summary == {"initial": {1: 1}, "terminal": {0: 2}}


def test_boundary_classes_rose_and_isolated():
    g = Graph(["v"], [("a", "v", "v"), ("b", "v", "v"), ("c", "v", "v")])
    assert classify_boundary_vertices(g)[0]["v"].label == "initial(3) terminal(3)"
    g = Graph(["x"])
    assert classify_boundary_vertices(g)[0]["x"].label == "initial(0) terminal(0)"


def test_boundary_class_neither(gshift):
    classes, _ = classify_boundary_vertices(gshift)
    assert classes["u2"].label == "neither"


@given(graphs(), st.randoms(use_true_random=False))
def test_boundary_counts_invariant_under_renaming(g, rnd):
    targets = [f"x{i}" for i in range(len(g))]
    rnd.shuffle(targets)
    h = rename(g, dict(zip(g.vertices, targets)))
    assert classify_boundary_vertices(g)[1] == classify_boundary_vertices(h)[1]


def test_condition_l(fork, chain4):
    assert condition_L(fork)
    assert not condition_L(chain4)
    assert condition_L(Graph(["a", "b"], [("e", "a", "b")]))


# --- opposite, sccs, dot ---------------------------------------------------

@given(graphs())
def test_opposite_involution(g):
    assert opposite(opposite(g)) == g


def test_sccs_examples(fshift, fork):
    assert sccs(fshift) == [{"v1"}, {"v2", "v3"}]
    assert sccs(fork) == [{"v"}, {"u"}, {"w"}]


@given(graphs())
def test_sccs_partition_by_mutual_reachability(g):
    comps = sccs(g)
    assert set(map(frozenset, comps)) == O.scc_partition(g)
    assert sum(len(c) for c in comps) == len(g)
    cm = component_map(g)
    for c in comps:
        for v in c:
            assert cm[v] == c


@given(graphs())
def test_cycle_vertices_match_oracle(g):
    S = O.strict_reach(g)
    assert cycle_vertices(g) == {v for v in g.vertices if S[v][v]}


def test_sccs_deterministic_large():
    rng = random.Random(7)
    g = random_graph(rng, 40, 80, min_vertices=40)
    assert sccs(g) == sccs(Graph(g.vertices, g.edges))
    assert set(map(frozenset, sccs(g))) == O.scc_partition(g)


def test_to_dot(fork, fiber):
    dot = to_dot(fork, "fork")
    assert dot.startswith('digraph "fork" {')
    assert '"v" -> "u" [label="f"];' in dot
    assert "∞" in to_dot(fiber) and "∞" not in dot
