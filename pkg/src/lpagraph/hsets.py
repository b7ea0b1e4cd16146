"""Hereditary and saturated vertex sets.

A hereditary saturated set ``H`` stands in for the graded ideal I(H) of the
Leavitt path algebra.  Everything here works on vertex sets only: the ideal
lattice is the lattice of such sets, the quotient algebra is the algebra of
the quotient graph E/H, and the annihilator of I(H) is generated by the
exterior of H.

Breaking vertices are not modelled, so on graphs with infinite emitters the
set/ideal correspondence is not claimed; :class:`HSet` carries a warning in
that case.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError, InvariantError, NotHereditarySaturatedError
from .graph import Graph, tree
from .topology import exterior, iter_closed_sets

DEFAULT_LATTICE_CAP = 16

INFINITE_EMITTER_WARNING = "infinite-emitters: ideal correspondence not guaranteed"


class HSet(frozenset):
    """A vertex set certified hereditary and saturated in ``graph``.

    Behaves as a frozenset, so ``HSet(g, {"u"}) == {"u"}``.
    """

    def __new__(cls, graph: Graph, members=()):
        members = graph.check(members)
        bad = _hereditary_violation(graph, members)
        if bad is not None:
            raise NotHereditarySaturatedError(
                f"not hereditary: {bad[0]} -> {bad[1]} leaves the set")
        bad = _saturation_violation(graph, members)
        if bad is not None:
            raise NotHereditarySaturatedError(
                f"not saturated: regular vertex {bad} has every range in the set")
        self = super().__new__(cls, members)
        self.graph = graph
        return self

    def __repr__(self):
        return f"HSet({self.graph.ordered(self)})"

    @property
    def warnings(self) -> list:
        return [] if self.graph.row_finite else [INFINITE_EMITTER_WARNING]

    def ordered(self) -> list:
        return self.graph.ordered(self)

    def to_json(self) -> dict:
        return {"hset": self.ordered(), "hereditary": True, "saturated": True,
                "warnings": self.warnings}


def _hereditary_violation(g, X):
    for v in g.ordered(X):
        for w in g.ordered(g.successors(v)):
            if w not in X:
                return v, w
    return None


def _saturation_violation(g, X):
    for v in g.vertices:
        if v not in X and g.is_regular(v) and g.successors(v) <= X:
            return v
    return None


def is_hereditary(g: Graph, X) -> bool:
    return _hereditary_violation(g, g.check(X)) is None


def is_saturated(g: Graph, X) -> bool:
    return _saturation_violation(g, g.check(X)) is None


def hereditary_closure(g: Graph, X) -> frozenset:
    return tree(g, X)


def saturation_layers(g: Graph, X) -> list:
    """The chain Λ⁰ ⊆ Λ¹ ⊆ ... starting from the tree of X, up to its fixpoint.

    Λⁿ⁺¹ adds every regular vertex whose out-edges all land in Λⁿ.
    """
    layer = tree(g, X)
    layers = [layer]
    regular = [v for v in g.vertices if g.is_regular(v)]
    while True:
        added = {v for v in regular if v not in layer and g.successors(v) <= layer}
        if not added:
            return layers
        layer = layer | added
        layers.append(layer)


def hs_closure(g: Graph, X) -> HSet:
    """Smallest hereditary saturated set containing X."""
    return HSet(g, saturation_layers(g, X)[-1])


def as_hset(g: Graph, X) -> HSet:
    if isinstance(X, HSet) and X.graph is g:
        return X
    return HSet(g, X)


@dataclass(frozen=True)
class QuotientResult:
    quotient: Graph
    kept_vertices: dict   # quotient vertex -> vertex of the original graph
    removed: frozenset

    def lift(self, X) -> frozenset:
        return frozenset(self.kept_vertices[v] for v in self.quotient.check(X))


def quotient(g: Graph, H) -> QuotientResult:
    """The graph E/H: drop H and every edge whose range lies in H.

    Vertex and edge names are kept, so lifting back to E is the identity on
    names.
    """
    H = as_hset(g, H)
    keep = [v for v in g.vertices if v not in H]
    edges = [e for e in g.edges if e.target not in H]
    inf_edges = [(s, t) for s, t in g.inf_edges if t not in H]
    q = Graph(keep, edges, inf_edges)
    return QuotientResult(q, {v: v for v in keep}, frozenset(H))


def iter_lattice(g: Graph, cap: int = DEFAULT_LATTICE_CAP):
    """Yield every hereditary saturated set, by size then lexicographically.

    Hereditary sets are the complements of the DCC-closed sets, so the
    closed-set enumerator does the heavy lifting and saturation filters.
    """
    if len(g) > cap:
        raise CapExceededError(len(g), cap, "lattice enumeration")
    n = len(g)
    everything = g.vertex_set
    found = []
    for C in iter_closed_sets(g, cap=max(cap, n)):
        H = everything - C
        if is_saturated(g, H):
            found.append(HSet(g, H))
    found.sort(key=lambda H: (len(H), sorted(g.index(v) for v in H)))
    yield from found


def lattice(g: Graph, cap: int = DEFAULT_LATTICE_CAP) -> list:
    return list(iter_lattice(g, cap))


def meet(g: Graph, H1, H2) -> HSet:
    return HSet(g, as_hset(g, H1) & as_hset(g, H2))


def join(g: Graph, H1, H2) -> HSet:
    return hs_closure(g, as_hset(g, H1) | as_hset(g, H2))


def annihilator_set(g: Graph, H) -> HSet:
    """H′: the vertices that do not connect to H (generating Ann(I(H)))."""
    H = as_hset(g, H)
    ext = exterior(g, H)
    try:
        return HSet(g, ext)
    except NotHereditarySaturatedError as exc:
        raise InvariantError(f"exterior of an h.s. set is not h.s.: {exc}") from exc


def double_annihilator(g: Graph, H) -> HSet:
    return annihilator_set(g, annihilator_set(g, H))


def is_regular_ideal_set(g: Graph, H) -> bool:
    """I(H) is a regular ideal (equal to its double annihilator) iff H″ ⊆ H."""
    H = as_hset(g, H)
    return double_annihilator(g, H) <= H
