"""Finite directed multigraphs with infinite-emitter bundles.

A :class:`Graph` keeps vertices and edges in declaration order.  A vertex
that emits infinitely many parallel edges to some target is recorded as a
``(source, target)`` pair in ``inf_edges`` instead of materialising the
edges; such a bundle counts as at least one edge for reachability and as
infinitely many for degrees.

Vertex sets are plain ``frozenset`` objects of vertex names.  Whenever a set
is displayed it is listed in the graph's declaration order
(:meth:`Graph.ordered`).
"""
from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import GraphStructureError, GraphSyntaxError, UnknownVertexError

INFINITE = math.inf

VertexSet = frozenset  # frozenset[str]

_TOKEN = re.compile(r"^[^\s#,:()]+$")


class Edge(NamedTuple):
    name: str
    source: str
    target: str


class Graph:
    """Immutable directed multigraph.

    ``edges`` may be given as :class:`Edge` objects or ``(name, src, dst)``
    triples, ``inf_edges`` as ``(src, dst)`` pairs.
    """

    __slots__ = ("_vertices", "_edges", "_inf_edges", "_index", "_succ",
                 "_pred", "_out", "_in", "_emitters", "_inf_targets",
                 "_edge_by_name")

    def __init__(self, vertices: Iterable[str] = (), edges=(), inf_edges=()):
        self._vertices = tuple(vertices)
        self._edges = tuple(Edge(*e) for e in edges)
        self._inf_edges = tuple((s, t) for s, t in inf_edges)

        self._index = {}
        for i, v in enumerate(self._vertices):
            if not isinstance(v, str) or not _TOKEN.match(v):
                raise GraphStructureError(f"invalid vertex name {v!r}")
            if v in self._index:
                raise GraphStructureError(f"duplicate vertex {v!r}")
            self._index[v] = i

        self._edge_by_name = {}
        for e in self._edges:
            if not isinstance(e.name, str) or not _TOKEN.match(e.name):
                raise GraphStructureError(f"invalid edge name {e.name!r}")
            if e.name in self._edge_by_name:
                raise GraphStructureError(f"duplicate edge {e.name!r}")
            for end in (e.source, e.target):
                if end not in self._index:
                    raise GraphStructureError(
                        f"edge {e.name!r} uses undeclared vertex {end!r}")
            self._edge_by_name[e.name] = e

        if len(set(self._inf_edges)) != len(self._inf_edges):
            raise GraphStructureError("duplicate infinite bundle")
        for s, t in self._inf_edges:
            for end in (s, t):
                if end not in self._index:
                    raise GraphStructureError(
                        f"infinite bundle {s}->{t} uses undeclared vertex {end!r}")

        succ = {v: [] for v in self._vertices}
        pred = {v: [] for v in self._vertices}
        out = {v: [] for v in self._vertices}
        inn = {v: [] for v in self._vertices}
        for e in self._edges:
            succ[e.source].append(e.target)
            pred[e.target].append(e.source)
            out[e.source].append(e)
            inn[e.target].append(e)
        for s, t in self._inf_edges:
            succ[s].append(t)
            pred[t].append(s)
        self._succ = {v: frozenset(ws) for v, ws in succ.items()}
        self._pred = {v: frozenset(ws) for v, ws in pred.items()}
        self._out = {v: tuple(es) for v, es in out.items()}
        self._in = {v: tuple(es) for v, es in inn.items()}
        self._emitters = frozenset(s for s, _ in self._inf_edges)
        self._inf_targets = frozenset(t for _, t in self._inf_edges)

    # -- basic accessors -------------------------------------------------
    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def edges(self) -> tuple:
        return self._edges

    @property
    def inf_edges(self) -> tuple:
        return self._inf_edges

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self._vertices)

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, v):
        return v in self._index

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self._vertices == other._vertices
                and self._edges == other._edges
                and self._inf_edges == other._inf_edges)

    def __hash__(self):
        return hash((self._vertices, self._edges, self._inf_edges))

    def __repr__(self):
        return (f"Graph({len(self._vertices)} vertices, {len(self._edges)} edges,"
                f" {len(self._inf_edges)} infinite bundles)")

    def edge(self, name) -> Edge:
        return self._edge_by_name[name]

    def has_edge(self, name) -> bool:
        return name in self._edge_by_name

    def index(self, v) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertexError(v) from None

    def check(self, vs: Iterable[str]) -> frozenset:
        """Return ``vs`` as a frozenset, raising if a member is not a vertex."""
        vs = frozenset(vs)
        for v in vs:
            if v not in self._index:
                raise UnknownVertexError(v)
        return vs

    def ordered(self, vs: Iterable[str]) -> list:
        """Members of ``vs`` in declaration order (the canonical display order)."""
        return sorted(vs, key=self.index)

    def complement(self, vs) -> frozenset:
        return frozenset(self._vertices) - self.check(vs)

    # -- adjacency -------------------------------------------------------
    def successors(self, v) -> frozenset:
        """r(s^-1(v)) as a set; parallel edges collapse."""
        self.index(v)
        return self._succ[v]

    def predecessors(self, v) -> frozenset:
        self.index(v)
        return self._pred[v]

    def out_edges(self, v) -> tuple:
        self.index(v)
        return self._out[v]

    def in_edges(self, v) -> tuple:
        self.index(v)
        return self._in[v]

    def is_infinite_emitter(self, v) -> bool:
        self.index(v)
        return v in self._emitters

    @property
    def infinite_emitters(self) -> list:
        return [v for v in self._vertices if v in self._emitters]

    @property
    def row_finite(self) -> bool:
        return not self._inf_edges

    def out_degree(self, v):
        if self.is_infinite_emitter(v):
            return INFINITE
        return len(self._out[v])

    def in_degree(self, v):
        self.index(v)
        if v in self._inf_targets:
            return INFINITE
        return len(self._in[v])

    def is_sink(self, v) -> bool:
        return self.out_degree(v) == 0

    def is_regular(self, v) -> bool:
        d = self.out_degree(v)
        return 1 <= d < INFINITE

    def regular_vertices(self) -> list:
        return [v for v in self._vertices if self.is_regular(v)]


@dataclass(frozen=True)
class VertexProfile:
    out_degree: float
    in_degree: float
    is_sink: bool
    is_source: bool
    is_regular: bool
    is_infinite_emitter: bool
    is_bifurcation: bool
    on_cycle: bool


@dataclass(frozen=True)
class BoundaryClass:
    """Loop counts for initial/terminal vertices; ``None`` when not applicable."""
    initial: float | None
    terminal: float | None

    @property
    def label(self) -> str:
        parts = []
        if self.initial is not None:
            parts.append(f"initial({_fmt_count(self.initial)})")
        if self.terminal is not None:
            parts.append(f"terminal({_fmt_count(self.terminal)})")
        return " ".join(parts) if parts else "neither"


def _fmt_count(n):
    return "inf" if n == INFINITE else str(int(n))


# ---------------------------------------------------------------------------
# text format

def parse_graph(text: str) -> Graph:
    """Parse the line-oriented graph format.

    Directives are ``vertex <name>``, ``edge <name> <src> <dst>`` and
    ``infedge <src> <dst>``; ``#`` starts a comment.  Vertices may be declared
    after the edges that use them.
    """
    vertices, edges, inf_edges = [], [], []
    seen_v, seen_e, seen_inf = {}, {}, {}
    pending = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        kind, args = words[0], words[1:]
        if kind == "vertex":
            if len(args) != 1:
                raise GraphSyntaxError("expected 'vertex <name>'", lineno)
            name = args[0]
            _check_token(name, lineno)
            if name in seen_v:
                raise GraphSyntaxError(
                    f"duplicate vertex {name!r} (first declared on line {seen_v[name]})",
                    lineno)
            seen_v[name] = lineno
            vertices.append(name)
        elif kind == "edge":
            if len(args) != 3:
                raise GraphSyntaxError("expected 'edge <name> <src> <dst>'", lineno)
            for tok in args:
                _check_token(tok, lineno)
            name = args[0]
            if name in seen_e:
                raise GraphSyntaxError(
                    f"duplicate edge {name!r} (first declared on line {seen_e[name]})",
                    lineno)
            seen_e[name] = lineno
            edges.append(tuple(args))
            pending.append((lineno, args[1:]))
        elif kind == "infedge":
            if len(args) != 2:
                raise GraphSyntaxError("expected 'infedge <src> <dst>'", lineno)
            for tok in args:
                _check_token(tok, lineno)
            pair = tuple(args)
            if pair in seen_inf:
                raise GraphSyntaxError(
                    f"duplicate infedge {pair[0]} {pair[1]}", lineno)
            seen_inf[pair] = lineno
            inf_edges.append(pair)
            pending.append((lineno, args))
        else:
            raise GraphSyntaxError(f"unknown directive {kind!r}", lineno)
    for lineno, ends in pending:
        for v in ends:
            if v not in seen_v:
                raise GraphSyntaxError(f"undeclared vertex {v!r}", lineno)
    return Graph(vertices, edges, inf_edges)


def _check_token(tok, lineno):
    if not _TOKEN.match(tok):
        raise GraphSyntaxError(f"invalid name {tok!r}", lineno)


def to_text(g: Graph) -> str:
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"edge {e.name} {e.source} {e.target}" for e in g.edges]
    lines += [f"infedge {s} {t}" for s, t in g.inf_edges]
    return "\n".join(lines) + ("\n" if lines else "")


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def to_dot(g: Graph, name="E") -> str:
    """Graphviz digraph; each infinite bundle becomes one edge labelled ∞."""
    def q(s):
        return '"' + s.replace('"', '\\"') + '"'

    out = [f"digraph {q(name)} {{"]
    for v in g.vertices:
        out.append(f"  {q(v)};")
    for e in g.edges:
        out.append(f"  {q(e.source)} -> {q(e.target)} [label={q(e.name)}];")
    for s, t in g.inf_edges:
        out.append(f"  {q(s)} -> {q(t)} [label=\"∞\", style=bold];")
    out.append("}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# reachability

def _bfs(start, step) -> frozenset:
    seen = set(start)
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for y in step(x):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def tree(g: Graph, X) -> frozenset:
    """T(X): every vertex reachable from X by a possibly trivial path."""
    return _bfs(g.check(X), g.successors)


def reaching(g: Graph, X) -> frozenset:
    """Every vertex with a possibly trivial path into X."""
    return _bfs(g.check(X), g.predecessors)


def connects(g: Graph, u, X) -> bool:
    """``u >= X``: some vertex of X is reachable from ``u``."""
    X = g.check(X)
    g.index(u)
    if u in X:
        return True
    return not tree(g, {u}).isdisjoint(X)


# ---------------------------------------------------------------------------
# strongly connected components

def sccs(g: Graph) -> list:
    """Strongly connected components as frozensets.

    Components are listed by their earliest-declared member (Tarjan's
    algorithm, iterative).
    """
    index = {}
    low = {}
    on_stack = set()
    stack = []
    comps = []
    counter = 0
    for root in g.vertices:
        if root in index:
            continue
        work = [(root, iter(g.ordered(g.successors(root))))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(g.ordered(g.successors(w)))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                comps.append(frozenset(comp))
    comps.sort(key=lambda c: min(g.index(v) for v in c))
    return comps


def component_map(g: Graph) -> dict:
    """Vertex -> its strongly connected component."""
    return {v: c for c in sccs(g) for v in c}


def cycle_vertices(g: Graph) -> frozenset:
    """Vertices lying on some closed path (a loop counts)."""
    result = set()
    for c in sccs(g):
        if len(c) > 1:
            result |= c
        else:
            (v,) = c
            if v in g.successors(v):
                result.add(v)
    return frozenset(result)


def on_cycle(g: Graph, v) -> bool:
    g.index(v)
    return v in cycle_vertices(g)


# ---------------------------------------------------------------------------
# classification

def vertex_profile(g: Graph, v) -> VertexProfile:
    out_d = g.out_degree(v)
    in_d = g.in_degree(v)
    return VertexProfile(
        out_degree=out_d,
        in_degree=in_d,
        is_sink=out_d == 0,
        is_source=in_d == 0,
        is_regular=1 <= out_d < INFINITE,
        is_infinite_emitter=out_d == INFINITE,
        is_bifurcation=out_d >= 2,
        on_cycle=on_cycle(g, v),
    )


def classify_boundary_vertices(g: Graph):
    """Initial and terminal n-looped vertices.

    Returns ``(classes, summary)`` where ``classes`` maps each vertex to a
    :class:`BoundaryClass` and ``summary`` is
    ``{"initial": {n: count}, "terminal": {n: count}}``.  The counts are the
    quantities preserved by homeomorphisms of the DCC topology.
    """
    classes = {}
    summary = {"initial": {}, "terminal": {}}
    for v in g.vertices:
        initial = terminal = None
        if g.predecessors(v) <= {v}:
            initial = g.in_degree(v)
        if g.successors(v) <= {v}:
            terminal = g.out_degree(v)
        classes[v] = BoundaryClass(initial, terminal)
        if initial is not None:
            summary["initial"][initial] = summary["initial"].get(initial, 0) + 1
        if terminal is not None:
            summary["terminal"][terminal] = summary["terminal"].get(terminal, 0) + 1
    for key in summary:
        summary[key] = dict(sorted(summary[key].items()))
    return classes, summary


def exitless_cycle_vertices(g: Graph) -> frozenset:
    """Vertices on cycles without exits.

    Such a cycle is exactly a strongly connected component that contains a
    cycle and in which every vertex emits exactly one (finite) edge.
    """
    result = set()
    cyc = cycle_vertices(g)
    for c in sccs(g):
        if next(iter(c)) not in cyc:
            continue
        if all(g.out_degree(v) == 1 for v in c):
            result |= c
    return frozenset(result)


def condition_L(g: Graph) -> bool:
    """True iff every cycle has an exit."""
    return not exitless_cycle_vertices(g)


def opposite(g: Graph) -> Graph:
    return Graph(g.vertices,
                 [(e.name, e.target, e.source) for e in g.edges],
                 [(t, s) for s, t in g.inf_edges])


def rename(g: Graph, mapping: dict) -> Graph:
    """Relabel vertices through the bijection ``mapping`` (edge names kept)."""
    if len(set(mapping[v] for v in g.vertices)) != len(g.vertices):
        raise GraphStructureError("vertex renaming is not injective")
    return Graph([mapping[v] for v in g.vertices],
                 [(e.name, mapping[e.source], mapping[e.target]) for e in g.edges],
                 [(mapping[s], mapping[t]) for s, t in g.inf_edges])
