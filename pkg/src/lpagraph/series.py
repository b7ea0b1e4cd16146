"""Ascending series H⁽¹⁾ ⊆ H⁽²⁾ ⊆ ... of a hereditary saturated functor.

The quotient route builds H⁽ⁿ⁺¹⁾ from H⁽ⁿ⁾ by evaluating the base functor
on E/H⁽ⁿ⁾ and lifting the result.  For the line-point and exitless-cycle
functors there are also closed-form descriptions in terms of E alone;
:func:`cross_check_series` runs both and compares them stage by stage.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InfiniteEmitterError, InvariantError, NotHereditarySaturatedError
from .functors import Closure, FunctorExpr, Pc, Pl, p_c, p_l, parse_functor_expr
from .graph import Graph, cycle_vertices, tree
from .hsets import HSet, as_hset, hs_closure, quotient


@dataclass(frozen=True)
class SeriesResult:
    sets: list
    stabilized_at: int | None = None   # first k (1-based) with H⁽ᵏ⁾ = H⁽ᵏ⁺¹⁾
    stages: list = field(default_factory=list)   # pre-closure sets, direct routes only


def _as_expr(base):
    return parse_functor_expr(base) if isinstance(base, str) else base


def series_step(g: Graph, base: FunctorExpr, Hn) -> HSet:
    """H⁽ⁿ⁺¹⁾ = H⁽ⁿ⁾ ∪ closure of base(E/H⁽ⁿ⁾), lifted back to E."""
    Hn = as_hset(g, Hn)
    q = quotient(g, Hn)
    inner = hs_closure(q.quotient, _as_expr(base).eval(q.quotient))
    nxt = Hn | q.lift(inner)
    try:
        return HSet(g, nxt)
    except NotHereditarySaturatedError as exc:
        raise InvariantError(f"series step left the h.s. lattice: {exc}") from exc


def _iterate(first, step, n):
    sets = [first]
    stable = None
    while len(sets) < n:
        if stable is not None:
            sets.append(sets[-1])
            continue
        nxt = step(sets[-1], len(sets))
        if nxt == sets[-1]:
            stable = len(sets)
        sets.append(nxt)
    return sets, stable


def series(g: Graph, base, n: int) -> SeriesResult:
    """[H⁽¹⁾, ..., H⁽ⁿ⁾] for the base functor (auto-closed)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    base = _as_expr(base)
    first = hs_closure(g, base.eval(g))
    sets, stable = _iterate(first, lambda H, _k: series_step(g, base, H), n)
    return SeriesResult(sets, stable)


def subset_except_one(A, B) -> bool:
    """A ⊆¹ B: every member of A lies in B except at most one."""
    return len(frozenset(A) - frozenset(B)) <= 1


def _require_row_finite(g, what):
    if not g.row_finite:
        raise InfiniteEmitterError(
            f"{what} is only characterised for row-finite graphs; "
            f"infinite emitters: {' '.join(g.infinite_emitters)}")


def pl_series_direct(g: Graph, n: int) -> SeriesResult:
    """Line-point series from the acyclic-tree description.

    H⁽ᵏ⁺¹⁾ is the closure of the vertices whose tree is acyclic and in which
    every vertex has its range set inside H⁽ᵏ⁾ except for at most one vertex.
    """
    _require_row_finite(g, "the direct line-point series")
    if n < 1:
        raise ValueError("n must be >= 1")
    cyc = cycle_vertices(g)
    trees = {v: tree(g, {v}) for v in g.vertices}
    acyclic = [v for v in g.vertices if trees[v].isdisjoint(cyc)]
    stages = [p_l(g)]

    def step(H, _k):
        stage = frozenset(
            v for v in acyclic
            if all(subset_except_one(g.successors(w), H) for w in trees[v]))
        stages.append(stage)
        return hs_closure(g, stage)

    sets, stable = _iterate(hs_closure(g, p_l(g)), step, n)
    stages += [stages[-1]] * (len(sets) - len(stages))
    return SeriesResult(sets, stable, stages)


def simple_cycles(g: Graph) -> list:
    """All cycles as tuples of edges, each listed once.

    A cycle is a closed path visiting no vertex twice; parallel edges give
    distinct cycles.  Each cycle is rooted at its earliest-declared vertex.
    """
    found = []
    for root in g.vertices:
        r = g.index(root)
        path = []
        on_path = {root}

        def dfs(v):
            for e in g.out_edges(v):
                t = e.target
                if t == root:
                    found.append(tuple(path + [e]))
                elif g.index(t) > r and t not in on_path:
                    on_path.add(t)
                    path.append(e)
                    dfs(t)
                    path.pop()
                    on_path.discard(t)

        dfs(root)
    return found


def pc_series_direct(g: Graph, n: int) -> SeriesResult:
    """Exitless-cycle series from the cycle/exit description.

    H⁽ᵏ⁺¹⁾ is the closure of the vertices on some cycle all of whose exits
    have their range in H⁽ᵏ⁾.
    """
    _require_row_finite(g, "the direct exitless-cycle series")
    if n < 1:
        raise ValueError("n must be >= 1")
    cycles = []
    for c in simple_cycles(g):
        verts = frozenset(e.source for e in c)
        names = {e.name for e in c}
        exits = [e for v in verts for e in g.out_edges(v) if e.name not in names]
        cycles.append((verts, frozenset(e.target for e in exits)))
    stages = [p_c(g)]

    def step(H, _k):
        stage = set()
        for verts, exit_ranges in cycles:
            if exit_ranges <= H:
                stage |= verts
        stage = frozenset(stage)
        stages.append(stage)
        return hs_closure(g, stage)

    sets, stable = _iterate(hs_closure(g, p_c(g)), step, n)
    stages += [stages[-1]] * (len(sets) - len(stages))
    return SeriesResult(sets, stable, stages)


@dataclass(frozen=True)
class CrossCheckReport:
    which: str
    agree: bool
    first_divergence: int | None
    quotient_sets: list
    direct_sets: list
    direct_stages: list

    def lines(self, g: Graph) -> list:
        out = []
        for k, (d, q) in enumerate(zip(self.direct_sets, self.quotient_sets), start=1):
            fmt = lambda s: "{" + ",".join(g.ordered(s)) + "}"
            out.append(f"n={k} direct={fmt(d)} quotient={fmt(q)} "
                       f"agree={'yes' if d == q else 'no'}")
        return out


_WHICH = {"pl": (Pl, pl_series_direct), "pc": (Pc, pc_series_direct)}


def cross_check_series(g: Graph, which: str, n: int) -> CrossCheckReport:
    """Compare the quotient-route series with the direct description."""
    try:
        leaf, direct = _WHICH[which]
    except KeyError:
        raise ValueError(f"which must be 'pl' or 'pc', got {which!r}") from None
    d = direct(g, n)
    q = series(g, Closure(leaf), n)
    first = next((k for k, (a, b) in enumerate(zip(d.sets, q.sets), start=1)
                  if a != b), None)
    return CrossCheckReport(which, first is None, first, q.sets, d.sets, d.stages)
