"""The DCC topology on the vertex set of a graph.

The closure of ``A`` is the set of vertices that connect to ``A``.  Closed
sets are therefore exactly the sets closed under taking predecessors, and
open sets (their complements) are the hereditary sets.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError, DomainError, InvariantError, UnknownVertexError
from .graph import Graph, reaching, tree

DEFAULT_CAP = 20


def dcc_closure(g: Graph, A) -> frozenset:
    return reaching(g, A)


def is_closed(g: Graph, A) -> bool:
    A = g.check(A)
    return dcc_closure(g, A) == A


def is_open(g: Graph, A) -> bool:
    return is_closed(g, g.complement(A))


def is_clopen(g: Graph, A) -> bool:
    return is_closed(g, A) and is_open(g, A)


def exterior(g: Graph, A) -> frozenset:
    """Vertices that do not connect to ``A``."""
    return g.complement(dcc_closure(g, A))


def interior(g: Graph, A) -> frozenset:
    return g.complement(dcc_closure(g, g.complement(A)))


def boundary(g: Graph, A) -> frozenset:
    A = g.check(A)
    return dcc_closure(g, A) & dcc_closure(g, g.complement(A))


def _check_cap(g, cap):
    if len(g) > cap:
        raise CapExceededError(len(g), cap, "closed-set enumeration")


def iter_closed_sets(g: Graph, cap: int = DEFAULT_CAP):
    """Yield every closed set, ordered by size and then lexicographically.

    Lexicographic order compares the declaration indices of the members.
    Sets are produced lazily, one size class at a time, by a backtracking
    search that prunes on the predecessor-closure condition.
    """
    _check_cap(g, cap)
    verts = g.vertices
    n = len(verts)
    preds = [frozenset(g.index(p) for p in g.predecessors(v)) for v in verts]
    reach = [frozenset(g.index(w) for w in tree(g, {v})) for v in verts]

    def extend(k, start, chosen, skipped):
        if len(chosen) == k:
            # every vertex after the last choice is skipped too
            rest = set(range(start, n))
            for j in rest | skipped:
                if reach[j] & chosen:
                    return
            yield frozenset(verts[i] for i in chosen)
            return
        need = k - len(chosen)
        for i in range(start, n - need + 1):
            # vertices start..i-1 become skipped
            newly = range(start, i)
            if any(reach[j] & chosen for j in newly):
                # skipping j while j reaches a chosen vertex can never be closed
                return
            if preds[i] & (skipped | set(newly)):
                continue
            yield from extend(k, i + 1, chosen | {i}, skipped | set(newly))

    for k in range(n + 1):
        yield from extend(k, 0, frozenset(), frozenset())


def closed_sets(g: Graph, cap: int = DEFAULT_CAP) -> list:
    return list(iter_closed_sets(g, cap))


def is_topologically_connected(g: Graph) -> bool:
    """Connectedness in the DCC topology.

    Grows the smallest clopen set containing the first vertex (closing under
    both closure and tree until stable) and asks whether it is everything.
    The empty graph is reported as not connected.
    """
    if not len(g):
        return False
    current = frozenset(g.vertices[:1])
    while True:
        grown = dcc_closure(g, current) | tree(g, current)
        if grown == current:
            break
        current = grown
    return current == g.vertex_set


def is_dense(g: Graph, H) -> bool:
    """Density of a hereditary set ``H``; equivalent to density of the ideal I(H)."""
    H = g.check(H)
    for v in H:
        if not g.successors(v) <= H:
            raise DomainError(f"set is not hereditary: {v} leaves it")
    return dcc_closure(g, H) == g.vertex_set


@dataclass(frozen=True)
class ContinuityReport:
    continuous: bool
    witness: frozenset | None = None


def _order_preserving(src, dst, vmap):
    for u in src.vertices:
        fu = vmap[u]
        down = tree(src, {u})
        dst_down = tree(dst, {fu})
        for w in down:
            if vmap[w] not in dst_down:
                return False
    return True


def continuity_check(src: Graph, dst: Graph, vmap: dict,
                     cap: int = DEFAULT_CAP) -> ContinuityReport:
    """Is ``vmap: src -> dst`` continuous for the DCC topologies?

    A reachability-preserving map is continuous, which settles the common
    case quickly.  Otherwise the closed sets of ``dst`` are scanned in
    canonical order and the first one whose preimage is not closed in
    ``src`` is returned as the witness.
    """
    missing = [u for u in src.vertices if u not in vmap]
    if missing:
        raise DomainError(f"vertex map is not total: missing {missing}")
    for u in src.vertices:
        if vmap[u] not in dst:
            raise UnknownVertexError(vmap[u])
    if _order_preserving(src, dst, vmap):
        return ContinuityReport(True)
    for S in iter_closed_sets(dst, cap):
        pre = frozenset(u for u in src.vertices if vmap[u] in S)
        if not is_closed(src, pre):
            return ContinuityReport(False, S)
    # order preservation fails only when the closure of some image point witnesses it
    raise InvariantError("reachability not preserved but no closed set refutes continuity")
