"""The shift move E(u ↪ v) and checks of its DCC continuity."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CapExceededError, ShiftSpecError
from .graph import Graph, tree
from .topology import DEFAULT_CAP, is_closed, iter_closed_sets

SHIFT_EDGE = "__shift"


@dataclass(frozen=True)
class ShiftSpec:
    u: str
    v: str
    theta: dict = field(default_factory=dict)   # edge out of u -> edge out of v

    @classmethod
    def parse_map(cls, u, v, text):
        """Build from ``"f1:g1,f2:g2"`` (empty text gives the empty map)."""
        theta = {}
        for item in filter(None, (p.strip() for p in text.split(","))):
            src, sep, dst = item.partition(":")
            if not sep or not src or not dst:
                raise ShiftSpecError([f"malformed map entry {item!r}"])
            if src in theta:
                raise ShiftSpecError([f"edge {src} mapped twice"])
            theta[src] = dst
        return cls(u, v, theta)


def validate_shift(g: Graph, spec: ShiftSpec) -> list:
    """Every violated precondition, as a list of messages (empty when valid)."""
    problems = []
    for end in (spec.u, spec.v):
        if end not in g:
            problems.append(f"unknown vertex {end!r}")
    if problems:
        return problems
    if spec.u == spec.v:
        problems.append("u and v must be distinct")
    if g.is_infinite_emitter(spec.u):
        problems.append(f"{spec.u} is an infinite emitter")
    seen = {}
    for f, h in spec.theta.items():
        if not g.has_edge(f):
            problems.append(f"unknown edge {f!r}")
            continue
        if not g.has_edge(h):
            problems.append(f"unknown edge {h!r}")
            continue
        ef, eh = g.edge(f), g.edge(h)
        if ef.source != spec.u:
            problems.append(f"{f} is not an edge out of {spec.u}")
        if eh.source != spec.v:
            problems.append(f"{h} is not an edge out of {spec.v}")
        if ef.target != eh.target:
            problems.append(f"range mismatch: r({f})={ef.target} but r({h})={eh.target}")
        if h in seen:
            problems.append(f"theta not injective: {seen[h]} and {f} both map to {h}")
        seen[h] = f
    return problems


def fresh_edge_name(g: Graph, base=SHIFT_EDGE) -> str:
    name, k = base, 0
    while g.has_edge(name):
        k += 1
        name = f"{base}{k}"
    return name


def shift_graph(g: Graph, spec: ShiftSpec) -> Graph:
    """Drop the image of theta and add one fresh edge v -> u."""
    problems = validate_shift(g, spec)
    if problems:
        raise ShiftSpecError(problems)
    image = set(spec.theta.values())
    edges = [e for e in g.edges if e.name not in image]
    edges.append((fresh_edge_name(g), spec.v, spec.u))
    return Graph(g.vertices, edges, g.inf_edges)


@dataclass(frozen=True)
class ShiftContinuityReport:
    pairwise_ok: bool
    closed_sets_ok: bool | None   # None: skipped because of the cap
    failures: tuple = ()


def shift_continuity_report(g: Graph, spec: ShiftSpec,
                            cap: int = DEFAULT_CAP) -> ShiftContinuityReport:
    """Check that the identity on vertices E⁰ -> F⁰ is DCC-continuous.

    ``pairwise_ok``: every reachability u ≥ w in E survives in F.
    ``closed_sets_ok``: every closed set of F is closed in E.
    """
    F = shift_graph(g, spec)
    failures = []
    for a in g.vertices:
        lost = tree(g, {a}) - tree(F, {a})
        failures += [(a, b) for b in g.ordered(lost)]
    closed_ok = None
    try:
        closed_ok = all(is_closed(g, S) for S in iter_closed_sets(F, cap))
    except CapExceededError:
        pass
    return ShiftContinuityReport(not failures, closed_ok, tuple(failures))
