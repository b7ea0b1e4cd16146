"""Point functors and a small expression language over them.

Built-in leaves::

    Pl      line points
    Pc      vertices on cycles without exits
    Pec     vertices on extreme cycles
    Pbinf   vertices whose tree contains an infinite emitter
    Plce    Pl ∪ Pc ∪ Pec
    Pbpinf  vertices with pure infinite bifurcations, ext(Plce)
    Empty, Full

Combinators: ``closure(e)`` (hereditary saturated closure), ``ext(e)``,
``union(a,b)``, ``inter(a,b)``, ``star(a,b)`` and ``series(e,n)``.

On a finite vertex set a tree can only hold infinitely many bifurcations
through an infinite emitter, so ``Pbinf`` reduces to reachability of an
emitter and is empty on row-finite graphs.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import LPAGraphError
from .graph import (Graph, component_map, cycle_vertices,
                    exitless_cycle_vertices, reaching, tree)
from .hsets import HSet, hs_closure, quotient
from .topology import exterior


class FunctorSyntaxError(LPAGraphError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} at position {position}")


# ---------------------------------------------------------------------------
# built-in point functors

def p_l(g: Graph) -> frozenset:
    """Line points: no bifurcation, cycle or infinite emitter anywhere below."""
    cyc = cycle_vertices(g)
    bad = frozenset(v for v in g.vertices if v in cyc or g.out_degree(v) > 1)
    # v is a line point iff its tree avoids ``bad`` iff v cannot reach ``bad``
    return g.vertex_set - reaching(g, bad)


def p_c(g: Graph) -> frozenset:
    return exitless_cycle_vertices(g)


def p_ec(g: Graph) -> frozenset:
    """Vertices on extreme cycles.

    v qualifies when it lies on a cycle that has an exit and every vertex of
    its tree connects back to it, i.e. its strongly connected component is
    closed under successors and is not a bare exitless cycle.
    """
    cyc = cycle_vertices(g)
    comp = component_map(g)
    exitless = exitless_cycle_vertices(g)
    result = set()
    for v in g.vertices:
        if v not in cyc or v in exitless:
            continue
        c = comp[v]
        if all(g.successors(w) <= c for w in c):
            result.add(v)
    return frozenset(result)


def p_binf(g: Graph) -> frozenset:
    return reaching(g, g.infinite_emitters)


def p_lce(g: Graph) -> frozenset:
    return p_l(g) | p_c(g) | p_ec(g)


def p_bpinf(g: Graph) -> frozenset:
    return exterior(g, p_lce(g))


# ---------------------------------------------------------------------------
# expression AST

class FunctorExpr:
    """Base class for expression nodes."""

    def eval(self, g: Graph) -> frozenset:
        return evaluate(self, g)


@dataclass(frozen=True)
class Leaf(FunctorExpr):
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Closure(FunctorExpr):
    arg: FunctorExpr

    def __str__(self):
        return f"closure({self.arg})"


@dataclass(frozen=True)
class Ext(FunctorExpr):
    arg: FunctorExpr

    def __str__(self):
        return f"ext({self.arg})"


@dataclass(frozen=True)
class Union(FunctorExpr):
    left: FunctorExpr
    right: FunctorExpr

    def __str__(self):
        return f"union({self.left},{self.right})"


@dataclass(frozen=True)
class Inter(FunctorExpr):
    left: FunctorExpr
    right: FunctorExpr

    def __str__(self):
        return f"inter({self.left},{self.right})"


@dataclass(frozen=True)
class Star(FunctorExpr):
    """``Star(outer, inner)`` is outer ∗ inner: apply ``outer`` to E/inner(E)."""
    outer: FunctorExpr
    inner: FunctorExpr

    def __str__(self):
        return f"star({self.outer},{self.inner})"


@dataclass(frozen=True)
class Series(FunctorExpr):
    base: FunctorExpr
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"series index must be a positive integer, got {self.n!r}")

    def __str__(self):
        return f"series({self.base},{self.n})"


BUILTINS = {
    "Pl": p_l,
    "Pc": p_c,
    "Pec": p_ec,
    "Pbinf": p_binf,
    "Plce": p_lce,
    "Pbpinf": p_bpinf,
    "Empty": lambda g: frozenset(),
    "Full": lambda g: g.vertex_set,
}
_CANONICAL = {name.lower(): name for name in BUILTINS}

Pl, Pc, Pec, Pbinf, Plce, Pbpinf, Empty, Full = (Leaf(n) for n in BUILTINS)

_UNARY = {"closure": Closure, "ext": Ext}
_BINARY = {"union": Union, "inter": Inter, "star": Star}


# ---------------------------------------------------------------------------
# parser

_TOKENS = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<punct>[(),]))")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKENS.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise FunctorSyntaxError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def parse_functor_expr(text: str) -> FunctorExpr:
    """Parse an expression such as ``star(closure(Pc),closure(Pl))``.

    Names are case-insensitive and whitespace is ignored.
    """
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos]

    def take(kind, value=None):
        nonlocal pos
        tok = tokens[pos]
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            got = tok[1] or "end of input"
            raise FunctorSyntaxError(f"expected {want!r}, got {got!r}", tok[2])
        pos += 1
        return tok

    def expr():
        kind, word, at = take("name")
        key = word.lower()
        if key in _CANONICAL:
            return Leaf(_CANONICAL[key])
        if key in _UNARY:
            take("punct", "(")
            arg = expr()
            take("punct", ")")
            return _UNARY[key](arg)
        if key in _BINARY:
            take("punct", "(")
            left = expr()
            take("punct", ",")
            right = expr()
            take("punct", ")")
            return _BINARY[key](left, right)
        if key == "series":
            take("punct", "(")
            base = expr()
            take("punct", ",")
            _, num, num_at = take("num")
            take("punct", ")")
            if int(num) < 1:
                raise FunctorSyntaxError("series index must be >= 1", num_at)
            return Series(base, int(num))
        raise FunctorSyntaxError(f"unknown functor {word!r}", at)

    result = expr()
    if peek()[0] != "end":
        raise FunctorSyntaxError(f"trailing input {peek()[1]!r}", peek()[2])
    return result


# ---------------------------------------------------------------------------
# evaluation

def _hs(expr, g) -> HSet:
    """Evaluate ``expr`` and close it; Star and Series only see h.s. sets."""
    return hs_closure(g, evaluate(expr, g))


def star_eval(outer: FunctorExpr, inner: FunctorExpr, g: Graph) -> HSet:
    """(outer ∗ inner)(E) = inner(E) ∪ outer(E/inner(E)), lifted by name."""
    H1 = _hs(inner, g)
    q = quotient(g, H1)
    H2 = _hs(outer, q.quotient)
    return HSet(g, H1 | q.lift(H2))


def evaluate(expr: FunctorExpr, g: Graph) -> frozenset:
    if isinstance(expr, Leaf):
        return frozenset(BUILTINS[expr.name](g))
    if isinstance(expr, Closure):
        return hs_closure(g, evaluate(expr.arg, g))
    if isinstance(expr, Ext):
        return exterior(g, evaluate(expr.arg, g))
    if isinstance(expr, Union):
        return evaluate(expr.left, g) | evaluate(expr.right, g)
    if isinstance(expr, Inter):
        return evaluate(expr.left, g) & evaluate(expr.right, g)
    if isinstance(expr, Star):
        return star_eval(expr.outer, expr.inner, g)
    if isinstance(expr, Series):
        from .series import series
        return series(g, expr.base, expr.n).sets[-1]
    raise TypeError(f"not a functor expression: {expr!r}")


def eval_text(text: str, g: Graph) -> frozenset:
    return evaluate(parse_functor_expr(text), g)
