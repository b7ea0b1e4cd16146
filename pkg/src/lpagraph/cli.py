"""Command-line front end.

Output is compact JSON unless ``--pretty`` is given (``show`` is the one
exception: it prints a human summary and takes ``--json``).  Exit status is
0 on success, 1 for usage, parse or unknown-name errors, and 2 for domain
errors such as a set that is not hereditary and saturated.

The enumeration cap for closed sets and lattices can be set with ``--cap``
or the ``LPA_CAP`` environment variable; it may not exceed 24.  On finite
graphs ``Pbinf`` is exactly the set of vertices reaching an infinite emitter,
so it is empty for row-finite input.  The empty graph is reported as not
connected.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .errors import DomainError, LPAGraphError
from .functors import FunctorSyntaxError, parse_functor_expr
from .graph import (classify_boundary_vertices, condition_L, read_graph,
                    to_dot, to_text)
from .hsets import (DEFAULT_LATTICE_CAP, HSet, annihilator_set,
                    double_annihilator, is_regular_ideal_set, iter_lattice,
                    quotient)
from .moves import ShiftSpec, shift_continuity_report, shift_graph
from .series import cross_check_series, pc_series_direct, pl_series_direct, series
from . import topology as top

HARD_CAP = 24


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt_num(n):
    return "inf" if n == float("inf") else int(n)


def _emit(obj, pretty_lines=None, pretty=False):
    if pretty and pretty_lines is not None:
        for line in pretty_lines:
            print(line)
    else:
        print(json.dumps(obj, ensure_ascii=False, separators=(",", ":")))


def _set_arg(g, text):
    names = [t.strip() for t in text.split(",") if t.strip()] if text else []
    return g.check(names)


def _map_arg(text):
    vmap = {}
    for item in filter(None, (p.strip() for p in text.split(","))):
        a, sep, b = item.partition(":")
        if not sep or not a or not b:
            raise UsageError(f"malformed map entry {item!r}")
        vmap[a] = b
    return vmap


def _cap(args, default):
    if args.cap is not None:
        cap = args.cap
    elif os.environ.get("LPA_CAP"):
        try:
            cap = int(os.environ["LPA_CAP"])
        except ValueError:
            raise UsageError(f"LPA_CAP must be an integer, got {os.environ['LPA_CAP']!r}")
    else:
        cap = default
    if not 0 <= cap <= HARD_CAP:
        raise UsageError(f"cap must be between 0 and {HARD_CAP}, got {cap}")
    return cap


def _braces(g, s):
    return "{" + ", ".join(g.ordered(s)) + "}"


# ---------------------------------------------------------------------------
# subcommands

def cmd_show(args):
    g = read_graph(args.file)
    classes, summary = classify_boundary_vertices(g)
    sinks = [v for v in g.vertices if g.is_sink(v)]
    sources = [v for v in g.vertices if g.in_degree(v) == 0]
    info = {
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "sinks": sinks,
        "sources": sources,
        "regular": g.regular_vertices(),
        "infinite_emitters": g.infinite_emitters,
        "initial": {str(_fmt_num(n)): [v for v in g.vertices if classes[v].initial == n]
                    for n in summary["initial"]},
        "terminal": {str(_fmt_num(n)): [v for v in g.vertices if classes[v].terminal == n]
                     for n in summary["terminal"]},
        "condition_L": condition_L(g),
    }
    if args.dot:
        dot = to_dot(g, Path(args.file).stem)
        if args.dot == "-":
            sys.stdout.write(dot)
        else:
            Path(args.dot).write_text(dot, encoding="utf-8")
    if args.json:
        _emit(info)
        return
    lines = [f"{info['vertices']} vertices, {info['edges']} edges"]
    if g.inf_edges:
        lines.append(f"infinite emitters: {' '.join(info['infinite_emitters'])}")
    lines.append(f"sinks: {' '.join(sinks)}")
    lines.append(f"sources: {' '.join(sources)}")
    for n, vs in info["initial"].items():
        lines.append(f"initial({n}): {' '.join(vs)}")
    for n, vs in info["terminal"].items():
        lines.append(f"terminal({n}): {' '.join(vs)}")
    lines.append(f"regular: {' '.join(info['regular'])}")
    lines.append(f"condition_L: {'true' if info['condition_L'] else 'false'}")
    print("\n".join(lines))


def cmd_functor(args):
    g = read_graph(args.file)
    expr = parse_functor_expr(args.expr)
    result = expr.eval(g)
    _emit({"set": g.ordered(result)}, [f"{expr}(E) = {_braces(g, result)}"], args.pretty)


def cmd_topology(args):
    g = read_graph(args.file)
    if args.closed_sets:
        sets = top.closed_sets(g, _cap(args, top.DEFAULT_CAP))
        _emit({"closed_sets": [g.ordered(s) for s in sets]},
              [_braces(g, s) for s in sets], args.pretty)
        return
    if args.connected:
        ok = top.is_topologically_connected(g)
        _emit({"connected": ok}, [f"connected: {str(ok).lower()}"], args.pretty)
        return
    if args.continuity:
        dst = read_graph(args.continuity)
        vmap = _map_arg(args.vmap) if args.vmap else {v: v for v in g.vertices}
        rep = top.continuity_check(g, dst, vmap, _cap(args, top.DEFAULT_CAP))
        witness = None if rep.witness is None else dst.ordered(rep.witness)
        lines = [f"continuous: {str(rep.continuous).lower()}"]
        if witness is not None:
            lines.append(f"witness: {_braces(dst, rep.witness)}")
        _emit({"continuous": rep.continuous, "witness": witness}, lines, args.pretty)
        return
    for flag, fn in (("closure", top.dcc_closure), ("interior", top.interior),
                     ("exterior", top.exterior), ("boundary", top.boundary)):
        text = getattr(args, flag)
        if text is not None:
            s = fn(g, _set_arg(g, text))
            _emit({"set": g.ordered(s)}, [f"{flag}: {_braces(g, s)}"], args.pretty)
            return
    for flag, fn in (("is_closed", top.is_closed), ("is_open", top.is_open),
                     ("is_clopen", top.is_clopen), ("dense", top.is_dense)):
        text = getattr(args, flag)
        if text is not None:
            ok = fn(g, _set_arg(g, text))
            key = flag.replace("is_", "")
            _emit({key: ok}, [f"{key}: {str(ok).lower()}"], args.pretty)
            return
    raise UsageError("topology needs one operation flag")


def cmd_lattice(args):
    g = read_graph(args.file)
    sets = list(iter_lattice(g, _cap(args, DEFAULT_LATTICE_CAP)))
    warnings = sets[0].warnings if sets else []
    _emit({"lattice": [s.ordered() for s in sets], "warnings": warnings},
          [_braces(g, s) for s in sets] + [f"warning: {w}" for w in warnings],
          args.pretty)


def cmd_quotient(args):
    g = read_graph(args.file)
    H = HSet(g, _set_arg(g, args.set))
    q = quotient(g, H).quotient
    if args.format == "graph":
        sys.stdout.write(to_text(q))
        return
    obj = {"vertices": list(q.vertices),
           "edges": [[e.name, e.source, e.target] for e in q.edges],
           "inf_edges": [list(p) for p in q.inf_edges],
           "warnings": H.warnings}
    _emit(obj, to_text(q).splitlines(), args.pretty)


def cmd_series(args):
    g = read_graph(args.file)
    n = args.n
    if args.cross_check:
        rep = cross_check_series(g, args.cross_check, n)
        obj = {"agree": rep.agree, "first_divergence": rep.first_divergence,
               "quotient": [g.ordered(s) for s in rep.quotient_sets],
               "direct": [g.ordered(s) for s in rep.direct_sets]}
        lines = rep.lines(g)
        lines.append(f"agree={'yes' if rep.agree else 'no'}")
        if args.verbose:
            # verbose mode always prints the per-stage report
            for line in rep.lines(g):
                print(line)
            for k, st in enumerate(rep.direct_stages, start=1):
                print(f"n={k} stage={_braces(g, st)}")
            print(f"agree={'yes' if rep.agree else 'no'}")
        else:
            _emit(obj, lines, args.pretty)
        if not rep.agree:
            return 2
        return 0
    if args.direct:
        fn = pl_series_direct if args.direct == "pl" else pc_series_direct
        res = fn(g, n)
    else:
        res = series(g, parse_functor_expr(args.base), n)
    obj = {"series": [g.ordered(s) for s in res.sets],
           "stabilized_at": res.stabilized_at}
    lines = [f"H({k}) = {_braces(g, s)}" for k, s in enumerate(res.sets, start=1)]
    if args.verbose and res.stages:
        lines += [f"n={k} stage={_braces(g, s)}" for k, s in enumerate(res.stages, start=1)]
    _emit(obj, lines, args.pretty)


def cmd_shift(args):
    g = read_graph(args.file)
    u, v = args.shift
    spec = ShiftSpec.parse_map(u, v, args.map or "")
    F = shift_graph(g, spec)
    if args.check:
        rep = shift_continuity_report(g, spec, _cap(args, top.DEFAULT_CAP))
        closed = "skipped" if rep.closed_sets_ok is None else rep.closed_sets_ok
        _emit({"pairwise_ok": rep.pairwise_ok, "closed_sets_ok": closed},
              [f"pairwise_ok: {str(rep.pairwise_ok).lower()}",
               f"closed_sets_ok: {str(closed).lower()}"], args.pretty)
        return
    if args.pretty:
        sys.stdout.write(to_text(F))
        return
    _emit({"vertices": list(F.vertices),
           "edges": [[e.name, e.source, e.target] for e in F.edges],
           "inf_edges": [list(p) for p in F.inf_edges]})


def cmd_ann(args):
    g = read_graph(args.file)
    H = HSet(g, _set_arg(g, args.set))
    h1 = annihilator_set(g, H)
    h2 = double_annihilator(g, H)
    reg = is_regular_ideal_set(g, H)
    obj = {"hprime": h1.ordered(), "hdoubleprime": h2.ordered(), "regular": reg}
    if H.warnings:
        obj["warnings"] = H.warnings
    _emit(obj, [f"H' = {_braces(g, h1)}", f"H'' = {_braces(g, h2)}",
                f"regular: {str(reg).lower()}"], args.pretty)


def cmd_oracle(args):
    root = Path(args.dir)
    if not root.is_dir():
        raise UsageError(f"not a directory: {root}")
    results = []
    failures = 0
    skipped = 0
    for path in sorted(root.glob("*.graph")):
        g = read_graph(path)
        if not g.row_finite:
            skipped += 1
            continue
        n = args.n if args.n is not None else len(g) + 1
        for which in ("pl", "pc"):
            rep = cross_check_series(g, which, max(n, 1))
            results.append({"graph": path.name, "which": which, "agree": rep.agree,
                            "first_divergence": rep.first_divergence})
            failures += not rep.agree
    obj = {"checked": len(results), "disagreements": failures, "skipped": skipped,
           "results": results}
    lines = [f"{r['graph']} {r['which']} agree={'yes' if r['agree'] else 'no'}"
             for r in results]
    lines.append(f"checked={len(results)} disagreements={failures} skipped={skipped}")
    _emit(obj, lines, args.pretty)
    return 2 if failures else 0


# ---------------------------------------------------------------------------

def build_parser():
    p = _Parser(prog="lpagraph", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, cap=False):
        sp.add_argument("--pretty", action="store_true", help="human-readable output")
        if cap:
            sp.add_argument("--cap", type=int, help=f"enumeration cap (max {HARD_CAP})")

    s = sub.add_parser("show", help="summary of a graph")
    s.add_argument("file")
    s.add_argument("--dot", metavar="PATH", help="write Graphviz DOT ('-' for stdout)")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_show)

    s = sub.add_parser("functor", help="evaluate a functor expression",
                       epilog="Pbinf is empty on graphs without infinite emitters.")
    s.add_argument("expr")
    s.add_argument("file")
    common(s)
    s.set_defaults(func=cmd_functor)

    s = sub.add_parser("topology", help="DCC topology queries",
                       epilog="The empty graph is reported as not connected.")
    s.add_argument("file")
    ops = s.add_mutually_exclusive_group(required=True)
    ops.add_argument("--closed-sets", action="store_true")
    ops.add_argument("--connected", action="store_true")
    ops.add_argument("--closure", metavar="SET")
    ops.add_argument("--interior", metavar="SET")
    ops.add_argument("--exterior", metavar="SET")
    ops.add_argument("--boundary", metavar="SET")
    ops.add_argument("--is-closed", metavar="SET")
    ops.add_argument("--is-open", metavar="SET")
    ops.add_argument("--is-clopen", metavar="SET")
    ops.add_argument("--dense", metavar="SET")
    ops.add_argument("--continuity", metavar="DST_FILE",
                     help="check continuity of a vertex map into another graph")
    s.add_argument("--vmap", metavar="a:b,...", help="vertex map for --continuity "
                   "(identity by default)")
    common(s, cap=True)
    s.set_defaults(func=cmd_topology)

    s = sub.add_parser("lattice", help="all hereditary saturated sets")
    s.add_argument("file")
    common(s, cap=True)
    s.set_defaults(func=cmd_lattice)

    s = sub.add_parser("quotient", help="quotient graph E/H")
    s.add_argument("file")
    s.add_argument("--set", required=True, metavar="SET")
    s.add_argument("--format", choices=("json", "graph"), default="json")
    common(s)
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("series", help="ascending functor series")
    s.add_argument("file")
    s.add_argument("-n", type=int, default=3)
    route = s.add_mutually_exclusive_group()
    route.add_argument("--base", default="closure(Pl)", metavar="EXPR")
    route.add_argument("--direct", choices=("pl", "pc"))
    route.add_argument("--cross-check", choices=("pl", "pc"))
    s.add_argument("--verbose", action="store_true",
                   help="also report pre-closure stage sets")
    common(s)
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("shift", help="shift move E(u -> v)")
    s.add_argument("file")
    s.add_argument("--shift", nargs=2, metavar=("U", "V"), required=True)
    s.add_argument("--map", metavar="f1:g1,...", default="")
    s.add_argument("--check", action="store_true", help="verify DCC continuity")
    common(s, cap=True)
    s.set_defaults(func=cmd_shift)

    s = sub.add_parser("ann", help="annihilator sets H' and H''")
    s.add_argument("file")
    s.add_argument("--set", required=True, metavar="SET")
    common(s)
    s.set_defaults(func=cmd_ann)

    s = sub.add_parser("oracle", help="cross-check series over a directory of graphs")
    s.add_argument("dir")
    s.add_argument("-n", type=int, default=None, help="series length (default |E0|+1)")
    common(s)
    s.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < 1:
        parser.error("-n must be >= 1")
    try:
        return args.func(args) or 0
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, FunctorSyntaxError, LPAGraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
