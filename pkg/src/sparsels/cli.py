"""Command-line front end.

Exit status: 0 on success, 1 on usage errors, 2 on runtime errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys

from . import bench
from .errors import SparseLSError
from .exact import DEFAULT_NODE_LIMIT, exact_max_packing, exact_min_hitting
from .generators import KINDS, GeneratorSpec, generate
from .io import dump_graph, read_family, read_graph, write_graph
from .local_search import local_search_hitting, local_search_packing
from .properties import FiniteFamily, RadiusBall, parse_property
from .graph import components
from .separators import balance_bound, balanced_separator, build_cover, cover_check
from .structure import (
    VertexOrdering, build_shallow_collection, check_shallow, degeneracy_ordering, rich_vertices,
    wcol_exact, wcol_of_ordering,
)
from .validation import check_vertex_set


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("graph input")
    g.add_argument("--graph", help="edge-list file")
    g.add_argument("--kind", choices=KINDS, help="generate instead of reading a file")
    for name in ("w", "h", "n", "k"):
        g.add_argument(f"--{name}", type=int)
    g.add_argument("--p", type=float, help="edge-keep probability")
    g.add_argument("--seed", type=int, default=0)


def _add_property_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("property")
    g.add_argument("--family", help="comma-separated built-in patterns (K2, K3, P3, P4, C4, claw)")
    g.add_argument("--family-file", help="pattern-family file")
    g.add_argument("--ball", type=int, metavar="R", help="radius-R balls")
    g.add_argument("--max-pattern-size", type=int, default=6)


def _format_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "csv"), default="text")


def _graph(args):
    if args.graph and args.kind:
        raise UsageError("give either --graph or --kind, not both")
    if args.graph:
        return read_graph(args.graph)
    if not args.kind:
        raise UsageError("a graph is required: --graph FILE or --kind KIND")
    params = {k: getattr(args, k) for k in ("w", "h", "n", "k", "p") if getattr(args, k) is not None}
    return generate(GeneratorSpec(args.kind, params, args.seed))


def _property(args):
    chosen = [x for x in (args.family, args.family_file, args.ball) if x is not None]
    if len(chosen) > 1:
        raise UsageError("give only one of --family, --family-file, --ball")
    if args.ball is not None:
        return RadiusBall(args.ball)
    if args.family_file:
        return FiniteFamily(tuple(read_family(args.family_file)), args.max_pattern_size)
    return parse_property(args.family or "K2", max_pattern_size=args.max_pattern_size)


def _vertices(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad vertex list {text!r}") from None


def _ordering(G, name: str, r: int) -> VertexOrdering:
    if name == "natural":
        return VertexOrdering.natural(G.n)
    if name == "degeneracy":
        return degeneracy_ordering(G)
    if name == "reverse-degeneracy":
        return degeneracy_ordering(G, reverse=True)
    return wcol_exact(G, r)[1]


def _emit(args, out, fields: dict) -> None:
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(fields), lineterminator="\n")
        writer.writeheader()
        writer.writerow(fields)
        out.write(buf.getvalue())
    else:
        for key, value in fields.items():
            out.write(f"{key}: {value}\n")


def _join(xs) -> str:
    return " ".join(map(str, xs))


def _packing_text(elements) -> str:
    return ";".join(_join(Z) for Z in elements)


def cmd_solve_hitting(args, out):
    G, spec = _graph(args), _property(args)
    solution, trace = local_search_hitting(G, spec, args.c, greedy_init=args.greedy_init,
                                           time_budget=args.time_budget)
    _emit(args, out, {"size": len(solution), "hitting_set": _join(solution), "certified": int(trace.certified),
                      "swaps_examined": trace.swaps_examined})
    if args.trace:
        out.write(trace.to_log())


def cmd_solve_packing(args, out):
    G, spec = _graph(args), _property(args)
    packing, trace = local_search_packing(G, spec, args.c, args.induced, time_budget=args.time_budget)
    _emit(args, out, {"size": len(packing), "packing": _packing_text(packing.elements),
                      "certified": int(trace.certified), "swaps_examined": trace.swaps_examined})
    if args.trace:
        out.write(trace.to_log())


def cmd_exact(args, out):
    G, spec = _graph(args), _property(args)
    if args.problem == "hitting":
        res = exact_min_hitting(G, spec, args.node_limit)
        text = _join(res.solution)
    else:
        res = exact_max_packing(G, spec, args.induced, args.node_limit)
        text = _packing_text(res.solution.elements)
    _emit(args, out, {"problem": args.problem, "size": res.size, "solution": text,
                      "optimal": int(res.optimal), "nodes": res.nodes})


def cmd_wcol(args, out):
    G = _graph(args)
    if args.ordering == "exact":
        value, ordering = wcol_exact(G, args.r)
    else:
        ordering = _ordering(G, args.ordering, args.r)
        value = wcol_of_ordering(G, ordering, args.r)
    if args.format == "csv":
        _emit(args, out, {"r": args.r, "ordering": args.ordering, "wcol": value})
    else:
        out.write(f"{value}\n")


def cmd_rich(args, out):
    G = _graph(args)
    O = check_vertex_set(G, _vertices(args.O))
    ordering = _ordering(G, args.ordering, args.r)
    rich = rich_vertices(G, ordering, args.r, args.m, O)
    b = wcol_of_ordering(G, ordering, args.r)
    _emit(args, out, {"rich": _join(rich), "count": len(rich), "b": b, "O": len(O),
                      "bound_ok": int(args.m * len(rich) <= b * len(O))})


def cmd_shallow(args, out):
    G = _graph(args)
    O = check_vertex_set(G, _vertices(args.O))
    A = check_vertex_set(G, _vertices(args.A))
    ordering = _ordering(G, args.ordering, args.r)
    coll = build_shallow_collection(G, ordering, args.r, args.m, O, A)
    omega, t = check_shallow(G, coll)
    if args.format == "text":
        out.write(coll.dumps())
    _emit(args, out, {"sets": len(coll), "omega_actual": omega, "t_actual": t,
                      "omega_claimed": coll.omega, "t_claimed": coll.t,
                      "bound_ok": int(omega <= coll.omega and t <= coll.t)})


def cmd_cover(args, out):
    G = _graph(args)
    cover = build_cover(G, args.cap, seed=args.seed)
    ok, report = cover_check(G, cover)
    if args.format == "csv":
        _emit(args, out, {"pieces": report["pieces"], "max_piece": report["max_piece"],
                          "excess": report["excess"], "overflow_flag": int(cover.overflow), "valid": int(ok)})
    else:
        out.write(cover.dumps())
        out.write(f"valid={int(ok)}\n")


def cmd_separator(args, out):
    G = _graph(args)
    S = balanced_separator(G, seed=args.seed)
    sizes = sorted((len(c) for c in components(G, S)), reverse=True)
    _emit(args, out, {"separator": _join(S), "size": len(S), "components": _join(sizes),
                      "bound": balance_bound(G.n)})


def cmd_bench(args, out):
    cfg = bench.read_config(args.config) if args.config else bench.default_corpus()
    if args.jobs:
        cfg.jobs = args.jobs
    if args.timing:
        cfg.timing = True
    report = bench.run_experiment(cfg)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(report)
    else:
        out.write(report)


def cmd_generate(args, out):
    G = _graph(args)
    if args.out:
        write_graph(G, args.out)
    else:
        out.write(dump_graph(G))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sparsels", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve-hitting", help="c-local search for a hitting set")
    _add_graph_args(p), _add_property_args(p), _format_arg(p)
    p.add_argument("--c", type=int, default=1)
    p.add_argument("--greedy-init", action="store_true")
    p.add_argument("--time-budget", type=float)
    p.add_argument("--trace", action="store_true", help="print the search log")
    p.set_defaults(func=cmd_solve_hitting)

    p = sub.add_parser("solve-packing", help="c-local search for a packing")
    _add_graph_args(p), _add_property_args(p), _format_arg(p)
    p.add_argument("--c", type=int, default=1)
    p.add_argument("--induced", action="store_true")
    p.add_argument("--time-budget", type=float)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_solve_packing)

    p = sub.add_parser("exact", help="exact minimum hitting set or maximum packing")
    _add_graph_args(p), _add_property_args(p), _format_arg(p)
    p.add_argument("--problem", choices=("hitting", "packing"), default="hitting")
    p.add_argument("--induced", action="store_true")
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    p.set_defaults(func=cmd_exact)

    orderings = ("natural", "degeneracy", "reverse-degeneracy", "exact")
    p = sub.add_parser("wcol", help="weak r-colouring number of an ordering")
    _add_graph_args(p), _format_arg(p)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--ordering", choices=orderings, default="degeneracy")
    p.set_defaults(func=cmd_wcol)

    for name, func, helptext in (("rich", cmd_rich, "rich vertices for a set O"),
                                 ("shallow", cmd_shallow, "build and measure the shallow collection")):
        p = sub.add_parser(name, help=helptext)
        _add_graph_args(p), _format_arg(p)
        p.add_argument("--r", type=int, default=1)
        p.add_argument("--m", type=int, default=1)
        p.add_argument("--O", help="vertex list")
        if name == "shallow":
            p.add_argument("--A", help="vertex list")
        p.add_argument("--ordering", choices=orderings[:3], default="degeneracy")
        p.set_defaults(func=func)

    p = sub.add_parser("cover", help="cover with bounded piece size by recursive separation")
    _add_graph_args(p), _format_arg(p)
    p.add_argument("--cap", type=int, required=True)
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("separator", help="balanced separator")
    _add_graph_args(p), _format_arg(p)
    p.set_defaults(func=cmd_separator)

    p = sub.add_parser("bench", help="run an experiment config (default: the pinned corpus)")
    p.add_argument("--config")
    p.add_argument("--out")
    p.add_argument("--jobs", type=int)
    p.add_argument("--timing", action="store_true", help="add a wall_time column (output no longer reproducible)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("generate", help="write a generated graph as an edge list")
    _add_graph_args(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except SystemExit as exc:
        # --help
        return 0 if exc.code in (0, None) else 1
    except (SparseLSError, OSError, ValueError) as exc:
        print(f"sparsels: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
