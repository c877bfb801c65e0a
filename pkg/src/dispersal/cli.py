"""Command-line front end: ``dispersal gen|label|solve|bound|verify|export-dot``.

Exit codes: 0 success, 2 bad input (including disconnected graphs),
3 search budget exceeded, 4 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import families
from .bounds import bounds_report
from .dot import to_dot
from .errors import DispersalError, InputError
from .graph import Graph, cartesian_product, distance_matrix
from .labelling import (
    Labelling,
    dispersion,
    label_complete_binary_tree,
    label_cycle,
    label_grid,
    label_hypercube,
    label_path,
    label_path_circular,
    label_product,
)
from .solver import brute_force_dl, exact_dl, exact_dlo


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str) -> Graph:
    return Graph.from_json(_read(path))


def _ints(values: list[str]) -> list[int]:
    try:
        return [int(v) for v in values]
    except ValueError:
        raise InputError(f"parameters must be integers, got {values}") from None


def _factor(spec: str) -> Graph:
    family, params = families.parse_spec(spec)
    return families.build(family, params)


def _circular_factor_labelling(spec: str) -> tuple[Graph, Labelling]:
    family, params = families.parse_spec(spec)
    g = families.build(family, params)
    if family == "cycle":
        return g, label_cycle(*params)
    if family == "path":
        m = params[0]
        return g, label_path_circular(m) if m >= 2 else label_path(m)
    raise InputError(f"product labelling supports cycle:N and path:M factors, got {spec!r}")


# -- subcommands -------------------------------------------------------------

def cmd_gen(args) -> int:
    if args.family == "product":
        if len(args.params) != 2:
            raise InputError("gen product takes two factor specs, e.g. cycle:3 path:4")
        g = cartesian_product(_factor(args.params[0]), _factor(args.params[1]))
    else:
        g = families.build(args.family, _ints(args.params))
    _emit(g.to_json(), args.out)
    return 0


def _labelled_family(family: str, raw: list[str], circular: bool):
    """Return ``(graph, labelling, metric)`` for a family with a constructive labeller."""
    if family == "product":
        if len(raw) != 2:
            raise InputError("label product takes two factor specs, e.g. path:4 path:6")
        g1, l1 = _circular_factor_labelling(raw[0])
        g2, l2 = _circular_factor_labelling(raw[1])
        g = cartesian_product(g1, g2)
        return g, label_product(l1, l2), distance_matrix(g)
    params = _ints(raw)
    g = families.build(family, params)
    if family == "path" and circular:
        lab = label_path_circular(*params)
    else:
        labellers = {
            "cycle": label_cycle,
            "path": label_path,
            "grid": label_grid,
            "hypercube": label_hypercube,
            "cbt": label_complete_binary_tree,
        }
        if family not in labellers:
            raise InputError(f"no constructive labelling for family {family!r}")
        lab = labellers[family](*params)
    return g, lab, families.metric_for(family, params)


def cmd_label(args) -> int:
    g, lab, metric = _labelled_family(args.family, args.params, args.circular)
    result = dispersion(metric, lab)
    if args.out:
        Path(args.out).write_text(lab.to_json())
    if args.dot:
        Path(args.dot).write_text(to_dot(g, lab))
    sys.stdout.write(_dump({"labelling": lab.to_dict(), "dispersion": result.to_dict()}))
    return 0


def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    opts = dict(prune=not args.no_prune, budget_ms=args.budget_ms, workers=args.workers)
    if args.brute:
        result = brute_force_dl(g, circular=args.circular)
    elif args.circular:
        result = exact_dlo(g, **opts)
    else:
        result = exact_dl(g, **opts)
    _emit(_dump(result.to_dict()), args.out)
    return 0


def cmd_bound(args) -> int:
    report = bounds_report(_load_graph(args.graph))
    if args.table:
        rows = [("bound", "kind", "value")] + report.rows()
        widths = [max(len(r[i]) for r in rows) for i in range(3)]
        text = "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows) + "\n"
    else:
        text = _dump(report.to_dict())
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    lab = Labelling.from_json(_read(args.labelling))
    result = dispersion(distance_matrix(g), lab)
    _emit(_dump(result.to_dict()), args.out)
    return 0


def cmd_export_dot(args) -> int:
    g = _load_graph(args.graph)
    lab = Labelling.from_json(_read(args.labelling)) if args.labelling else None
    if lab is not None and lab.n != g.n:
        raise InputError(f"labelling has {lab.n} entries but graph has {g.n} vertices")
    _emit(to_dot(g, lab), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dispersal", description="k-dispersed labellings of graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a family graph as JSON")
    p.add_argument("family", choices=list(families.FAMILIES) + ["product"])
    p.add_argument("params", nargs="*", help="integers, or two factor specs like cycle:3 for product")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("label", help="construct an optimal labelling for a family")
    p.add_argument("family", choices=["cycle", "path", "grid", "hypercube", "cbt", "product"])
    p.add_argument("params", nargs="*")
    p.add_argument("--circular", action="store_true", help="circular variant (paths)")
    p.add_argument("--out", help="write the bare labelling JSON here")
    p.add_argument("--dot", help="write a DOT rendering here")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("solve", help="exact DL (or DL° with --circular) of a graph file")
    p.add_argument("graph")
    p.add_argument("--circular", action="store_true")
    p.add_argument("--budget-ms", type=float)
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--workers", type=int, help="parallel search workers (capped by DISPERSAL_THREADS)")
    p.add_argument("--brute", action="store_true", help="use the permutation oracle (n <= 10)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bound", help="cheap bounds on DL")
    p.add_argument("graph")
    p.add_argument("--table", action="store_true", help="aligned text table instead of JSON")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("verify", help="measure a labelling against a graph")
    p.add_argument("graph")
    p.add_argument("labelling")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", help="render a graph (optionally labelled) as DOT")
    p.add_argument("graph")
    p.add_argument("--labelling")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DispersalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
