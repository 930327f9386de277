"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 budget or subset cap exceeded,
4 internal cross-check disagreement.  Results go to stdout, diagnostics
to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import flows as flows_mod
from . import invariants
from .errors import (
    BudgetExceeded,
    InvalidPremap,
    MethodDisagreement,
    NotConnected,
    ParseError,
    SubsetCapExceeded,
    SurfpolyError,
    UnknownGroup,
    ValidationError,
)
from .groups import FiniteGroup, catalog, group_from_table
from .premap import MapParams, Premap, component_params, map_params
from .serialize import parse_group_json, parse_map

_INPUT_ERRORS = (
    ParseError,
    ValidationError,
    InvalidPremap,
    UnknownGroup,
    NotConnected,
    OSError,
)
_BUDGET_ERRORS = (SubsetCapExceeded, BudgetExceeded)


def _load_map(path: str) -> Premap:
    with open(path, encoding="utf-8") as handle:
        return parse_map(handle.read())


def _load_group(spec: str) -> FiniteGroup:
    if spec.startswith("catalog:"):
        return catalog(spec[len("catalog:"):])
    with open(spec, encoding="utf-8") as handle:
        return group_from_table(parse_group_json(handle.read()))


def _params_json(params: MapParams) -> dict:
    return {
        "v": params.v,
        "e": params.e,
        "f": params.f,
        "k": params.k,
        "chi": params.chi,
        "euler_genus": params.s,
        "signed_genus": params.gbar,
        "orientable": params.orientable,
        "r": params.r,
        "n": params.n,
        "rstar": params.rstar,
        "nstar": params.nstar,
    }


def _cmd_info(args: argparse.Namespace) -> int:
    p = _load_map(args.path)
    doc = {
        "totals": _params_json(map_params(p)),
        "components": [_params_json(c) for c in component_params(p)],
    }
    print(json.dumps(doc, indent=2))
    return 0


_POLY_KINDS = {
    "surface": invariants.surface_tutte,
    "tilde": invariants.tilde_tutte,
    "q": invariants.q_poly,
    "krushkal": invariants.krushkal,
    "tutte": invariants.tutte_of_underlying,
    "signed": invariants.signed_s_poly,
}


def _cmd_poly(args: argparse.Namespace) -> int:
    p = _load_map(args.path)
    print(str(_POLY_KINDS[args.kind](p, args.max_edges)))
    return 0


def _cmd_flows(args: argparse.Namespace) -> int:
    p = _load_map(args.path)
    g = _load_group(args.group)
    nowhere = not args.all
    if args.method == "all":
        results = {
            m: flows_mod.count(p, g, args.kind, m, nowhere, args.max_edges)
            for m in ("brute", "formula", "tutte")
        }
        for method, value in results.items():
            print(f"{method}: {value}")
        if len(set(results.values())) != 1:
            print("error: counting methods disagree", file=sys.stderr)
            return 4
        return 0
    print(flows_mod.count(p, g, args.kind, args.method, nowhere, args.max_edges))
    return 0


def _cmd_quasitrees(args: argparse.Namespace) -> int:
    p = _load_map(args.path)
    params = map_params(p)
    if params.k != 1:
        raise NotConnected(f"map has {params.k} components")
    if args.signed_genus is not None:
        hbars = [args.signed_genus]
    else:
        hbars = list(range(-abs(params.gbar), abs(params.gbar) + 1))
    table = {str(h): invariants.quasi_tree_count(p, h, args.max_edges) for h in hbars}
    print(json.dumps(table))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surfpoly",
        description="Maps on surfaces: parameters, surface Tutte polynomials, "
        "local flow and tension counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    info = sub.add_parser("info", help="map parameters per component and totals")
    info.add_argument("path")
    info.set_defaults(func=_cmd_info)

    poly = sub.add_parser("poly", help="polynomial invariants")
    poly.add_argument("path")
    poly.add_argument("--kind", choices=sorted(_POLY_KINDS), default="surface")
    poly.add_argument("--max-edges", type=int, default=None,
                      help="override the subset expansion cap")
    poly.set_defaults(func=_cmd_poly)

    fl = sub.add_parser("flows", help="local flow / tension counts")
    fl.add_argument("path")
    fl.add_argument("--group", required=True,
                    help="catalog:NAME (e.g. catalog:dihedral8) or a group-v1 file")
    fl.add_argument("--method", choices=["brute", "formula", "tutte", "all"],
                    default="all")
    fl.add_argument("--kind", choices=["flows", "tensions"], default="flows")
    variant = fl.add_mutually_exclusive_group()
    variant.add_argument("--all", action="store_true",
                         help="count all assignments, not only nowhere-identity")
    variant.add_argument("--nowhere-identity", dest="all", action="store_false")
    fl.add_argument("--max-edges", type=int, default=None)
    fl.set_defaults(func=_cmd_flows, all=False)

    qt = sub.add_parser("quasitrees", help="quasi-tree counts by signed genus")
    qt.add_argument("path")
    qt.add_argument("--signed-genus", type=int, default=None)
    qt.add_argument("--max-edges", type=int, default=None)
    qt.set_defaults(func=_cmd_quasitrees)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _BUDGET_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except MethodDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SurfpolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
