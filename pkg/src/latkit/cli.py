"""Command-line front end.

Exit codes: 0 success, 1 golden-claim mismatch, 2 malformed input,
3 precondition failure (domain errors).
"""

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from .binary_forms import BinaryForm, equivalent, from_gram, gauss_cycle, reduce_definite, represents
from .claims import run_claims
from .errors import LatkitError
from .fm import FMParameters, fm_matrix, twist_matrix, verify_skew_functional
from .lattices import (
    Lattice,
    Sublattice,
    lattice_from_json,
    lattice_to_json,
    orthogonal_complement,
    overlattice_from_isotropic,
    standard_lattice,
)
from .matrices import Matrix

PARSE_ERROR = 2
PRECONDITION_ERROR = 3


def _load_json(path):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as handle:
        return json.load(handle)


def _fraction_str(x):
    return str(x)


def _emit(payload, fmt):
    if fmt == "json":
        print(json.dumps(payload, indent=2, default=_fraction_str))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def _lattice_from_args(args):
    if args.input:
        return lattice_from_json(_load_json(args.input))
    if args.name:
        return standard_lattice(args.name, n=args.n, d=args.d, k=args.k, scale=args.scale)
    raise ValueError("provide --input FILE or --name NAME")


def _cmd_lattice(args):
    if args.subcommand in ("info", "disc-form"):
        lat = _lattice_from_args(args)
    if args.subcommand == "info":
        pos, neg = lat.signature
        _emit(
            {
                "label": lat.label,
                "rank": lat.rank,
                "signature": [pos, neg],
                "det": lat.det,
                "even": lat.is_even,
            },
            args.format,
        )
        return 0
    if args.subcommand == "disc-form":
        form = lat.discriminant_form()
        _emit(
            {
                "orders": list(form.orders),
                "q": [str(x) for x in form.qvals] if form.qvals is not None else None,
                "b": [[str(x) for x in row] for row in form.bvals],
                "group_order": form.order,
            },
            args.format,
        )
        return 0
    obj = _load_json(args.input)
    lat = lattice_from_json(obj)
    if args.subcommand == "complement":
        basis = obj.get("basis")
        if basis is None:
            raise ValueError("complement input needs a 'basis' field")
        comp = orthogonal_complement(Sublattice(lat, basis))
        _emit(
            {
                "basis": [list(r) for r in comp.basis.rows],
                "gram": [list(r) for r in comp.gram.rows],
            },
            args.format,
        )
        return 0
    if args.subcommand == "overlattice":
        classes = obj.get("isotropic")
        if classes is None:
            raise ValueError("overlattice input needs an 'isotropic' field")
        over = overlattice_from_isotropic(lat, [tuple(c) for c in classes])
        _emit(lattice_to_json(over) | {"det": over.det, "even": over.is_even}, args.format)
        return 0
    raise ValueError(f"unknown lattice subcommand {args.subcommand}")


def _parse_form(text):
    parts = [int(x) for x in text.split(",")]
    if len(parts) != 3:
        raise ValueError("forms are given as 'a,b,c'")
    return BinaryForm(*parts)


def _form_from_args(args, attr="form"):
    value = getattr(args, attr, None)
    if value is not None:
        return _parse_form(value)
    if args.gram:
        return from_gram(Matrix(_load_json(args.gram)["gram"]))
    raise ValueError("provide a form as 'a,b,c' or --gram FILE")


def _cmd_form(args):
    if args.subcommand == "reduce":
        f = _form_from_args(args)
        reduced, transform = reduce_definite(f)
        _emit(
            {"reduced": list(reduced.tuple()), "transform": [list(r) for r in transform.rows]},
            args.format,
        )
        return 0
    if args.subcommand == "cycle":
        f = _form_from_args(args)
        _emit({"cycle": [list(g.tuple()) for g in gauss_cycle(f)]}, args.format)
        return 0
    if args.subcommand == "equivalent":
        f1 = _parse_form(args.form)
        f2 = _parse_form(args.other)
        transform = equivalent(f1, f2, allow_improper=args.improper)
        _emit(
            {
                "equivalent": transform is not None,
                "transform": [list(r) for r in transform.rows] if transform else None,
            },
            args.format,
        )
        return 0
    if args.subcommand == "represents":
        f = _form_from_args(args)
        _emit({"represents": represents(f, args.value)}, args.format)
        return 0
    raise ValueError(f"unknown form subcommand {args.subcommand}")


def _cmd_fm(args):
    if args.subcommand == "matrix":
        params = FMParameters(args.r0, args.s, args.d0, args.d1, args.l)
        m = fm_matrix(params)
        _emit({"matrix": [list(r) for r in m.rows], "det": m.det()}, args.format)
        return 0
    if args.subcommand == "twist":
        m = twist_matrix(args.n, args.r0, args.s)
        _emit({"matrix": [list(r) for r in m.rows]}, args.format)
        return 0
    if args.subcommand == "skew-check":
        obj = _load_json(args.input)
        holds = verify_skew_functional(
            Matrix(obj["phi"]),
            Matrix(obj["iota1"]),
            Matrix(obj["iota2"]),
            tuple(obj["block"]),
        )
        _emit({"functional_equation_holds": holds}, args.format)
        return 0
    raise ValueError(f"unknown fm subcommand {args.subcommand}")


def _render_markdown(results):
    lines = ["# Golden-claim report", "", "| claim | status | note |", "|---|---|---|"]
    for r in results:
        lines.append(f"| {r.claim_id} | {r.status} | {r.note} |")
    failed = [r for r in results if r.status != "pass"]
    lines.append("")
    lines.append(f"{len(results) - len(failed)} of {len(results)} claims pass.")
    return "\n".join(lines) + "\n"


def _cmd_reproduce(args):
    node_cap = os.environ.get("WORKBENCH_NODE_CAP")
    results = run_claims(
        filter_substring=args.filter,
        inject_fault=args.inject_fault,
        node_cap=int(node_cap) if node_cap else None,
    )
    payload = {"claims": [r.to_json() for r in results]}
    if args.outdir:
        os.makedirs(args.outdir, exist_ok=True)
        with open(os.path.join(args.outdir, "report.json"), "w") as handle:
            json.dump(payload, handle, indent=2, default=_fraction_str)
        with open(os.path.join(args.outdir, "report.md"), "w") as handle:
            handle.write(_render_markdown(results))
    for r in results:
        print(f"{'PASS' if r.status == 'pass' else 'FAIL'} {r.claim_id}")
    if args.format == "json":
        print(json.dumps(payload, indent=2, default=_fraction_str))
    failed = [r for r in results if r.status != "pass"]
    if failed:
        for r in failed:
            print(
                f"mismatch in {r.claim_id}: expected {r.expected}, computed {r.computed}",
                file=sys.stderr,
            )
        return 1
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="latkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    lat = sub.add_parser("lattice", help="inspect lattices given as JSON or by name")
    lat.add_argument("subcommand", choices=["info", "disc-form", "complement", "overlattice"])
    lat.add_argument("--input", help="JSON file ('-' for stdin)")
    lat.add_argument("--name", help="standard lattice name, e.g. U, E8(-2), K3")
    lat.add_argument("--n", type=int)
    lat.add_argument("--d", type=int)
    lat.add_argument("--k", type=int)
    lat.add_argument("--scale", type=int)
    lat.add_argument("--format", choices=["json", "text"], default="text")
    lat.set_defaults(handler=_cmd_lattice)

    form = sub.add_parser("form", help="binary quadratic form operations")
    form.add_argument("subcommand", choices=["reduce", "cycle", "equivalent", "represents"])
    form.add_argument("form", nargs="?", help="form as 'a,b,c'")
    form.add_argument("other", nargs="?", help="second form for 'equivalent'")
    form.add_argument("--gram", help="JSON file with a 2x2 'gram' field")
    form.add_argument("--value", type=int, help="value for 'represents'")
    form.add_argument("--improper", action="store_true")
    form.add_argument("--format", choices=["json", "text"], default="text")
    form.set_defaults(handler=_cmd_form)

    fm = sub.add_parser("fm", help="cohomological transform matrices")
    fm.add_argument("subcommand", choices=["matrix", "twist", "skew-check"])
    fm.add_argument("--r0", type=int)
    fm.add_argument("--s", type=int)
    fm.add_argument("--d0", type=int)
    fm.add_argument("--d1", type=int)
    fm.add_argument("--l", type=int)
    fm.add_argument("--n", type=int)
    fm.add_argument("--input", help="JSON file for skew-check")
    fm.add_argument("--format", choices=["json", "text"], default="text")
    fm.set_defaults(handler=_cmd_fm)

    rep = sub.add_parser("reproduce", help="recompute every golden claim")
    rep.add_argument("--outdir", help="write report.json and report.md here")
    rep.add_argument("--filter", help="only run claims whose id or description contains this")
    rep.add_argument("--inject-fault", help="perturb this claim's constants (must then fail)")
    rep.add_argument("--format", choices=["json", "text"], default="text")
    rep.set_defaults(handler=_cmd_reproduce)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (json.JSONDecodeError, ValueError, KeyError, OSError, TypeError) as exc:
        print(json.dumps({"error": str(exc), "kind": type(exc).__name__}), file=sys.stderr)
        return PARSE_ERROR
    except LatkitError as exc:
        print(json.dumps({"error": str(exc), "kind": type(exc).__name__}), file=sys.stderr)
        return PRECONDITION_ERROR


if __name__ == "__main__":
    sys.exit(main())
