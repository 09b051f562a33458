"""Command-line interface.

Subcommands: compute, compare, oracle, catalog, cohomology.  Exit codes are
0 (success / equal), 1 (compare found a difference), 2 (semantic error such
as failed validation or a non-invariant germ), 3 (parse or schema error).
All configuration is via flags; "-" reads standard input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog, cohomology, resolution, zeta
from .arcs import MonomialGerm, SignAction, is_invariant, oracle_series
from .errors import (
    EquizetaError,
    InvalidResolution,
    ParseError,
    SchemaError,
    UnknownFixture,
)

EXIT_OK = 0
EXIT_UNEQUAL = 1
EXIT_SEMANTIC = 2
EXIT_PARSE = 3


def _emit(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _load_resolution(ref: str) -> resolution.ResolutionData:
    """Resolve a positional argument: stdin, a file path, or a fixture name."""
    if ref == "-":
        return resolution.parse(sys.stdin.read())
    if os.path.exists(ref):
        try:
            with open(ref, "rb") as handle:
                return resolution.parse(handle.read())
        except OSError as exc:
            raise ParseError(f"cannot read {ref}: {exc}") from exc
    looks_like_path = os.sep in ref or ref.endswith(".json")
    if looks_like_path:
        raise ParseError(f"no such file: {ref}")
    return catalog.get(ref)


def _validated(res: resolution.ResolutionData) -> resolution.ResolutionData:
    diags = resolution.validate(res)
    if diags:
        raise InvalidResolution(diags)
    return res


def _cmd_compute(args) -> int:
    res = _validated(_load_resolution(args.input))
    if args.format == "display":
        print(zeta.display(res, args.variant))
        return EXIT_OK
    if args.format == "rational":
        print(_emit(zeta.denef_loeser(res, args.variant).to_json()))
        return EXIT_OK
    if args.format == "series":
        if args.expand is None:
            raise EquizetaError("--format series requires --expand N")
        z = zeta.denef_loeser(res, args.variant)
        print(_emit(z.t_series(args.expand).to_json()))
        return EXIT_OK
    print(_emit(zeta.zeta_json(res, args.variant, args.expand)))
    return EXIT_OK


def _cmd_compare(args) -> int:
    a = _validated(_load_resolution(args.lhs))
    b = _validated(_load_resolution(args.rhs))
    report = zeta.distinguish(a, b, args.variant, args.order)
    print(_emit(report.to_json()))
    return EXIT_OK if report.equal else EXIT_UNEQUAL


def _parse_int_list(text: str, flag: str):
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise SchemaError(f"{flag} expects a comma-separated integer list") from exc


def _cmd_oracle(args) -> int:
    exponents = _parse_int_list(args.exponents, "--exponents")
    sign = {"+1": 1, "-1": -1, "1": 1}[args.sign]
    germ = MonomialGerm(exponents, sign)
    if args.trivial_group:
        action = SignAction(trivial=True)
    else:
        if args.action is None:
            raise EquizetaError("--action or --trivial-group is required")
        action = SignAction(_parse_int_list(args.action, "--action"))
    if not is_invariant(germ, action):
        raise EquizetaError("germ is not invariant under the given action")
    series = oracle_series(germ, action, args.variant, args.order)
    print(_emit(series.to_json()))
    return EXIT_OK


def _cmd_catalog(args) -> int:
    if args.action == "list":
        for name in catalog.names():
            print(name)
        return EXIT_OK
    res = catalog.get(args.name)
    print(_emit(resolution.resolution_to_json(res)))
    return EXIT_OK


_PIPELINE_BUILDERS = {
    "sphere_free": cohomology.sphere_free_pipeline,
    "sphere_fixed": cohomology.sphere_fixed_pipeline,
    "circle_fixed": cohomology.circle_fixed_pipeline,
}


def _cmd_cohomology(args) -> int:
    if args.input in _PIPELINE_BUILDERS:
        spec = _PIPELINE_BUILDERS[args.input]()
    else:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.input, "r", encoding="utf-8") as handle:
                    text = handle.read()
            except OSError as exc:
                raise ParseError(f"cannot read {args.input}: {exc}") from exc
        try:
            spec = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(
                f"line {exc.lineno}, column {exc.colno}: {exc.msg}"
            ) from exc
    series = cohomology.run_pipeline(spec)
    print(str(series))
    prefix = series.laurent(-4)
    if prefix:
        top = (len(series.num) - 1) - (len(series.den) - 1)
        shown = " ".join(str(c) for c in prefix)
        print(f"laurent u^{top}..u^-4: {shown}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equizeta",
        description="equivariant zeta functions of invariant Nash germs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="zeta function of resolution data")
    compute.add_argument("input", help="resolution JSON path, '-', or fixture name")
    compute.add_argument("--variant", choices=zeta.VARIANTS, default="naive")
    compute.add_argument("--expand", type=int, default=None, metavar="N")
    compute.add_argument(
        "--format",
        choices=("display", "json", "rational", "series"),
        default="display",
    )
    compute.set_defaults(func=_cmd_compute)

    compare = sub.add_parser("compare", help="compare two germs' zeta functions")
    compare.add_argument("lhs")
    compare.add_argument("rhs")
    compare.add_argument("--variant", choices=zeta.VARIANTS, default="naive")
    compare.add_argument("--order", type=int, default=16, metavar="N")
    compare.set_defaults(func=_cmd_compare)

    oracle = sub.add_parser("oracle", help="arc-space series of a monomial germ")
    oracle.add_argument("--exponents", required=True, metavar="N1,N2,...")
    oracle.add_argument("--sign", choices=("+1", "-1", "1"), default="+1")
    oracle.add_argument("--action", default=None, metavar="e1,e2,...")
    oracle.add_argument("--trivial-group", action="store_true")
    oracle.add_argument("--variant", choices=zeta.VARIANTS, default="naive")
    oracle.add_argument("--order", type=int, default=8, metavar="N")
    oracle.set_defaults(func=_cmd_oracle)

    cat = sub.add_parser("catalog", help="browse built-in fixtures")
    cat_sub = cat.add_subparsers(dest="action", required=True)
    cat_list = cat_sub.add_parser("list")
    cat_list.set_defaults(func=_cmd_catalog, action="list")
    cat_show = cat_sub.add_parser("show")
    cat_show.add_argument("name")
    cat_show.set_defaults(func=_cmd_catalog, action="show")

    coh = sub.add_parser("cohomology", help="betti series of a module pipeline")
    coh.add_argument(
        "input",
        help="pipeline JSON path, '-', or a built-in name "
        "(sphere_free, sphere_fixed, circle_fixed)",
    )
    coh.set_defaults(func=_cmd_cohomology)

    return parser


def _merge_dash_values(argv):
    """Glue '--action -1,1' into '--action=-1,1' so argparse accepts it."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--action", "--exponents", "--sign") and i + 1 < len(argv):
            nxt = argv[i + 1]
            if nxt.startswith("-") and len(nxt) > 1 and nxt[1].isdigit():
                out.append(f"{tok}={nxt}")
                i += 2
                continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_merge_dash_values(list(argv)))
    try:
        return args.func(args)
    except (ParseError, SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InvalidResolution, UnknownFixture) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except (EquizetaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC


def main_entry():  # console-script shim
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
