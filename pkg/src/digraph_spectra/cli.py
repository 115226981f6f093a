"""Command-line interface.

Subcommands: build, charpoly, verify, distinct, exponent, minpoly,
nonderogatory.  Family instances are given as key=value tokens
(``family=ADF n=7``); digraphs can also come from a file in the text or
JSON serialization.  Exit codes: 0 success, 1 input error, 2 hard
assertion failure (the two characteristic-polynomial routes disagree).
JSON output is deterministic: sorted keys, compact separators.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import digraph as dg
from .digraph import Digraph
from .exponents import exponent as compute_exponent
from .families import (
    FamilySpec,
    build_family,
    closed_form_charpoly,
    parse_family_spec,
)
from .spectra import (
    TooLargeForSearch,
    charpoly_exact,
    charpoly_ldsg,
    minimal_polynomial,
    resolve_enumeration_cap,
    triangular_certificate,
)
from .verify import DISTINCT_METHODS, build_report, distinctness_check

_METHODS = ("exact", "ldsg", "closed-form", "all")
_TABLES = ("cdc", "cdf", "cdw", "derived", "complements", "exponents", "all")


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_n_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        value = int(text)
        return (value, value)
    return (int(lo), int(hi))


def _spec_from_args(args) -> FamilySpec:
    if not args.spec:
        raise ValueError("missing family spec tokens (family=<name> n=<count> ...)")
    return parse_family_spec(" ".join(args.spec))


def _load_digraph(path: str) -> Digraph:
    with open(path) as fh:
        content = fh.read()
    if content.lstrip().startswith("{"):
        return dg.from_json(content)
    return dg.from_text(content)


def _graph_from_args(args) -> tuple[Digraph, FamilySpec | None, str]:
    if getattr(args, "file", None):
        return _load_digraph(args.file), None, args.file
    spec = _spec_from_args(args)
    return build_family(spec), spec, spec.to_text()


def _check_format(args, allowed: tuple[str, ...]) -> None:
    if args.format not in allowed:
        raise ValueError(
            f"format {args.format!r} not supported here, expected one of {allowed}"
        )


# -- subcommands ------------------------------------------------------


def cmd_build(args) -> int:
    spec = _spec_from_args(args)
    _check_format(args, ("text", "json"))
    graph = build_family(spec)
    if args.format == "json":
        _emit(_dump_json(dg.to_json_dict(graph)) + "\n", args.out)
    else:
        _emit(dg.to_text(graph), args.out)
    return 0


def cmd_charpoly(args) -> int:
    _check_format(args, ("text", "json"))
    graph, spec, source = _graph_from_args(args)
    method = args.method
    results: dict[str, str | None] = {}
    coeffs: dict[str, list[int]] = {}
    if method in ("exact", "all"):
        poly = charpoly_exact(graph)
        results["exact"] = str(poly)
        coeffs["exact"] = poly.to_coeff_list()
    if method in ("ldsg", "all"):
        limit = resolve_enumeration_cap(args.cap)
        if method == "all" and graph.n > limit:
            results["ldsg"] = None
        else:
            poly = charpoly_ldsg(graph, cap=args.cap)
            results["ldsg"] = str(poly)
            coeffs["ldsg"] = poly.to_coeff_list()
    if method in ("closed-form", "all"):
        if spec is None:
            if method == "closed-form":
                raise ValueError("closed-form method needs a family spec, not a file")
            results["closed_form"] = None
        else:
            poly = closed_form_charpoly(spec)
            results["closed_form"] = str(poly)
            coeffs["closed_form"] = poly.to_coeff_list()
    known = {name: text for name, text in results.items() if text is not None}
    hard_fail = (
        "exact" in known and "ldsg" in known and known["exact"] != known["ldsg"]
    )
    agreement = {
        "exact_ldsg": (
            known["exact"] == known["ldsg"]
            if "exact" in known and "ldsg" in known
            else None
        ),
        "exact_closed_form": (
            known["exact"] == known["closed_form"]
            if "exact" in known and "closed_form" in known
            else None
        ),
    }
    if args.format == "json":
        doc = {
            "source": source,
            "n": graph.n,
            "results": results,
            "coeffs": coeffs,
            "agreement": agreement,
        }
        _emit(_dump_json(doc) + "\n", args.out)
    else:
        lines = [f"{name}: {text if text is not None else '(skipped)'}" for name, text in results.items()]
        if method == "all":
            lines.append(f"agreement: {agreement}")
        _emit("\n".join(lines) + "\n", args.out)
    return 2 if hard_fail else 0


def cmd_verify(args) -> int:
    n_range = _parse_n_range(args.n) if args.n else None
    report = build_report(args.table, n_range=n_range, cap=args.cap)
    if args.format == "json":
        text = report.to_json_doc() + "\n"
    elif args.format == "csv":
        text = report.to_csv()
    elif args.format == "md":
        text = report.to_markdown()
    else:
        text = report.to_text()
    _emit(text, args.out)
    return 2 if report.hard_failures else 0


def cmd_distinct(args) -> int:
    _check_format(args, ("text", "json"))
    spec = _spec_from_args(args)
    result = distinctness_check(spec, args.method)
    if args.format == "json":
        _emit(_dump_json(result) + "\n", args.out)
    else:
        lines = [f"{key}: {value}" for key, value in result.items()]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_exponent(args) -> int:
    _check_format(args, ("text", "json"))
    graph, _, source = _graph_from_args(args)
    result = compute_exponent(graph)
    doc = {
        "source": source,
        "primitive": result.primitive,
        "exponent": result.exponent,
        "witness_pair": list(result.witness_pair) if result.witness_pair else None,
    }
    if args.format == "json":
        _emit(_dump_json(doc) + "\n", args.out)
    else:
        _emit(
            "\n".join(f"{key}: {value}" for key, value in doc.items()) + "\n", args.out
        )
    return 0


def cmd_minpoly(args) -> int:
    _check_format(args, ("text", "json"))
    graph, _, source = _graph_from_args(args)
    poly = minimal_polynomial(graph)
    doc = {
        "source": source,
        "min_poly": str(poly),
        "coeffs": poly.to_coeff_list(),
        "degree": poly.degree,
        "non_derogatory": poly.degree == graph.n,
    }
    if args.format == "json":
        _emit(_dump_json(doc) + "\n", args.out)
    else:
        _emit(
            "\n".join(f"{key}: {value}" for key, value in doc.items()) + "\n", args.out
        )
    return 0


def cmd_nonderogatory(args) -> int:
    _check_format(args, ("text", "json"))
    graph, _, source = _graph_from_args(args)
    poly = minimal_polynomial(graph)
    doc: dict = {
        "source": source,
        "non_derogatory": poly.degree == graph.n,
        "min_poly_degree": poly.degree,
    }
    try:
        cert = triangular_certificate(graph)
        doc["certificate_searched"] = True
        doc["certificate"] = (
            {
                "removed_row": cert.removed_row,
                "removed_col": cert.removed_col,
                "row_order": list(cert.row_order),
                "col_order": list(cert.col_order),
            }
            if cert is not None
            else None
        )
    except TooLargeForSearch:
        doc["certificate_searched"] = False
        doc["certificate"] = None
    if args.format == "json":
        _emit(_dump_json(doc) + "\n", args.out)
    else:
        _emit(
            "\n".join(f"{key}: {value}" for key, value in doc.items()) + "\n", args.out
        )
    return 0


# -- parser -----------------------------------------------------------


def _add_common(sub, spec_positional=True, file_option=False):
    if spec_positional:
        sub.add_argument("spec", nargs="*", help="family spec tokens, e.g. family=ADF n=7")
    if file_option:
        sub.add_argument("--file", help="digraph file (text or JSON serialization)")
    sub.add_argument("--format", default="text", choices=("text", "json", "csv", "md"))
    sub.add_argument("--out", help="write output to this path instead of stdout")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="digraph-spectra",
        description="Exact spectra, certificates and exponents for structured digraph families",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("build", help="build a family instance and print it")
    _add_common(p)
    p.set_defaults(func=cmd_build)

    p = subs.add_parser("charpoly", help="characteristic polynomial by one or all routes")
    _add_common(p, file_option=True)
    p.add_argument("--method", default="exact", choices=_METHODS)
    p.add_argument("--cap", type=int, help="linear-subgraph enumeration cap override")
    p.set_defaults(func=cmd_charpoly)

    p = subs.add_parser("verify", help="rebuild and cross-check the family tables")
    p.add_argument("--table", default="all", choices=_TABLES)
    p.add_argument("--n", help="n range a..b (default: per-table sweep)")
    p.add_argument("--cap", type=int, help="linear-subgraph enumeration cap override")
    p.add_argument("--format", default="text", choices=("text", "json", "csv", "md"))
    p.add_argument("--out", help="write output to this path instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("distinct", help="distinct-eigenvalue verdict with certificate")
    _add_common(p)
    p.add_argument("--method", default="gcdQ", choices=DISTINCT_METHODS)
    p.set_defaults(func=cmd_distinct)

    p = subs.add_parser("exponent", help="primitivity, exponent and witness pair")
    _add_common(p, file_option=True)
    p.set_defaults(func=cmd_exponent)

    p = subs.add_parser("minpoly", help="minimal polynomial")
    _add_common(p, file_option=True)
    p.set_defaults(func=cmd_minpoly)

    p = subs.add_parser("nonderogatory", help="non-derogatory verdict and certificate")
    _add_common(p, file_option=True)
    p.set_defaults(func=cmd_nonderogatory)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
