"""Command line interface.

Subcommands: check, rdf2pg, pg2rdf, unfold, roundtrip.  Exit codes:
0 success, 1 domain/validation failure, 2 parse/format/usage error.
Data goes to -o or standard output; diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import TextIO

from .mappings import (
    DEFAULT_EDGE_LABEL_PREFIX,
    DEFAULT_PROPERTY_KEY_PREFIX,
    MappingConfig,
    MappingConfigError,
    parse_vertex_id_strategy,
)
from .namespaces import RDF
from .pg import PgValidationError
from .pgjson import SchemaError, parse_pg_json, serialize_pg_json
from .rdf import (
    canonicalize_bnodes,
    embedded_triples,
    isomorphic,
    minimize,
    redundant_triples,
    term_key,
)
from .transforms import (
    ConvertibilityError,
    ConvertibilityReport,
    MalformedRdfLikePgError,
    NotEdgeUniqueError,
    NotPropertyUniqueError,
    canonicalize_values,
    check_pg_convertible,
    check_strongly_pg_convertible,
    from_rdf_like_pg,
    pg_to_rdf_star,
    to_rdf_like_pg,
    to_simple_pg,
)
from .turtle import (
    NotPlainRdfError,
    TurtleParseError,
    format_term,
    parse_turtle_star,
    serialize_turtle_star,
    unfold_to_rdf,
)

_EXTENSIONS = {"turtle-star": (".ttls", ".ttl"), "pg-json": (".pg.json",)}


class CliUsageError(Exception):
    pass


def _check_format(path: str, expected: str, override: str | None, role: str) -> None:
    if override is not None:
        if override != expected:
            raise CliUsageError(f"the {role} format of this command is {expected}, not {override}")
        return
    for fmt, extensions in _EXTENSIONS.items():
        if fmt != expected and any(path.endswith(ext) for ext in extensions):
            raise CliUsageError(
                f"{path!r} has a {fmt} extension but this command expects {expected}"
            )


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _report_violations(entries: list[dict], report: str, stream: TextIO) -> None:
    if report == "json":
        json.dump({"ok": not entries, "violations": entries}, stream, indent=2)
        stream.write("\n")
    else:
        for entry in entries:
            stream.write(f"[{entry['condition']}] {entry['reason']}: {entry['triple']}\n")


def _convertibility_entries(report: ConvertibilityReport) -> list[dict]:
    return [
        {"condition": v.condition, "reason": v.reason, "triple": format_term(v.triple)}
        for v in report.violations
    ]


def cmd_check(args: argparse.Namespace) -> int:
    _check_format(args.input, "turtle-star", args.from_format, "input")
    graph, _ = parse_turtle_star(_read(args.input))
    if args.level == "minimal":
        entries = [
            {
                "condition": "redundant",
                "reason": "top-level triple also occurs embedded",
                "triple": format_term(t),
            }
            for t in sorted(redundant_triples(graph), key=term_key)
        ]
    else:
        checker = check_pg_convertible if args.level == "convertible" else check_strongly_pg_convertible
        entries = _convertibility_entries(checker(graph, args.literal_mode))
    if args.report == "json":
        _report_violations(entries, "json", sys.stdout)
    elif entries:
        _report_violations(entries, "text", sys.stdout)
    else:
        print("OK")
    return 0 if not entries else 1


def cmd_rdf2pg(args: argparse.Namespace) -> int:
    _check_format(args.input, "turtle-star", args.from_format, "input")
    if args.output is not None:
        _check_format(args.output, "pg-json", args.to_format, "output")
    graph, _ = parse_turtle_star(_read(args.input))
    try:
        if args.mode == "rdf-like":
            result = to_rdf_like_pg(graph, args.literal_mode)
        else:
            result = to_simple_pg(graph, args.literal_mode)
    except ConvertibilityError as exc:
        _report_violations(_convertibility_entries(exc.report), args.report, sys.stderr)
        return 1
    _write(serialize_pg_json(result.graph), args.output)
    return 0


def cmd_pg2rdf(args: argparse.Namespace) -> int:
    _check_format(args.input, "pg-json", args.from_format, "input")
    if args.output is not None:
        _check_format(args.output, "turtle-star", args.to_format, "output")
    pgraph = parse_pg_json(_read(args.input))
    config = MappingConfig(
        property_key_prefix=args.property_key_prefix,
        edge_label_prefix=args.edge_label_prefix,
        vertex_id_strategy=parse_vertex_id_strategy(args.vertex_ids),
    )
    try:
        graph = pg_to_rdf_star(pgraph, config)
    except (NotPropertyUniqueError, NotEdgeUniqueError) as exc:
        kind = "property-unique" if isinstance(exc, NotPropertyUniqueError) else "edge-unique"
        entries = [
            {"condition": kind, "reason": str(pair), "triple": ""} for pair in exc.violations
        ]
        _report_violations(entries, args.report, sys.stderr)
        return 1
    prefixes = {"p": config.property_key_prefix, "r": config.edge_label_prefix}
    _write(serialize_turtle_star(graph, prefixes), args.output)
    return 0


def cmd_unfold(args: argparse.Namespace) -> int:
    _check_format(args.input, "turtle-star", args.from_format, "input")
    if args.output is not None:
        _check_format(args.output, "turtle-star", args.to_format, "output")
    graph, prefixes = parse_turtle_star(_read(args.input))
    unfolded = unfold_to_rdf(graph)
    if embedded_triples(graph) and "rdf" not in prefixes:
        prefixes["rdf"] = RDF
    _write(serialize_turtle_star(unfolded, prefixes), args.output)
    return 0


def cmd_roundtrip(args: argparse.Namespace) -> int:
    _check_format(args.input, "turtle-star", args.from_format, "input")
    graph, _ = parse_turtle_star(_read(args.input))
    prepared = minimize(canonicalize_values(graph, args.literal_mode))
    try:
        forward = to_rdf_like_pg(prepared, args.literal_mode)
    except ConvertibilityError as exc:
        _report_violations(_convertibility_entries(exc.report), args.report, sys.stderr)
        return 1
    back = from_rdf_like_pg(forward.graph)
    if isomorphic(prepared, back):
        if args.report == "json":
            json.dump({"ok": True, "triples": len(prepared)}, sys.stdout)
            sys.stdout.write("\n")
        else:
            print(f"round-trip OK: {len(prepared)} triples")
        return 0
    want = canonicalize_bnodes(prepared).triples
    got = canonicalize_bnodes(back).triples
    difference = sorted(want ^ got, key=term_key)
    side = "missing" if difference[0] in want else "unexpected"
    print(f"round-trip mismatch, {side} triple: {format_term(difference[0])}", file=sys.stderr)
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starpg",
        description="Convert between RDF-star (Turtle-star) and property graphs (PG-JSON).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def io_flags(p: argparse.ArgumentParser, output: bool = True) -> None:
        p.add_argument("input", help="input file")
        p.add_argument("--from", dest="from_format", choices=("turtle-star", "pg-json"),
                       help="input format override")
        if output:
            p.add_argument("--to", dest="to_format", choices=("turtle-star", "pg-json"),
                           help="output format override")
            p.add_argument("-o", "--output", help="output file (default: standard output)")

    check = sub.add_parser("check", help="report convertibility or minimality violations")
    io_flags(check, output=False)
    check.add_argument("--level", choices=("convertible", "strong", "minimal"),
                       default="convertible")
    check.add_argument("--literal-mode", choices=("strict", "lenient"), default="lenient")
    check.add_argument("--report", choices=("text", "json"), default="text")
    check.set_defaults(func=cmd_check)

    rdf2pg = sub.add_parser("rdf2pg", help="transform Turtle-star into PG-JSON")
    io_flags(rdf2pg)
    rdf2pg.add_argument("--mode", choices=("rdf-like", "simple"), required=True)
    rdf2pg.add_argument("--literal-mode", choices=("strict", "lenient"), default="lenient")
    rdf2pg.add_argument("--report", choices=("text", "json"), default="text")
    rdf2pg.set_defaults(func=cmd_rdf2pg)

    pg2rdf = sub.add_parser("pg2rdf", help="represent PG-JSON in Turtle-star")
    io_flags(pg2rdf)
    pg2rdf.add_argument("--property-key-prefix", default=DEFAULT_PROPERTY_KEY_PREFIX)
    pg2rdf.add_argument("--edge-label-prefix", default=DEFAULT_EDGE_LABEL_PREFIX)
    pg2rdf.add_argument("--vertex-ids", default="bnode",
                        help='"bnode" or "iri:<prefix>" (default: bnode)')
    pg2rdf.add_argument("--report", choices=("text", "json"), default="text")
    pg2rdf.set_defaults(func=cmd_pg2rdf)

    unfold = sub.add_parser("unfold", help="rewrite embedded triples via reification")
    io_flags(unfold)
    unfold.set_defaults(func=cmd_unfold)

    roundtrip = sub.add_parser("roundtrip",
                               help="canonicalize, minimize, transform there and back, compare")
    io_flags(roundtrip, output=False)
    roundtrip.add_argument("--literal-mode", choices=("strict", "lenient"), default="lenient")
    roundtrip.add_argument("--report", choices=("text", "json"), default="text")
    roundtrip.set_defaults(func=cmd_roundtrip)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TurtleParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return 2
    except MappingConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except CliUsageError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2
    except (PgValidationError, ConvertibilityError, MalformedRdfLikePgError,
            NotPropertyUniqueError, NotEdgeUniqueError, NotPlainRdfError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
