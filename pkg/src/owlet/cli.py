"""Command-line front end.

Exit status: 0 on success (and, for ``validate``, a consistent ontology),
1 when ``validate`` finds the ontology inconsistent, 2 on unreadable input
or bad usage.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from owlet.errors import OwletError
from owlet.iri import THING, Iri
from owlet.model import Ontology
from owlet.rdf.dot import export_dot
from owlet.rdf.mapping import decode_graph, to_triples
from owlet.rdf.ntriples import parse_ntriples, write_ntriples
from owlet.rdf.rdfxml import rdfxml_graph, write_rdfxml
from owlet.reasoner import check_consistency, check_profile, classify, materialize

log = logging.getLogger("owlet")

EXIT_OK, EXIT_INCONSISTENT, EXIT_USAGE = 0, 1, 2

_FORMATS = {".rdf": "rdfxml", ".owl": "rdfxml", ".xml": "rdfxml", ".nt": "ntriples"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def load(path: str, input_format: str | None = None, base: str | None = None) -> Ontology:
    fmt = input_format or _FORMATS.get(Path(path).suffix.lower())
    if fmt is None:
        raise UsageError(f"cannot tell the format of {path}; pass --input-format")
    data = Path(path).read_bytes()
    if fmt == "rdfxml":
        graph = rdfxml_graph(data, base)
    else:
        graph = parse_ntriples(data.decode("utf-8"))
    decoded = decode_graph(graph, base)
    for t in decoded.residue:
        log.warning("uninterpreted triple: %s", t)
    return decoded.ontology


def _paint(text: str, code: str, color: bool) -> str:
    return f"\x1b[{code}m{text}\x1b[0m" if color else text


def _use_color(stream) -> bool:
    return not os.environ.get("OWLET_NO_COLOR") and hasattr(stream, "isatty") and stream.isatty()


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


# ------------------------------------------------------------------ commands


def cmd_validate(args) -> int:
    ont = load(args.path, args.input_format, args.base)
    report = check_consistency(ont)
    diagnostics = sorted(check_profile(ont) + list(report.diagnostics), key=lambda d: d.sort_key())
    if args.json:
        doc = {"consistent": report.consistent, "diagnostics": [d.to_json() for d in diagnostics]}
        sys.stdout.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    else:
        color = _use_color(sys.stdout)
        for d in diagnostics:
            sev = _paint(d.severity.value, "31" if d.is_error else "33", color)
            sys.stdout.write(f"{sev} [{d.kind}] {d.message}\n")
            for ax in d.provenance:
                sys.stdout.write(f"    from {ax}\n")
        verdict = "consistent" if report.consistent else "inconsistent"
        sys.stdout.write(_paint(verdict, "32" if report.consistent else "31", color) + "\n")
    return EXIT_OK if report.consistent else EXIT_INCONSISTENT


def _name(iri: Iri) -> str:
    return "owl:Thing" if iri == THING else iri.local_name


def hierarchy_lines(ont: Ontology) -> list[str]:
    """Indented tree of the inferred hierarchy, children sorted by IRI."""
    edges = classify(ont)
    children: dict[Iri, list[Iri]] = {}
    for sub, sup in edges:
        children.setdefault(sup, []).append(sub)
    lines: list[str] = []

    def walk(c: Iri, depth: int, path: frozenset) -> None:
        lines.append("  " * depth + _name(c))
        for k in sorted(children.get(c, ())):
            if k not in path:
                walk(k, depth + 1, path | {k})

    walk(THING, 0, frozenset({THING}))
    return lines


def cmd_classify(args) -> int:
    ont = load(args.path, args.input_format, args.base)
    sys.stdout.write("\n".join(hierarchy_lines(ont)) + "\n")
    return EXIT_OK


def materialized(ont: Ontology) -> Ontology:
    """``ont`` with every inferred assertion added."""
    return ont.extend(materialize(ont).abox_axioms())


def cmd_materialize(args) -> int:
    ont = materialized(load(args.path, args.input_format, args.base))
    text = write_rdfxml(ont) if args.format == "rdfxml" else write_ntriples(ont)
    _write(text, args.output)
    return EXIT_OK


def cmd_export(args) -> int:
    ont = load(args.path, args.input_format, args.base)
    _write(export_dot(ont, include_inferred=args.inferred), args.output)
    return EXIT_OK


def stats(ont: Ontology) -> dict[str, int]:
    return {
        "classes": len(ont.classes),
        "object properties": len(ont.object_properties),
        "datatype properties": len(ont.datatype_properties),
        "annotation properties": len(ont.annotation_properties),
        "individuals": len(ont.individuals),
        "axioms": len(ont),
        # the ontology header is not counted
        "triples": len(to_triples(ont)) - 1,
    }


def cmd_stats(args) -> int:
    ont = load(args.path, args.input_format, args.base)
    for k, v in stats(ont).items():
        sys.stdout.write(f"{k}: {v}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--base", help="base IRI for relative references and headerless files")
    common.add_argument("--input-format", choices=("rdfxml", "ntriples"),
                        help="override the format implied by the file extension")
    common.add_argument("-v", "--verbose", action="store_true", help="log uninterpreted triples")

    p = _Parser(prog="owlet", description="Check, classify and convert OWL ontologies.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("validate", parents=[common], help="report clashes and profile problems")
    v.add_argument("path")
    v.add_argument("--json", action="store_true", help="machine-readable report")
    v.set_defaults(func=cmd_validate)

    c = sub.add_parser("classify", parents=[common], help="print the inferred class tree")
    c.add_argument("path")
    c.set_defaults(func=cmd_classify)

    m = sub.add_parser("materialize", parents=[common], help="write asserted plus inferred facts")
    m.add_argument("path")
    m.add_argument("-o", "--output")
    m.add_argument("--format", choices=("rdfxml", "ntriples"), default="rdfxml")
    m.set_defaults(func=cmd_materialize)

    e = sub.add_parser("export", parents=[common], help="export a Graphviz drawing")
    e.add_argument("path")
    e.add_argument("--dot", action="store_true", required=True)
    e.add_argument("--inferred", action="store_true", help="add inferred edges, dashed")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_export)

    s = sub.add_parser("stats", parents=[common], help="count entities, axioms and triples")
    s.add_argument("path")
    s.set_defaults(func=cmd_stats)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"owlet: error: {exc}\n")
        return EXIT_USAGE
    logging.basicConfig(level=logging.WARNING if args.verbose else logging.ERROR,
                        format="owlet: %(levelname)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"owlet: error: {exc}\n")
    except (OwletError, OSError, UnicodeDecodeError) as exc:
        sys.stderr.write(f"owlet: error: {args.path}: {exc}\n")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
