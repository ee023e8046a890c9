"""Canonical N-Triples writer and a line-based reader."""

from __future__ import annotations

import re
from collections import defaultdict

from owlet.errors import OwletError, RdfSyntaxError
from owlet.iri import RDF, XSD, Iri
from owlet.model import Literal, Ontology
from owlet.rdf.terms import BNode, Graph, Triple, render_term

__all__ = ["write_ntriples", "parse_ntriples"]

_NUMBERED = re.compile(r"b(\d+)\Z")


def _label_key(b: BNode) -> tuple:
    m = _NUMBERED.match(b.label)
    return (0, int(m.group(1)), "") if m else (1, 0, b.label)


def _blank_signatures(g: Graph) -> dict[BNode, str]:
    """Label-independent description of each blank node's immediate neighbourhood."""
    lines = defaultdict(list)
    for t in g:
        for b in {x for x in (t.subject, t.object) if isinstance(x, BNode)}:
            parts = []
            for x in (t.subject, t.predicate, t.object):
                if x == b:
                    parts.append("_:*")
                elif isinstance(x, BNode):
                    parts.append("_:")
                else:
                    parts.append(render_term(x))
            lines[b].append(" ".join(parts))
    return {b: "\n".join(sorted(v)) for b, v in lines.items()}


def write_ntriples(g: Graph | Ontology) -> str:
    """One triple per line in canonical order, blank nodes renamed ``_:b0, _:b1, ...``.

    Lines are ordered by their rendering with blank nodes replaced by a
    label-independent rank, then blanks are numbered in order of first use.
    Output is identical for graphs that differ only in blank labels (as
    long as blanks are distinguishable by their neighbourhood).
    """
    if isinstance(g, Ontology):
        from owlet.rdf.mapping import to_triples
        g = to_triples(g)
    sigs = _blank_signatures(g)
    ranked = sorted(sigs, key=lambda b: (sigs[b], _label_key(b)))
    rank = {b: f"_:{i:08d}" for i, b in enumerate(ranked)}

    def sort_key(t: Triple) -> str:
        return " ".join(rank[x] if isinstance(x, BNode) else render_term(x)
                        for x in (t.subject, t.predicate, t.object))

    names: dict[BNode, str] = {}

    def name(x) -> str:
        if isinstance(x, BNode):
            if x not in names:
                names[x] = f"_:b{len(names)}"
            return names[x]
        return render_term(x)

    out = []
    for t in sorted(g, key=sort_key):
        out.append(f"{name(t.subject)} {name(t.predicate)} {name(t.object)} .\n")
    return "".join(out)


# ------------------------------------------------------------------ reader

_IRI = r"<((?:[^<>\"{}|^`\\\x00-\x20]|\\u[0-9A-Fa-f]{4}|\\U[0-9A-Fa-f]{8})*)>"
_BLANK = r"_:([A-Za-z0-9_](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?)"
_STRING = r'"((?:[^"\\\n\r]|\\.)*)"'
_TERM = re.compile(rf"\s*(?:{_IRI}|{_BLANK}|{_STRING}(?:@([A-Za-z]+(?:-[A-Za-z0-9]+)*)|\^\^{_IRI})?)")
_END = re.compile(r"\s*\.\s*(#.*)?\Z")

_UNESCAPE = re.compile(r"\\(?:u([0-9A-Fa-f]{4})|U([0-9A-Fa-f]{8})|(.))")
_ECHAR = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}


def _unescape(s: str, line: int) -> str:
    def sub(m):
        if m.group(1) or m.group(2):
            return chr(int(m.group(1) or m.group(2), 16))
        c = m.group(3)
        if c not in _ECHAR:
            raise RdfSyntaxError(f"bad escape \\{c}", line)
        return _ECHAR[c]
    return _UNESCAPE.sub(sub, s)


def _term(text: str, pos: int, line: int):
    m = _TERM.match(text, pos)
    if not m:
        raise RdfSyntaxError(f"expected a term at {text[pos:pos + 20]!r}", line, pos + 1)
    iri, blank, lex, lang, dt = m.groups()
    try:
        if iri is not None:
            return Iri(_unescape(iri, line)), m.end()
        if blank is not None:
            return BNode(blank), m.end()
        lex = _unescape(lex, line)
        if lang:
            return Literal(lex, lang=lang), m.end()
        if dt:
            dt = Iri(_unescape(dt, line))
            if dt == RDF["langString"]:
                raise RdfSyntaxError("rdf:langString literal without a language tag", line)
            return Literal(lex, dt), m.end()
        return Literal(lex, XSD["string"]), m.end()
    except RdfSyntaxError:
        raise
    except OwletError as exc:
        raise RdfSyntaxError(str(exc), line, pos + 1) from exc


def parse_ntriples(text: str) -> Graph:
    triples = []
    # str.splitlines would also break on U+2028 and friends, which literals carry raw
    for n, raw in enumerate(text.split("\n"), start=1):
        raw = raw.removesuffix("\r")
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        s, pos = _term(raw, 0, n)
        p, pos = _term(raw, pos, n)
        o, pos = _term(raw, pos, n)
        if not _END.match(raw, pos):
            raise RdfSyntaxError("expected '.' at end of triple", n, pos + 1)
        if isinstance(s, Literal):
            raise RdfSyntaxError("literal in subject position", n, 1)
        if not isinstance(p, Iri):
            raise RdfSyntaxError("predicate must be an IRI", n)
        triples.append(Triple(s, p, o))
    return Graph(triples)
