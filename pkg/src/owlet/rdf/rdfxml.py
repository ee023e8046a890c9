"""RDF/XML: a deterministic writer and a parser for the subset it emits.

The parser also accepts the common variants found in hand-written files
(rdf:ID, nested node elements, property attributes, xml:base) but rejects
anything that needs the irregular corners of the syntax, such as
``rdf:parseType`` and containers.
"""

from __future__ import annotations

import re
from collections import defaultdict
from urllib.parse import urljoin
from xml.parsers import expat

from owlet.errors import OwletError, RdfError, RdfSyntaxError
from owlet.iri import OWL, RDF, RDFS, XSD, Iri
from owlet.model import Literal, Ontology
from owlet.rdf.mapping import Decoded, decode_graph, from_triples, to_triples
from owlet.rdf.terms import BNode, Graph, Triple, render_term

__all__ = ["write_rdfxml", "parse_rdfxml", "read_rdfxml", "rdfxml_graph"]

_XML_NS = "http://www.w3.org/XML/1998/namespace"
_FIXED_PREFIXES = (("owl", OWL.base), ("rdf", RDF.base), ("rdfs", RDFS.base), ("xsd", XSD.base))

# element names by section, in output order
_SECTIONS = (
    OWL["Ontology"], OWL["AnnotationProperty"], OWL["ObjectProperty"],
    OWL["DatatypeProperty"], OWL["Class"], OWL["NamedIndividual"],
)

_NAME_START = (r"A-Za-z_À-ÖØ-öø-˿Ͱ-ͽͿ-῿"
               r"‌‍⁰-↏Ⰰ-⿯、-퟿豈-﷏ﷰ-�")
_NCNAME_SUFFIX = re.compile(rf"[{_NAME_START}][{_NAME_START}\-.0-9·̀-ͯ‿⁀]*\Z")


# ------------------------------------------------------------------ writer


def _escape_text(s: str) -> str:
    return (s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
            .replace("\r", "&#13;"))


def _escape_attr(s: str) -> str:
    return (_escape_text(s).replace('"', "&quot;").replace("\n", "&#10;")
            .replace("\t", "&#9;"))


def _split_qname(iri: Iri) -> tuple[str, str]:
    v = iri.value
    for i in range(len(v)):
        if _NCNAME_SUFFIX.match(v, i):
            return v[:i], v[i:]
    raise RdfError(f"{iri} has no local name usable as an XML element name")


def _default_namespace(base: Iri) -> str:
    b = base.value
    return b if b.endswith(("#", "/")) else b + "#"


class _Writer:
    def __init__(self, g: Graph, base: Iri):
        self.g = g
        self.prefix: dict[str, str] = {ns: p for p, ns in _FIXED_PREFIXES}
        self.default_ns = _default_namespace(base)
        extra = set()
        for t in g:
            ns, _ = _split_qname(t.predicate)
            if ns not in self.prefix and ns != self.default_ns:
                extra.add(ns)
        for i, ns in enumerate(sorted(extra), start=1):
            self.prefix[ns] = f"ns{i}"
        self.extra = sorted(extra)
        self.node_ids = {b: f"c{i}" for i, b in enumerate(sorted(g.blank_nodes()))}

    def qname(self, iri: Iri) -> str:
        ns, local = _split_qname(iri)
        if ns in self.prefix:
            return f"{self.prefix[ns]}:{local}"
        return local

    def ref(self, attr: str, x) -> str:
        if isinstance(x, BNode):
            return f'rdf:nodeID="{self.node_ids[x]}"'
        return f'rdf:{attr}="{_escape_attr(x.value)}"'

    def header(self) -> list[str]:
        lines = ['<?xml version="1.0" encoding="UTF-8"?>']
        decls = [f'xmlns="{_escape_attr(self.default_ns)}"']
        decls += [f'xmlns:{p}="{ns}"' for p, ns in _FIXED_PREFIXES]
        decls += [f'xmlns:{self.prefix[ns]}="{_escape_attr(ns)}"' for ns in self.extra]
        lines.append("<rdf:RDF " + decls[0])
        lines.extend("         " + d for d in decls[1:])
        lines[-1] += ">"
        return lines

    def child(self, t: Triple) -> str:
        name = self.qname(t.predicate)
        o = t.object
        if isinstance(o, Literal):
            attrs = ""
            if o.lang is not None:
                attrs = f' xml:lang="{o.lang}"'
            elif o.datatype != XSD["string"]:
                attrs = f' rdf:datatype="{_escape_attr(o.datatype.value)}"'
            if not o.lexical:
                return f"  <{name}{attrs}/>"
            return f"  <{name}{attrs}>{_escape_text(o.lexical)}</{name}>"
        return f"  <{name} {self.ref('resource', o)}/>"

    def node(self, subject, element: str, props: list[Triple]) -> list[str]:
        about = self.ref("about", subject)
        if not props:
            return [f"<{element} {about}/>"]
        return [f"<{element} {about}>", *(self.child(t) for t in props), f"</{element}>"]


def _child_key(t: Triple) -> tuple:
    rank = {RDF["type"]: 0, RDFS["label"]: 1, RDFS["comment"]: 2}.get(t.predicate, 3)
    return (rank, t.predicate.value, render_term(t.object))


def write_rdfxml(ont: Ontology | Graph, base: Iri | None = None) -> str:
    """Serialize to RDF/XML.

    Subjects are grouped into sections by their declaration type and sorted
    by IRI within each; anonymous complement classes come last and are
    referenced by ``rdf:nodeID``. The result depends only on the triples.
    """
    if isinstance(ont, Ontology):
        base = ont.base_iri
        g = to_triples(ont)
    else:
        g = ont
        if base is None:
            headers = sorted(t.subject for t in g if t.predicate == RDF["type"]
                             and t.object == OWL["Ontology"] and isinstance(t.subject, Iri))
            if not headers:
                raise RdfError("graph has no owl:Ontology header; pass base explicitly")
            base = headers[0]
    w = _Writer(g, base)

    by_subject = defaultdict(list)
    for t in g:
        by_subject[t.subject].append(t)

    sections: list[list] = [[] for _ in range(len(_SECTIONS) + 2)]
    for s, ts in by_subject.items():
        types = {t.object for t in ts if t.predicate == RDF["type"]}
        for i, typ in enumerate(_SECTIONS):
            if typ in types:
                break
        else:
            i, typ = len(_SECTIONS), None
        if isinstance(s, BNode):
            i = len(_SECTIONS) + 1
            typ = OWL["Class"] if OWL["Class"] in types else None
        element = w.qname(typ) if typ is not None else "rdf:Description"
        rest = sorted((t for t in ts if not (t.predicate == RDF["type"] and t.object == typ)),
                      key=_child_key)
        sort_key = (0, w.node_ids[s]) if isinstance(s, BNode) else (1, s.value)
        sections[i].append((sort_key, s, element, rest))

    lines = w.header()
    for section in sections:
        for _, s, element, rest in sorted(section, key=lambda e: e[0]):
            lines.append("")
            lines.extend("  " + line for line in w.node(s, element, rest))
    lines.append("</rdf:RDF>")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------ parser

_RDF_NS = RDF.base


def _name(raw: str) -> str:
    ns, _, local = raw.rpartition(" ")
    return ns + local


class _Parser:
    def __init__(self, base: str | None):
        self.p = expat.ParserCreate(namespace_separator=" ")
        self.p.buffer_text = True
        self.p.StartElementHandler = self.start
        self.p.EndElementHandler = self.end
        self.p.CharacterDataHandler = self.chars
        self.p.StartDoctypeDeclHandler = self.doctype
        self.p.EntityDeclHandler = self.doctype
        self.stack: list[dict] = []
        self.base = base
        self.triples: list[Triple] = []
        self.blanks: dict[str, BNode] = {}
        self.fresh = 0
        self.root_seen = False

    # helpers --------------------------------------------------------

    def error(self, msg: str) -> RdfSyntaxError:
        return RdfSyntaxError(msg, self.p.CurrentLineNumber, self.p.CurrentColumnNumber + 1)

    def unsupported(self, what: str) -> RdfSyntaxError:
        return self.error(f"unsupported construct: {what}")

    def doctype(self, *args):
        raise self.unsupported("DOCTYPE")

    def iri(self, ref: str, base: str | None) -> Iri:
        value = urljoin(base, ref) if base else ref
        try:
            return Iri(value)
        except OwletError as exc:
            raise self.error(f"bad IRI {ref!r}: {exc}") from None

    def blank(self, node_id: str | None) -> BNode:
        if node_id is None:
            self.fresh += 1
            return BNode(f"a{self.fresh}")
        if node_id not in self.blanks:
            self.blanks[node_id] = BNode(f"n{len(self.blanks)}")
        return self.blanks[node_id]

    def emit(self, s, p, o):
        try:
            self.triples.append(Triple(s, p, o))
        except OwletError as exc:
            raise self.error(str(exc)) from None

    def literal(self, text: str, datatype: Iri | None, lang: str | None) -> Literal:
        try:
            if datatype is not None:
                return Literal(text, datatype)
            return Literal(text, lang=lang or None)
        except OwletError as exc:
            raise self.error(str(exc)) from None

    # handlers -------------------------------------------------------

    def start(self, raw, attrs):
        name = _name(raw)
        for k in attrs:
            if " " not in k:
                raise self.error(f"attribute {k!r} has no namespace")
        attrs = {_name(k): v for k, v in attrs.items()}
        parent = self.stack[-1] if self.stack else None
        base = attrs.pop(_XML_NS + "base", None)
        inherited_base = parent["base"] if parent else self.base
        base = urljoin(inherited_base, base) if base and inherited_base else (base or inherited_base)
        lang = attrs.pop(_XML_NS + "lang", None)
        lang = lang if lang is not None else (parent["lang"] if parent else None)
        for k in list(attrs):
            if k.startswith(_XML_NS):
                del attrs[k]

        if parent is None:
            if self.root_seen:
                raise self.error("more than one root element")
            self.root_seen = True
            if name == _RDF_NS + "RDF":
                self.stack.append({"kind": "root", "base": base, "lang": lang})
                return
        if parent is None or parent["kind"] in ("root", "prop"):
            self.node_element(name, attrs, base, lang, parent)
        else:
            self.property_element(name, attrs, base, lang)

    def node_element(self, name, attrs, base, lang, parent):
        if name in (_RDF_NS + "li",) or name.startswith(_RDF_NS + "_"):
            raise self.unsupported("rdf:li")
        if _RDF_NS + "parseType" in attrs:
            raise self.unsupported("rdf:parseType")
        about = attrs.pop(_RDF_NS + "about", None)
        rid = attrs.pop(_RDF_NS + "ID", None)
        node_id = attrs.pop(_RDF_NS + "nodeID", None)
        if sum(x is not None for x in (about, rid, node_id)) > 1:
            raise self.error("node element has more than one of rdf:about, rdf:ID, rdf:nodeID")
        if about is not None:
            subject = self.iri(about, base)
        elif rid is not None:
            subject = self.iri("#" + rid, base)
        else:
            subject = self.blank(node_id)
        if name != _RDF_NS + "Description":
            self.emit(subject, RDF["type"], self.iri(name, None))
        for k, v in sorted(attrs.items()):
            if k.startswith(_RDF_NS) and k != _RDF_NS + "type":
                raise self.unsupported(f"rdf:{k[len(_RDF_NS):]} attribute")
            if k == _RDF_NS + "type":
                self.emit(subject, RDF["type"], self.iri(v, base))
            else:
                self.emit(subject, self.iri(k, None), self.literal(v, None, lang))
        if parent is not None and parent["kind"] == "prop":
            if parent["object"] is not None or "".join(parent["text"]).strip():
                raise self.error("property element has more than one value")
            parent["text"] = []
            parent["object"] = subject
        self.stack.append({"kind": "node", "subject": subject, "base": base, "lang": lang})

    def property_element(self, name, attrs, base, lang):
        if name == _RDF_NS + "li" or name.startswith(_RDF_NS + "_"):
            raise self.unsupported("rdf:li")
        if _RDF_NS + "parseType" in attrs:
            raise self.unsupported("rdf:parseType")
        if _RDF_NS + "ID" in attrs:
            raise self.unsupported("rdf:ID on a property element")
        resource = attrs.pop(_RDF_NS + "resource", None)
        node_id = attrs.pop(_RDF_NS + "nodeID", None)
        datatype = attrs.pop(_RDF_NS + "datatype", None)
        if attrs:
            raise self.unsupported("property attributes on a property element")
        if resource is not None and node_id is not None:
            raise self.error("property element has both rdf:resource and rdf:nodeID")
        obj = None
        if resource is not None:
            obj = self.iri(resource, base)
        elif node_id is not None:
            obj = self.blank(node_id)
        self.stack.append({
            "kind": "prop", "predicate": self.iri(name, None), "object": obj,
            "fixed": obj is not None, "datatype": self.iri(datatype, base) if datatype else None,
            "text": [], "base": base, "lang": lang,
            "subject": self.stack[-1]["subject"],
        })

    def end(self, raw):
        frame = self.stack.pop()
        if frame["kind"] != "prop":
            return
        text = "".join(frame["text"])
        if frame["object"] is not None:
            if text.strip():
                raise self.error("property element has both a resource and text content")
            obj = frame["object"]
        else:
            obj = self.literal(text, frame["datatype"], frame["lang"])
        self.emit(frame["subject"], frame["predicate"], obj)

    def chars(self, data):
        top = self.stack[-1] if self.stack else None
        if top is not None and top["kind"] == "prop":
            if top["fixed"] or top["object"] is not None:
                if data.strip():
                    raise self.error("text content next to a resource value")
                return
            top["text"].append(data)
        elif data.strip():
            raise self.error("unexpected text content")

    def run(self, text: str) -> Graph:
        try:
            self.p.Parse(text.encode("utf-8") if isinstance(text, str) else text, True)
        except expat.ExpatError as exc:
            raise RdfSyntaxError(expat.ErrorString(exc.code), exc.lineno, exc.offset + 1) from None
        return Graph(self.triples)


def rdfxml_graph(text: str | bytes, base: Iri | str | None = None) -> Graph:
    """Triples of an RDF/XML document. ``base`` resolves relative references."""
    b = base.value if isinstance(base, Iri) else base
    return _Parser(b).run(text)


def read_rdfxml(text: str | bytes, base: Iri | str | None = None) -> Decoded:
    return decode_graph(rdfxml_graph(text, base), base)


def parse_rdfxml(text: str | bytes, base: Iri | str | None = None) -> Ontology:
    return from_triples(rdfxml_graph(text, base), base)
