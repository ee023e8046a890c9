"""RDF terms, triples and graphs."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from owlet.errors import RdfError
from owlet.iri import XSD, Iri
from owlet.model import Literal

__all__ = ["BNode", "Term", "Triple", "Graph", "render_term", "escape_string"]

_BNODE_RE = re.compile(r"[A-Za-z0-9_]([A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?\Z")

# labels starting with this are produced by to_triples and never read back verbatim
GENERATED_PREFIX = "owletc"


@dataclass(frozen=True, order=True, slots=True)
class BNode:
    label: str

    def __post_init__(self):
        if not _BNODE_RE.match(self.label):
            raise RdfError(f"bad blank node label: {self.label!r}")

    def __str__(self):
        return f"_:{self.label}"


Term = Union[Iri, BNode, Literal]

_ESCAPES = {'"': '\\"', "\\": "\\\\", "\n": "\\n", "\r": "\\r"}
_ESCAPE_RE = re.compile(r'["\\\n\r]')


def escape_string(s: str) -> str:
    return _ESCAPE_RE.sub(lambda m: _ESCAPES[m.group()], s)


def render_term(t: Term) -> str:
    """N-Triples rendering of a single term."""
    if isinstance(t, Iri):
        return f"<{t.value}>"
    if isinstance(t, BNode):
        return f"_:{t.label}"
    s = f'"{escape_string(t.lexical)}"'
    if t.lang is not None:
        return f"{s}@{t.lang}"
    if t.datatype != XSD["string"]:
        return f"{s}^^<{t.datatype.value}>"
    return s


@dataclass(frozen=True, slots=True)
class Triple:
    subject: Iri | BNode
    predicate: Iri
    object: Term

    def __post_init__(self):
        if isinstance(self.subject, Literal):
            raise RdfError(f"literal in subject position: {render_term(self.subject)}")
        if not isinstance(self.subject, (Iri, BNode)):
            raise RdfError(f"bad subject: {self.subject!r}")
        if not isinstance(self.predicate, Iri):
            raise RdfError(f"predicate must be an IRI: {self.predicate!r}")
        if not isinstance(self.object, (Iri, BNode, Literal)):
            raise RdfError(f"bad object: {self.object!r}")

    def render(self) -> str:
        return f"{render_term(self.subject)} {render_term(self.predicate)} {render_term(self.object)} ."

    def __str__(self):
        return self.render()


class Graph:
    """Deduplicated set of triples, iterated in N-Triples rendering order."""

    __slots__ = ("_triples", "_order")

    def __init__(self, triples: Iterable[Triple] = ()):
        self._triples = frozenset(triples)
        self._order: tuple[Triple, ...] | None = None

    @property
    def triples(self) -> tuple[Triple, ...]:
        if self._order is None:
            self._order = tuple(sorted(self._triples, key=Triple.render))
        return self._order

    def __iter__(self) -> Iterator[Triple]:
        return iter(self.triples)

    def __len__(self) -> int:
        return len(self._triples)

    def __contains__(self, t: object) -> bool:
        return t in self._triples

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._triples == other._triples

    def __hash__(self) -> int:
        return hash(self._triples)

    def __or__(self, other: "Graph") -> "Graph":
        return Graph(self._triples | other._triples)

    def __repr__(self) -> str:
        return f"<Graph triples={len(self)}>"

    def blank_nodes(self) -> set[BNode]:
        out = set()
        for t in self._triples:
            if isinstance(t.subject, BNode):
                out.add(t.subject)
            if isinstance(t.object, BNode):
                out.add(t.object)
        return out

    def objects(self, subject, predicate) -> list[Term]:
        return [t.object for t in self.triples if t.subject == subject and t.predicate == predicate]
