"""IRIs, namespaces and the fixed RDF/OWL vocabulary."""

from __future__ import annotations

import re
from dataclasses import dataclass

from owlet.errors import IriError

__all__ = ["Iri", "Namespace", "RDF", "RDFS", "OWL", "XSD", "THING", "name_to_fragment"]

# scheme ":" then anything but whitespace, controls and the characters N-Triples cannot carry in <...>
_IRI_RE = re.compile(r'[A-Za-z][A-Za-z0-9+.\-]*:[^\x00-\x20\x7f<>"{}|\\^`]+\Z')


@dataclass(frozen=True, order=True, slots=True)
class Iri:
    """Absolute IRI. Equality and ordering are on the raw string."""

    value: str

    def __post_init__(self) -> None:
        if not isinstance(self.value, str):
            raise IriError(f"IRI must be a string, got {type(self.value).__name__}")
        if not _IRI_RE.match(self.value):
            raise IriError(f"malformed IRI: {self.value!r}")

    def __str__(self) -> str:
        return self.value

    def __repr__(self) -> str:
        return f"Iri({self.value!r})"

    @property
    def local_name(self) -> str:
        """Fragment, or last path segment, or the whole IRI if neither exists."""
        v = self.value
        for sep in ("#", "/", ":"):
            head, found, tail = v.rpartition(sep)
            if found and tail:
                return tail
        return v


class Namespace:
    """Builds IRIs under a common prefix: ``Namespace("http://x#")["A"]``."""

    def __init__(self, base: str):
        self.base = base

    def __getitem__(self, name: str) -> Iri:
        return Iri(self.base + name)

    def __getattr__(self, name: str) -> Iri:
        if name.startswith("_"):
            raise AttributeError(name)
        return self[name]

    def __contains__(self, iri: Iri) -> bool:
        return iri.value.startswith(self.base)

    def __repr__(self) -> str:
        return f"Namespace({self.base!r})"


RDF = Namespace("http://www.w3.org/1999/02/22-rdf-syntax-ns#")
RDFS = Namespace("http://www.w3.org/2000/01/rdf-schema#")
OWL = Namespace("http://www.w3.org/2002/07/owl#")
XSD = Namespace("http://www.w3.org/2001/XMLSchema#")

THING = OWL["Thing"]


def name_to_fragment(name: str) -> str:
    """Human spelling to IRI fragment: spaces become underscores."""
    return "_".join(name.split())
