"""Axiom vocabulary and the immutable ontology container.

An :class:`Ontology` is a deduplicated set of axioms plus the signature
derived from them. Every update returns a new ontology; nothing is mutated
after construction.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

from owlet.errors import (
    OntologyError,
    PropertyKindError,
    RoleConflictError,
    UnknownEntityError,
)
from owlet.iri import RDFS, THING, XSD, Iri

__all__ = [
    "PropertyKind", "Characteristic", "Role", "Severity",
    "Named", "ComplementOf", "ClassExpression", "Literal",
    "Axiom", "DeclareClass", "DeclareProperty", "DeclareIndividual",
    "SubClassOf", "DisjointClasses", "HasCharacteristic", "InverseOf",
    "Domain", "Range", "ClassAssertion", "ObjectAssertion", "DataAssertion",
    "DifferentIndividuals", "Annotation",
    "Ontology", "Diagnostic",
    "new_ontology", "assert_axiom", "declared_subclasses", "merge", "annotate",
]


class PropertyKind(enum.Enum):
    OBJECT = "object"
    DATATYPE = "datatype"
    ANNOTATION = "annotation"


class Characteristic(enum.Enum):
    FUNCTIONAL = "Functional"
    INVERSE_FUNCTIONAL = "InverseFunctional"
    TRANSITIVE = "Transitive"
    SYMMETRIC = "Symmetric"
    # older ontology editors label this "Antisymmetric"; OWL 2 calls it asymmetric.
    ASYMMETRIC = "Asymmetric"
    REFLEXIVE = "Reflexive"
    IRREFLEXIVE = "Irreflexive"


class Role(enum.Enum):
    CLASS = "class"
    OBJECT_PROPERTY = "object property"
    DATATYPE_PROPERTY = "datatype property"
    ANNOTATION_PROPERTY = "annotation property"
    INDIVIDUAL = "individual"


_KIND_ROLE = {
    PropertyKind.OBJECT: Role.OBJECT_PROPERTY,
    PropertyKind.DATATYPE: Role.DATATYPE_PROPERTY,
    PropertyKind.ANNOTATION: Role.ANNOTATION_PROPERTY,
}
_ROLE_KIND = {v: k for k, v in _KIND_ROLE.items()}
PROPERTY_ROLES = frozenset(_ROLE_KIND)


class Severity(enum.Enum):
    ERROR = "error"
    WARNING = "warning"


# ---------------------------------------------------------------- terms


@dataclass(frozen=True, order=True, slots=True)
class Named:
    iri: Iri

    def key(self) -> tuple:
        return (self.iri.value, 0)

    def __str__(self) -> str:
        return self.iri.local_name


@dataclass(frozen=True, order=True, slots=True)
class ComplementOf:
    """Complement of a named class. Nesting is not representable."""

    iri: Iri

    def __post_init__(self) -> None:
        if not isinstance(self.iri, Iri):
            raise OntologyError("complement may only wrap a named class")

    def key(self) -> tuple:
        return (self.iri.value, 1)

    def __str__(self) -> str:
        return f"not {self.iri.local_name}"


ClassExpression = Union[Named, ComplementOf]

_LANG_RE = re.compile(r"[A-Za-z]{1,8}(-[A-Za-z0-9]{1,8})*\Z")
# XML 1.0 Char production; anything outside it cannot be written to RDF/XML.
_XML_ILLEGAL_RE = re.compile("[\x00-\x08\x0b\x0c\x0e-\x1f￾￿\ud800-\udfff]")


@dataclass(frozen=True, slots=True)
class Literal:
    lexical: str
    datatype: Iri = XSD["string"]
    lang: str | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.lexical, str):
            raise OntologyError("literal lexical form must be a string")
        if _XML_ILLEGAL_RE.search(self.lexical):
            raise OntologyError(f"literal contains characters not allowed in XML: {self.lexical!r}")
        if self.lang is not None:
            if self.datatype != XSD["string"]:
                raise OntologyError("a language tag is only allowed on string literals")
            if not _LANG_RE.match(self.lang):
                raise OntologyError(f"malformed language tag: {self.lang!r}")

    def key(self) -> tuple:
        return (self.lexical, self.datatype.value, self.lang or "")

    def __str__(self) -> str:
        s = f'"{self.lexical}"'
        if self.lang:
            return f"{s}@{self.lang}"
        if self.datatype != XSD["string"]:
            return f"{s}^^{self.datatype.local_name}"
        return s


def _as_class(x) -> ClassExpression:
    if isinstance(x, Iri):
        return Named(x)
    if isinstance(x, (Named, ComplementOf)):
        return x
    raise OntologyError(f"not a class expression: {x!r}")


# ---------------------------------------------------------------- axioms


class Axiom:
    """Base class of all axiom variants.

    Subclasses define ``rank`` (position in the canonical order) and
    ``fields_key``; :meth:`key` combines them into a total sort key.
    """

    __slots__ = ()
    rank: int = -1

    def fields_key(self) -> tuple:
        raise NotImplementedError

    def key(self) -> tuple:
        return (self.rank, self.fields_key())

    def __lt__(self, other: "Axiom") -> bool:
        return self.key() < other.key()


def _short(x) -> str:
    return x.local_name if isinstance(x, Iri) else str(x)


def _render(name: str, *args) -> str:
    return f"{name}({', '.join(_short(a) for a in args)})"


@dataclass(frozen=True, slots=True, eq=True)
class DeclareClass(Axiom):
    cls: Iri
    rank = 0

    def fields_key(self):
        return (self.cls.value,)

    def __str__(self):
        return _render("Class", self.cls)


@dataclass(frozen=True, slots=True)
class DeclareProperty(Axiom):
    prop: Iri
    kind: PropertyKind
    rank = 1

    def fields_key(self):
        return (self.prop.value, self.kind.value)

    def __str__(self):
        return f"{self.kind.value.capitalize()}Property({self.prop.local_name})"


@dataclass(frozen=True, slots=True)
class DeclareIndividual(Axiom):
    individual: Iri
    rank = 2

    def fields_key(self):
        return (self.individual.value,)

    def __str__(self):
        return _render("Individual", self.individual)


@dataclass(frozen=True, slots=True)
class SubClassOf(Axiom):
    sub: ClassExpression
    sup: ClassExpression
    rank = 3

    def __post_init__(self):
        object.__setattr__(self, "sub", _as_class(self.sub))
        object.__setattr__(self, "sup", _as_class(self.sup))

    def fields_key(self):
        return (self.sub.key(), self.sup.key())

    def __str__(self):
        return _render("SubClassOf", self.sub, self.sup)


@dataclass(frozen=True, slots=True)
class DisjointClasses(Axiom):
    """Stored with the smaller IRI first, so both argument orders are one axiom."""

    first: Iri
    second: Iri
    rank = 4

    def __post_init__(self):
        if self.second < self.first:
            a, b = self.second, self.first
            object.__setattr__(self, "first", a)
            object.__setattr__(self, "second", b)

    def fields_key(self):
        return (self.first.value, self.second.value)

    def __str__(self):
        return _render("DisjointClasses", self.first, self.second)


@dataclass(frozen=True, slots=True)
class HasCharacteristic(Axiom):
    prop: Iri
    characteristic: Characteristic
    rank = 5

    def fields_key(self):
        return (self.prop.value, self.characteristic.value)

    def __str__(self):
        return f"{self.characteristic.value}({self.prop.local_name})"


@dataclass(frozen=True, slots=True)
class InverseOf(Axiom):
    prop: Iri
    inverse: Iri
    rank = 6

    def fields_key(self):
        return (self.prop.value, self.inverse.value)

    def __str__(self):
        return _render("InverseOf", self.prop, self.inverse)


@dataclass(frozen=True, slots=True)
class Domain(Axiom):
    prop: Iri
    cls: Iri
    rank = 7

    def fields_key(self):
        return (self.prop.value, self.cls.value)

    def __str__(self):
        return _render("Domain", self.prop, self.cls)


@dataclass(frozen=True, slots=True)
class Range(Axiom):
    """Range of a property.

    ``target`` is a class expression for object properties and a bare
    datatype :class:`Iri` for datatype properties.
    """

    prop: Iri
    target: ClassExpression | Iri
    rank = 8

    def __post_init__(self):
        if not isinstance(self.target, (Iri, Named, ComplementOf)):
            raise OntologyError(f"bad range target: {self.target!r}")

    @property
    def is_datatype(self) -> bool:
        return isinstance(self.target, Iri)

    def fields_key(self):
        t = self.target
        return (self.prop.value, (t.value, 2) if isinstance(t, Iri) else t.key())

    def __str__(self):
        return _render("Range", self.prop, self.target)


@dataclass(frozen=True, slots=True)
class ClassAssertion(Axiom):
    cls: ClassExpression
    individual: Iri
    rank = 9

    def __post_init__(self):
        object.__setattr__(self, "cls", _as_class(self.cls))

    def fields_key(self):
        return (self.individual.value, self.cls.key())

    def __str__(self):
        return f"{_short(self.cls)}({self.individual.local_name})"


@dataclass(frozen=True, slots=True)
class ObjectAssertion(Axiom):
    prop: Iri
    subject: Iri
    object: Iri
    rank = 10

    def fields_key(self):
        return (self.subject.value, self.prop.value, self.object.value)

    def __str__(self):
        return _render(self.prop.local_name, self.subject, self.object)


@dataclass(frozen=True, slots=True)
class DataAssertion(Axiom):
    prop: Iri
    subject: Iri
    value: Literal
    rank = 11

    def fields_key(self):
        return (self.subject.value, self.prop.value, self.value.key())

    def __str__(self):
        return f"{self.prop.local_name}({self.subject.local_name}, {self.value})"


@dataclass(frozen=True, slots=True)
class DifferentIndividuals(Axiom):
    first: Iri
    second: Iri
    rank = 12

    def __post_init__(self):
        if self.second < self.first:
            a, b = self.second, self.first
            object.__setattr__(self, "first", a)
            object.__setattr__(self, "second", b)

    def fields_key(self):
        return (self.first.value, self.second.value)

    def __str__(self):
        return _render("DifferentIndividuals", self.first, self.second)


@dataclass(frozen=True, slots=True)
class Annotation(Axiom):
    target: Iri
    prop: Iri
    value: Literal
    rank = 13

    def fields_key(self):
        return (self.target.value, self.prop.value, self.value.key())

    def __str__(self):
        return f"{self.prop.local_name}({self.target.local_name}, {self.value})"


LOGICAL_AXIOMS = (
    SubClassOf, DisjointClasses, HasCharacteristic, InverseOf, Domain, Range,
    ClassAssertion, ObjectAssertion, DataAssertion, DifferentIndividuals,
)


# ------------------------------------------------------------- diagnostic


@dataclass(frozen=True)
class Diagnostic:
    severity: Severity
    kind: str
    entities: tuple[Iri, ...]
    message: str
    provenance: tuple[Axiom, ...] = ()

    def __post_init__(self):
        if not self.entities:
            raise ValueError("a diagnostic must name at least one entity")

    @property
    def is_error(self) -> bool:
        return self.severity is Severity.ERROR

    def sort_key(self) -> tuple:
        return (self.severity is not Severity.ERROR, self.kind,
                tuple(e.value for e in self.entities), self.message)

    def to_json(self) -> dict:
        return {
            "severity": self.severity.value,
            "kind": self.kind,
            "entities": [e.value for e in self.entities],
            "message": self.message,
        }


# --------------------------------------------------------------- ontology


def _role_name(role: Role) -> str:
    return "an " + role.value if role.value[0] in "aeiou" else "a " + role.value


class Ontology:
    """A validated, deduplicated set of axioms with its derived signature.

    ``strict`` ontologies (the default) reject role conflicts and property
    kind mismatches with an exception. Non-strict ontologies record such
    punning in the signature so that :func:`owlet.reasoner.check_profile`
    can report it; the readers build non-strict ontologies.
    """

    __slots__ = ("base_iri", "strict", "_axioms", "_roles", "_soft", "_sorted")

    def __init__(self, base_iri: Iri | str, axioms: Iterable[Axiom] = (), *, strict: bool = True):
        self.base_iri = base_iri if isinstance(base_iri, Iri) else Iri(base_iri)
        self.strict = strict
        self._axioms: set[Axiom] = set()
        self._roles: dict[Iri, set[Role]] = {THING: {Role.CLASS}}
        # properties typed only by the default of a kind-neutral axiom
        self._soft: set[Iri] = set()
        self._sorted: tuple[Axiom, ...] | None = None
        for ax in axioms:
            self._add(ax)

    # construction ----------------------------------------------------

    def _copy(self) -> "Ontology":
        new = Ontology.__new__(Ontology)
        new.base_iri = self.base_iri
        new.strict = self.strict
        new._axioms = set(self._axioms)
        new._roles = {k: set(v) for k, v in self._roles.items()}
        new._soft = set(self._soft)
        new._sorted = None
        return new

    def _claim(self, iri: Iri, role: Role) -> None:
        roles = self._roles.get(iri)
        if roles is None:
            self._roles[iri] = {role}
        elif role not in roles:
            if self.strict:
                other = sorted(roles, key=lambda r: r.value)[0]
                raise RoleConflictError(
                    f"{iri} is already used as {_role_name(other)}; "
                    f"cannot also use it as {_role_name(role)}"
                )
            roles.add(role)
        else:
            return
        if role is Role.CLASS:
            self._axioms.add(DeclareClass(iri))
        elif role is Role.INDIVIDUAL:
            self._axioms.add(DeclareIndividual(iri))
        else:
            self._axioms.add(DeclareProperty(iri, _ROLE_KIND[role]))

    def _prop(self, p: Iri, allowed: tuple[Role, ...], what: str) -> None:
        """Claim ``p`` as a property in one of the allowed roles (first is the default)."""
        have = self._roles.get(p, set()) & PROPERTY_ROLES
        if have & set(allowed):
            if len(allowed) == 1:
                self._soft.discard(p)
            return
        if p in self._soft:
            # Functional or Domain came first and guessed object; the guess yields
            self._soft.discard(p)
            self._axioms.discard(DeclareProperty(p, PropertyKind.OBJECT))
            self._roles[p].discard(Role.OBJECT_PROPERTY)
            if not self._roles[p]:
                del self._roles[p]
            self._claim(p, allowed[0])
            return
        if have and self.strict:
            kind = sorted(have, key=lambda r: r.value)[0]
            raise PropertyKindError(f"{what} requires {_role_name(allowed[0])}; {p} is {_role_name(kind)}")
        self._claim(p, allowed[0])
        if len(allowed) > 1 and not have:
            self._soft.add(p)

    def _class_expr(self, ce: ClassExpression) -> None:
        self._claim(ce.iri, Role.CLASS)

    def _add(self, ax: Axiom) -> None:
        if not isinstance(ax, Axiom):
            raise OntologyError(f"not an axiom: {ax!r}")
        if isinstance(ax, DeclareProperty) and ax.kind is PropertyKind.OBJECT:
            self._soft.discard(ax.prop)
        if ax in self._axioms:
            return
        self._sorted = None
        obj = (Role.OBJECT_PROPERTY,)
        match ax:
            case DeclareClass(cls=c):
                if c != THING:
                    self._claim(c, Role.CLASS)
                return
            case DeclareProperty(prop=p, kind=k):
                self._prop(p, (_KIND_ROLE[k],), f"declaring {k.value} property")
                return
            case DeclareIndividual(individual=a):
                self._claim(a, Role.INDIVIDUAL)
                return
            case SubClassOf(sub=sub, sup=sup):
                self._class_expr(sub)
                self._class_expr(sup)
            case DisjointClasses(first=c, second=d):
                self._claim(c, Role.CLASS)
                self._claim(d, Role.CLASS)
            case HasCharacteristic(prop=p, characteristic=ch):
                if ch is Characteristic.FUNCTIONAL:
                    self._prop(p, (Role.OBJECT_PROPERTY, Role.DATATYPE_PROPERTY), "Functional")
                else:
                    self._prop(p, obj, f"{ch.value}: characteristic")
            case InverseOf(prop=p, inverse=q):
                self._prop(p, obj, "InverseOf")
                self._prop(q, obj, "InverseOf")
            case Domain(prop=p, cls=c):
                self._prop(p, (Role.OBJECT_PROPERTY, Role.DATATYPE_PROPERTY), "Domain")
                self._claim(c, Role.CLASS)
            case Range(prop=p, target=t):
                if isinstance(t, Iri):
                    self._prop(p, (Role.DATATYPE_PROPERTY,), "a datatype range")
                else:
                    self._prop(p, obj, "a class range")
                    self._class_expr(t)
            case ClassAssertion(cls=ce, individual=a):
                self._class_expr(ce)
                self._claim(a, Role.INDIVIDUAL)
            case ObjectAssertion(prop=p, subject=s, object=o):
                self._prop(p, obj, "an object assertion")
                self._claim(s, Role.INDIVIDUAL)
                self._claim(o, Role.INDIVIDUAL)
            case DataAssertion(prop=p, subject=s):
                self._prop(p, (Role.DATATYPE_PROPERTY,), "a data assertion")
                self._claim(s, Role.INDIVIDUAL)
            case DifferentIndividuals(first=a, second=b):
                self._claim(a, Role.INDIVIDUAL)
                self._claim(b, Role.INDIVIDUAL)
            case Annotation(prop=p):
                self._prop(p, (Role.ANNOTATION_PROPERTY,), "an annotation")
            case _:
                raise OntologyError(f"unsupported axiom: {ax!r}")
        self._axioms.add(ax)

    def add(self, *axioms: Axiom) -> "Ontology":
        """Return a new ontology with ``axioms`` and their implied declarations."""
        if all(ax in self._axioms for ax in axioms) and not any(
                isinstance(ax, DeclareProperty) and ax.prop in self._soft for ax in axioms):
            return self
        new = self._copy()
        for ax in axioms:
            new._add(ax)
        return new

    def extend(self, axioms: Iterable[Axiom]) -> "Ontology":
        return self.add(*axioms)

    def without(self, *axioms: Axiom) -> "Ontology":
        """Rebuild without the given axioms. Implied declarations are recomputed."""
        drop = set(axioms)
        return Ontology(self.base_iri, (a for a in self.axioms if a not in drop), strict=self.strict)

    def merge(self, other: "Ontology") -> "Ontology":
        return self.extend(other.axioms)

    def annotate(self, target: Iri, prop: Iri, value: Literal) -> "Ontology":
        if target not in self._roles and target != self.base_iri:
            raise UnknownEntityError(f"cannot annotate unknown entity {target}")
        return self.add(Annotation(target, prop, value))

    # queries ---------------------------------------------------------

    @property
    def axioms(self) -> tuple[Axiom, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self._axioms, key=Axiom.key))
        return self._sorted

    def of_type(self, *types: type) -> Iterator:
        return (a for a in self.axioms if isinstance(a, types))

    def __iter__(self) -> Iterator[Axiom]:
        return iter(self.axioms)

    def __len__(self) -> int:
        return len(self._axioms)

    def __contains__(self, ax: object) -> bool:
        return ax in self._axioms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ontology):
            return NotImplemented
        return self.base_iri == other.base_iri and self._axioms == other._axioms

    def __hash__(self) -> int:
        return hash((self.base_iri, frozenset(self._axioms)))

    def __repr__(self) -> str:
        return f"<Ontology {self.base_iri} axioms={len(self)}>"

    def roles(self, iri: Iri) -> frozenset[Role]:
        return frozenset(self._roles.get(iri, ()))

    def _with_role(self, role: Role) -> frozenset[Iri]:
        return frozenset(i for i, r in self._roles.items() if role in r)

    @property
    def signature(self) -> frozenset[Iri]:
        return frozenset(self._roles)

    @property
    def classes(self) -> frozenset[Iri]:
        return self._with_role(Role.CLASS)

    @property
    def individuals(self) -> frozenset[Iri]:
        return self._with_role(Role.INDIVIDUAL)

    @property
    def object_properties(self) -> frozenset[Iri]:
        return self._with_role(Role.OBJECT_PROPERTY)

    @property
    def datatype_properties(self) -> frozenset[Iri]:
        return self._with_role(Role.DATATYPE_PROPERTY)

    @property
    def annotation_properties(self) -> frozenset[Iri]:
        return self._with_role(Role.ANNOTATION_PROPERTY)

    def properties(self, kind: PropertyKind) -> frozenset[Iri]:
        return self._with_role(_KIND_ROLE[kind])

    def kinds_of(self, prop: Iri) -> frozenset[PropertyKind]:
        return frozenset(_ROLE_KIND[r] for r in self._roles.get(prop, ()) if r in _ROLE_KIND)

    def characteristics(self, prop: Iri) -> frozenset[Characteristic]:
        return frozenset(
            a.characteristic for a in self._axioms
            if isinstance(a, HasCharacteristic) and a.prop == prop
        )

    def subclasses(self, cls: Iri, direct: bool = False) -> frozenset[Iri]:
        """Asserted subclasses of ``cls``.

        Classes with no asserted named parent are direct children of Thing.
        The transitive set for Thing is every other class.
        """
        if Role.CLASS not in self._roles.get(cls, ()):
            raise UnknownEntityError(f"unknown class {cls}")
        children: dict[Iri, set[Iri]] = {}
        has_parent: set[Iri] = set()
        for a in self._axioms:
            if isinstance(a, SubClassOf) and isinstance(a.sub, Named) and isinstance(a.sup, Named):
                children.setdefault(a.sup.iri, set()).add(a.sub.iri)
                has_parent.add(a.sub.iri)
        roots = {c for c in self.classes if c not in has_parent and c != THING}
        children.setdefault(THING, set()).update(roots)
        if cls == THING and not direct:
            return self.classes - {THING}
        if direct:
            return frozenset(children.get(cls, set()) - {cls})
        seen: set[Iri] = set()
        stack = list(children.get(cls, ()))
        while stack:
            c = stack.pop()
            if c in seen:
                continue
            seen.add(c)
            stack.extend(children.get(c, ()))
        seen.discard(cls)
        return frozenset(seen)


# ----------------------------------------------------- functional facade


def new_ontology(base_iri: Iri | str, *, strict: bool = True) -> Ontology:
    return Ontology(base_iri, strict=strict)


def assert_axiom(ont: Ontology, ax: Axiom) -> Ontology:
    return ont.add(ax)


def declared_subclasses(ont: Ontology, cls: Iri, direct: bool = False) -> frozenset[Iri]:
    return ont.subclasses(cls, direct)


def merge(dst: Ontology, src: Ontology) -> Ontology:
    """Union of the two axiom sets; ``dst`` keeps its base IRI."""
    return dst.merge(src)


def annotate(ont: Ontology, target: Iri, prop: Iri, value: Literal | str) -> Ontology:
    if isinstance(value, str):
        value = Literal(value)
    return ont.annotate(target, prop, value)


LABEL = RDFS["label"]
COMMENT = RDFS["comment"]
