"""Atoms of the materialized graph and their derivations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Union

from owlet.iri import THING, Iri
from owlet.model import (
    Axiom,
    ClassAssertion,
    ComplementOf,
    Literal,
    Named,
    ObjectAssertion,
)


class Subsumption(NamedTuple):
    sub: Iri
    sup: Iri

    def key(self):
        return (0, self.sub.value, self.sup.value)

    def __str__(self):
        return f"{self.sub.local_name} ⊑ {self.sup.local_name}"


class Membership(NamedTuple):
    individual: Iri
    cls: Iri

    def key(self):
        return (1, self.individual.value, self.cls.value)

    def __str__(self):
        return f"{self.cls.local_name}({self.individual.local_name})"


class NonMembership(NamedTuple):
    """``individual`` is an instance of the complement of ``cls``."""

    individual: Iri
    cls: Iri

    def key(self):
        return (2, self.individual.value, self.cls.value)

    def __str__(self):
        return f"not {self.cls.local_name}({self.individual.local_name})"


class Link(NamedTuple):
    prop: Iri
    subject: Iri
    object: Iri

    def key(self):
        return (3, self.prop.value, self.subject.value, self.object.value)

    def __str__(self):
        return f"{self.prop.local_name}({self.subject.local_name}, {self.object.local_name})"


class DataLink(NamedTuple):
    prop: Iri
    subject: Iri
    value: Literal

    def key(self):
        return (4, self.prop.value, self.subject.value, self.value.key())

    def __str__(self):
        return f"{self.prop.local_name}({self.subject.local_name}, {self.value})"


# Plain tuple equality would make Membership(x, C) equal NonMembership(x, C);
# atoms of different kinds must never compare or hash equal.
def _atom_eq(self, other):
    if type(self) is not type(other):
        return NotImplemented if not isinstance(other, tuple) else False
    return tuple.__eq__(self, other)


def _atom_ne(self, other):
    eq = _atom_eq(self, other)
    return eq if eq is NotImplemented else not eq


def _atom_hash(self):
    return hash((type(self).__name__, *self))


for _kind in (Subsumption, Membership, NonMembership, Link, DataLink):
    _kind.__eq__, _kind.__ne__, _kind.__hash__ = _atom_eq, _atom_ne, _atom_hash

Atom = Union[Subsumption, Membership, NonMembership, Link, DataLink]
Premise = Union[Atom, Axiom]


def premise_key(p: Premise) -> tuple:
    # axioms sort before atoms; both keys are tuples of comparable parts
    if isinstance(p, Axiom):
        return (0, p.key())
    return (1, p.key())


class Derivation(NamedTuple):
    rule: str
    premises: tuple

    def key(self):
        return (self.rule, tuple(premise_key(p) for p in self.premises))


ASSERTED = "asserted"


@dataclass(frozen=True)
class InferredGraph:
    subsumptions: frozenset[Subsumption]
    class_memberships: frozenset[Membership]
    complement_memberships: frozenset[NonMembership]
    property_links: frozenset[Link]
    data_links: frozenset[DataLink]
    derivations: dict = field(repr=False)
    rounds: int = field(default=0, compare=False)

    def atoms(self) -> frozenset:
        return (self.subsumptions | self.class_memberships | self.complement_memberships
                | self.property_links | self.data_links)

    def __contains__(self, atom) -> bool:
        return atom in self.derivations

    def __len__(self) -> int:
        return len(self.derivations)

    def inferred(self) -> frozenset:
        """Atoms not directly asserted."""
        return frozenset(a for a, d in self.derivations.items() if d.rule != ASSERTED)

    def support(self, *atoms) -> frozenset[Axiom]:
        """Asserted axioms the given atoms ultimately rest on."""
        out: set[Axiom] = set()
        seen: set = set()
        stack = list(atoms)
        while stack:
            a = stack.pop()
            if isinstance(a, Axiom):
                out.add(a)
                continue
            if a in seen:
                continue
            seen.add(a)
            stack.extend(self.derivations[a].premises)
        return frozenset(out)

    def explain(self, atom, indent: int = 0) -> list[str]:
        """Derivation tree of ``atom`` as indented lines."""
        pad = "  " * indent
        d = self.derivations[atom]
        lines = [f"{pad}{atom}  [{d.rule}]"]
        for p in d.premises:
            if isinstance(p, Axiom):
                lines.append(f"{pad}  {p}  [axiom]")
            else:
                lines.extend(self.explain(p, indent + 1))
        return lines

    def links_of(self, prop: Iri) -> set[Link]:
        return {l for l in self.property_links if l.prop == prop}

    def members_of(self, cls: Iri) -> set[Iri]:
        return {m.individual for m in self.class_memberships if m.cls == cls}

    def abox_axioms(self) -> list[Axiom]:
        """Memberships and links as assertion axioms; Thing memberships are implicit and skipped."""
        out: list[Axiom] = []
        for m in self.class_memberships:
            if m.cls != THING:
                out.append(ClassAssertion(Named(m.cls), m.individual))
        for m in self.complement_memberships:
            out.append(ClassAssertion(ComplementOf(m.cls), m.individual))
        for l in self.property_links:
            out.append(ObjectAssertion(l.prop, l.subject, l.object))
        return sorted(out, key=Axiom.key)
