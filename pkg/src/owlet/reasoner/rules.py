"""Forward-chaining materialization.

Rule set:

* R1  subclass transitivity, and every declared class is below Thing
* R2  type inheritance along subclass axioms (including complement sides)
* R3  domain:  P(x, y), Domain(P, C)  =>  C(x)
* R4  range:   P(x, y), Range(P, C)   =>  C(y)       (object properties)
* R5  inverse: P(x, y), InverseOf(P, Q) => Q(y, x)   (both directions)
* R6  symmetric, R7 transitive, R8 reflexive over declared individuals

Evaluation is semi-naive in synchronous rounds: round k only joins atoms
first derived in round k-1 against the state at the end of round k-1, and
new atoms become visible together when the round closes. Among the
derivations found for an atom in its first round the smallest by
:meth:`Derivation.key` is kept, so the resulting graph, derivations
included, does not depend on which order the rules are tried in.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Callable, Iterable, Sequence

from owlet.iri import THING, Iri
from owlet.model import (
    Axiom,
    Characteristic,
    ClassAssertion,
    ComplementOf,
    DataAssertion,
    DeclareClass,
    DeclareIndividual,
    Domain,
    HasCharacteristic,
    InverseOf,
    Named,
    ObjectAssertion,
    Ontology,
    Range,
    SubClassOf,
)
from owlet.reasoner.graph import (
    ASSERTED,
    DataLink,
    Derivation,
    InferredGraph,
    Link,
    Membership,
    NonMembership,
    Subsumption,
)

__all__ = ["RULES", "materialize", "replay", "atom_bound", "asserted_atoms"]

RULES = ("R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8")


def asserted_atoms(ont: Ontology) -> dict:
    """Atoms stated directly by axioms, each with its ``asserted`` derivation."""
    out = {}
    for ax in ont.axioms:
        atom = _atom_of(ax)
        if atom is not None:
            d = Derivation(ASSERTED, (ax,))
            prev = out.get(atom)
            if prev is None or d.key() < prev.key():
                out[atom] = d
    return out


def _atom_of(ax: Axiom):
    if isinstance(ax, SubClassOf):
        if isinstance(ax.sub, Named) and isinstance(ax.sup, Named):
            return Subsumption(ax.sub.iri, ax.sup.iri)
        return None
    if isinstance(ax, ClassAssertion):
        if isinstance(ax.cls, Named):
            return Membership(ax.individual, ax.cls.iri)
        return NonMembership(ax.individual, ax.cls.iri)
    if isinstance(ax, ObjectAssertion):
        return Link(ax.prop, ax.subject, ax.object)
    if isinstance(ax, DataAssertion):
        return DataLink(ax.prop, ax.subject, ax.value)
    return None


def atom_bound(ont: Ontology) -> int:
    """Hard cap on the number of atoms a fixpoint can contain."""
    c = len(ont.classes)
    i = len(ont.individuals)
    p = len(ont.object_properties)
    data = sum(1 for _ in ont.of_type(DataAssertion))
    return c * c + 2 * i * c + p * i * i + data


class _TBox:
    """Schema axioms indexed for the joins."""

    def __init__(self, ont: Ontology):
        self.pos_to_neg = defaultdict(list)   # SubClassOf(C, not D)
        self.neg_to_pos = defaultdict(list)   # SubClassOf(not C, D)
        self.neg_to_neg = defaultdict(list)   # SubClassOf(not C, not D)
        self.domains = defaultdict(list)
        self.ranges = defaultdict(list)
        self.inverses = defaultdict(list)
        self.symmetric = {}
        self.transitive = {}
        self.reflexive = {}
        self.class_decls = []
        self.individual_decls = []
        for ax in ont.axioms:
            match ax:
                case SubClassOf(sub=Named(iri=c), sup=ComplementOf(iri=d)):
                    self.pos_to_neg[c].append((d, ax))
                case SubClassOf(sub=ComplementOf(iri=c), sup=Named(iri=d)):
                    self.neg_to_pos[c].append((d, ax))
                case SubClassOf(sub=ComplementOf(iri=c), sup=ComplementOf(iri=d)):
                    self.neg_to_neg[c].append((d, ax))
                case Domain(prop=p, cls=c):
                    self.domains[p].append((c, ax))
                case Range(prop=p, target=Named() | ComplementOf() as t):
                    self.ranges[p].append((t, ax))
                case InverseOf(prop=p, inverse=q):
                    self.inverses[p].append((q, ax))
                    if q != p:
                        self.inverses[q].append((p, ax))
                case HasCharacteristic(prop=p, characteristic=Characteristic.SYMMETRIC):
                    self.symmetric[p] = ax
                case HasCharacteristic(prop=p, characteristic=Characteristic.TRANSITIVE):
                    self.transitive[p] = ax
                case HasCharacteristic(prop=p, characteristic=Characteristic.REFLEXIVE):
                    self.reflexive[p] = ax
                case DeclareClass(cls=c):
                    self.class_decls.append(ax)
                case DeclareIndividual():
                    self.individual_decls.append(ax)


class _State:
    """Atom store with the join indexes."""

    def __init__(self):
        self.derivations: dict = {}
        self.sups = defaultdict(set)
        self.subs = defaultdict(set)
        self.types = defaultdict(set)
        self.members = defaultdict(set)
        self.neg_types = defaultdict(set)
        self.out = defaultdict(set)
        self.inn = defaultdict(set)

    def insert(self, atom, d: Derivation) -> None:
        self.derivations[atom] = d
        match atom:
            case Subsumption(sub=a, sup=b):
                self.sups[a].add(b)
                self.subs[b].add(a)
            case Membership(individual=x, cls=c):
                self.types[x].add(c)
                self.members[c].add(x)
            case NonMembership(individual=x, cls=c):
                self.neg_types[x].add(c)
            case Link(prop=p, subject=x, object=y):
                self.out[(p, x)].add(y)
                self.inn[(p, y)].add(x)


Emit = Callable[[object, str, tuple], None]


def _r1(atom, s: _State, t: _TBox, emit: Emit) -> None:
    if type(atom) is not Subsumption:
        return
    a, b = atom
    # a cycle makes a class its own subsumer, as the rule literally says
    for c in s.sups.get(b, ()):
        emit(Subsumption(a, c), "R1", (atom, Subsumption(b, c)))
    for z in s.subs.get(a, ()):
        emit(Subsumption(z, b), "R1", (Subsumption(z, a), atom))


def _r2(atom, s: _State, t: _TBox, emit: Emit) -> None:
    kind = type(atom)
    if kind is Membership:
        x, c = atom
        for d in s.sups.get(c, ()):
            emit(Membership(x, d), "R2", (atom, Subsumption(c, d)))
        for d, ax in t.pos_to_neg.get(c, ()):
            emit(NonMembership(x, d), "R2", (atom, ax))
    elif kind is Subsumption:
        c, d = atom
        for x in s.members.get(c, ()):
            emit(Membership(x, d), "R2", (Membership(x, c), atom))
    elif kind is NonMembership:
        x, c = atom
        for d, ax in t.neg_to_pos.get(c, ()):
            emit(Membership(x, d), "R2", (atom, ax))
        for d, ax in t.neg_to_neg.get(c, ()):
            emit(NonMembership(x, d), "R2", (atom, ax))


def _r3(atom, s: _State, t: _TBox, emit: Emit) -> None:
    if type(atom) in (Link, DataLink):
        for c, ax in t.domains.get(atom.prop, ()):
            emit(Membership(atom.subject, c), "R3", (atom, ax))


def _r4(atom, s: _State, t: _TBox, emit: Emit) -> None:
    if type(atom) is Link:
        for ce, ax in t.ranges.get(atom.prop, ()):
            cls = Membership if isinstance(ce, Named) else NonMembership
            emit(cls(atom.object, ce.iri), "R4", (atom, ax))


def _r5(atom, s: _State, t: _TBox, emit: Emit) -> None:
    if type(atom) is Link:
        for q, ax in t.inverses.get(atom.prop, ()):
            emit(Link(q, atom.object, atom.subject), "R5", (atom, ax))


def _r6(atom, s: _State, t: _TBox, emit: Emit) -> None:
    if type(atom) is Link:
        ax = t.symmetric.get(atom.prop)
        if ax is not None:
            emit(Link(atom.prop, atom.object, atom.subject), "R6", (atom, ax))


def _r7(atom, s: _State, t: _TBox, emit: Emit) -> None:
    if type(atom) is not Link:
        return
    p, x, y = atom
    ax = t.transitive.get(p)
    if ax is None:
        return
    for z in s.out.get((p, y), ()):
        emit(Link(p, x, z), "R7", (atom, Link(p, y, z), ax))
    for w in s.inn.get((p, x), ()):
        emit(Link(p, w, y), "R7", (Link(p, w, x), atom, ax))


def _r8(atom, s: _State, t: _TBox, emit: Emit) -> None:
    # axiom-only premises: fires once, from _seed
    return


_JOINS = {"R1": _r1, "R2": _r2, "R3": _r3, "R4": _r4,
          "R5": _r5, "R6": _r6, "R7": _r7, "R8": _r8}


def _seed(t: _TBox, schedule: Sequence[str], emit: Emit) -> None:
    """Rules whose premises are axioms only."""
    for rule in schedule:
        if rule == "R1":
            for ax in t.class_decls:
                if ax.cls != THING:
                    emit(Subsumption(ax.cls, THING), "R1", (ax,))
        elif rule == "R8":
            for p, ax in t.reflexive.items():
                for decl in t.individual_decls:
                    x = decl.individual
                    emit(Link(p, x, x), "R8", (ax, decl))


def materialize(ont: Ontology, schedule: Sequence[str] | None = None) -> InferredGraph:
    """Compute the fixpoint of R1-R8 over ``ont``.

    ``schedule`` is the order in which rules are tried inside each round;
    it must be a permutation of :data:`RULES`.
    """
    if schedule is None:
        schedule = RULES
    elif sorted(schedule) != sorted(RULES):
        raise ValueError(f"schedule must be a permutation of {RULES}")

    tbox = _TBox(ont)
    state = _State()
    delta = asserted_atoms(ont)
    for atom, d in delta.items():
        state.insert(atom, d)

    bound = atom_bound(ont)
    pending: dict = {}

    def emit(atom, rule: str, premises: tuple) -> None:
        if atom in state.derivations:
            return
        d = Derivation(rule, premises)
        prev = pending.get(atom)
        if prev is None or d.key() < prev.key():
            pending[atom] = d

    _seed(tbox, schedule, emit)
    rounds = 0
    frontier = list(delta)
    while frontier or pending:
        rounds += 1
        for rule in schedule:
            join = _JOINS[rule]
            for atom in frontier:
                join(atom, state, tbox, emit)
        frontier = list(pending)
        for atom, d in pending.items():
            state.insert(atom, d)
        pending = {}
        if len(state.derivations) > bound:
            raise RuntimeError(
                f"materialization exceeded its atom bound ({len(state.derivations)} > {bound})"
            )

    by_type = defaultdict(set)
    for atom in state.derivations:
        by_type[type(atom)].add(atom)
    return InferredGraph(
        subsumptions=frozenset(by_type[Subsumption]),
        class_memberships=frozenset(by_type[Membership]),
        complement_memberships=frozenset(by_type[NonMembership]),
        property_links=frozenset(by_type[Link]),
        data_links=frozenset(by_type[DataLink]),
        derivations=state.derivations,
        rounds=rounds,
    )


# ------------------------------------------------------------------ replay


def _expect(cond: bool, rule: str, premises: Iterable) -> None:
    if not cond:
        raise ValueError(f"premises do not instantiate {rule}: {list(map(str, premises))}")


def replay(d: Derivation):
    """Recompute the conclusion of a single derivation step from its premises.

    Independent of the join code above; used to audit derivations.
    """
    rule, ps = d.rule, d.premises
    if rule == ASSERTED:
        _expect(len(ps) == 1, rule, ps)
        atom = _atom_of(ps[0])
        _expect(atom is not None, rule, ps)
        return atom
    if rule == "R1":
        if len(ps) == 1:
            _expect(isinstance(ps[0], DeclareClass), rule, ps)
            return Subsumption(ps[0].cls, THING)
        a, b = ps
        _expect(isinstance(a, Subsumption) and isinstance(b, Subsumption) and a.sup == b.sub, rule, ps)
        return Subsumption(a.sub, b.sup)
    if rule == "R2":
        m, link = ps
        if isinstance(link, Subsumption):
            _expect(isinstance(m, Membership) and m.cls == link.sub, rule, ps)
            return Membership(m.individual, link.sup)
        _expect(isinstance(link, SubClassOf), rule, ps)
        positive = isinstance(m, Membership)
        _expect(isinstance(m, (Membership, NonMembership)) and m.cls == link.sub.iri
                and isinstance(link.sub, Named) == positive, rule, ps)
        out = Membership if isinstance(link.sup, Named) else NonMembership
        return out(m.individual, link.sup.iri)
    if rule == "R3":
        l, ax = ps
        _expect(isinstance(ax, Domain) and l.prop == ax.prop, rule, ps)
        return Membership(l.subject, ax.cls)
    if rule == "R4":
        l, ax = ps
        _expect(isinstance(l, Link) and isinstance(ax, Range) and l.prop == ax.prop
                and not ax.is_datatype, rule, ps)
        out = Membership if isinstance(ax.target, Named) else NonMembership
        return out(l.object, ax.target.iri)
    if rule == "R5":
        l, ax = ps
        _expect(isinstance(ax, InverseOf) and l.prop in (ax.prop, ax.inverse), rule, ps)
        q = ax.inverse if l.prop == ax.prop else ax.prop
        return Link(q, l.object, l.subject)
    if rule == "R6":
        l, ax = ps
        _expect(isinstance(ax, HasCharacteristic) and ax.characteristic is Characteristic.SYMMETRIC
                and ax.prop == l.prop, rule, ps)
        return Link(l.prop, l.object, l.subject)
    if rule == "R7":
        l1, l2, ax = ps
        _expect(isinstance(ax, HasCharacteristic) and ax.characteristic is Characteristic.TRANSITIVE
                and l1.prop == l2.prop == ax.prop and l1.object == l2.subject, rule, ps)
        return Link(l1.prop, l1.subject, l2.object)
    if rule == "R8":
        ax, decl = ps
        _expect(isinstance(ax, HasCharacteristic) and ax.characteristic is Characteristic.REFLEXIVE
                and isinstance(decl, DeclareIndividual), rule, ps)
        return Link(ax.prop, decl.individual, decl.individual)
    raise ValueError(f"unknown rule {rule!r}")
