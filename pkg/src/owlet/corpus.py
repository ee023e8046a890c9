"""The poultry ontology and mutated variants that exercise each clash.

Class IRIs use the human spelling with underscores
(``Health_monitoring_and_disease_control``); property IRIs are the camel
case names, with the original spellings kept in ``rdfs:label``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from owlet.iri import Iri, Namespace, name_to_fragment
from owlet.model import (
    COMMENT,
    LABEL,
    Annotation,
    Axiom,
    Characteristic,
    ClassAssertion,
    ComplementOf,
    DataAssertion,
    DeclareClass,
    DeclareProperty,
    DifferentIndividuals,
    DisjointClasses,
    Domain,
    HasCharacteristic,
    InverseOf,
    Literal,
    Named,
    ObjectAssertion,
    Ontology,
    PropertyKind,
    Range,
    SubClassOf,
)

__all__ = ["ONTOLOGY_IRI", "POULTRY", "CLASS_NAMES", "build_poultry_ontology",
           "CorpusFixture", "Fixtures", "fixtures", "cls", "prop", "ind"]

ONTOLOGY_IRI = Iri("http://ex.org/poultry")
POULTRY = Namespace("http://ex.org/poultry#")

# (label, parent label)
CLASS_NAMES = (
    ("Breeder farm management", None),
    ("Health monitoring and disease control", "Breeder farm management"),
    ("Biosecurity", "Health monitoring and disease control"),
    ("Vaccination", "Health monitoring and disease control"),
    ("Prevention of diseases", "Vaccination"),
    ("Bacterial", None),
    ("Fowl typhoid", None),
    ("Chicken", None),
    ("Layer", "Chicken"),
    ("Broiler", "Chicken"),
    ("White Leghorn", "Layer"),
    ("Rhode Island Red", "Layer"),
    ("White Cornish", "Broiler"),
)

# (IRI fragment, label as originally spelled, inverse fragment)
PROPERTY_NAMES = (
    ("hasPeriod", "hasPeriod", "isPeriodOf"),
    ("isPeriodOf", "IsPeriodOf", "hasPeriod"),
    ("hasPreventivemeasure", "hasPreventivemeasure", "isPreventivemeasureOf"),
    ("isPreventivemeasureOf", "isPreventivemeasureOf", "hasPreventivemeasure"),
    ("Prevents", "Prevents", "isPreventedBy"),
    ("isPreventedBy", "ispreventedBy", "Prevents"),
    ("Causes", "Causes", "isCausedBy"),
    ("isCausedBy", "isCausedBy", "Causes"),
)

# (property, domain, range); each inverse gets the mirrored pair
_SIGNATURES = (
    ("hasPreventivemeasure", "Health monitoring and disease control", "Vaccination"),
    ("Prevents", "Vaccination", "Bacterial"),
    ("Causes", "Bacterial", "Fowl typhoid"),
)

_STRICT = ("Prevents", "isPreventedBy", "Causes", "isCausedBy")


def cls(label: str) -> Iri:
    return POULTRY[name_to_fragment(label)]


def prop(name: str) -> Iri:
    return POULTRY[name]


def ind(name: str) -> Iri:
    return POULTRY[name]


def _inverse(name: str) -> str:
    return next(inv for n, _, inv in PROPERTY_NAMES if n == name)


def _tbox() -> list[Axiom]:
    axioms: list[Axiom] = []
    for label, parent in CLASS_NAMES:
        c = cls(label)
        if parent is None:
            axioms.append(DeclareClass(c))
        else:
            axioms.append(SubClassOf(c, cls(parent)))
        axioms.append(Annotation(c, LABEL, Literal(label, lang="en")))
    for name, label, inverse in PROPERTY_NAMES:
        p = prop(name)
        axioms.append(DeclareProperty(p, PropertyKind.OBJECT))
        axioms.append(Annotation(p, LABEL, Literal(label)))
        if name < inverse:
            axioms.append(InverseOf(p, prop(inverse)))
    for name in _STRICT:
        axioms.append(HasCharacteristic(prop(name), Characteristic.ASYMMETRIC))
        axioms.append(HasCharacteristic(prop(name), Characteristic.IRREFLEXIVE))
    for name, dom, rng in _SIGNATURES:
        axioms += [Domain(prop(name), cls(dom)), Range(prop(name), Named(cls(rng)))]
        inv = _inverse(name)
        axioms += [Domain(prop(inv), cls(rng)), Range(prop(inv), Named(cls(dom)))]
    axioms.append(Annotation(
        cls("Vaccination"), COMMENT,
        Literal("Measures that build immunity in a flock ahead of exposure.", lang="en"),
    ))
    return axioms


def _abox() -> list[Axiom]:
    sg, case = ind("SalmonellaGallinarum"), ind("FowlTyphoidCase1")
    return [
        ClassAssertion(cls("Bacterial"), sg),
        ObjectAssertion(prop("Causes"), sg, case),
        Annotation(sg, LABEL, Literal("Salmonella Gallinarum", lang="en")),
    ]


def build_poultry_ontology() -> Ontology:
    ont = Ontology(ONTOLOGY_IRI, _tbox() + _abox())
    return ont.add(Annotation(ONTOLOGY_IRI, LABEL, Literal("Poultry", lang="en")))


# ---------------------------------------------------------------- fixtures


@dataclass(frozen=True)
class CorpusFixture:
    """A corpus variant with the verdict and diagnostic kinds it must produce.

    ``core`` is a small sub-ontology, within the model-enumeration bounds,
    that carries the same verdict as the full fixture.
    """

    name: str
    ontology: Ontology
    expected_consistent: bool
    expected_diagnostic_kinds: frozenset[str]
    core: Ontology = field(repr=False, compare=False, default=None)
    description: str = ""


class Fixtures(list):
    """List of fixtures that can also be indexed by name."""

    def __getitem__(self, key):
        if isinstance(key, str):
            for f in self:
                if f.name == key:
                    return f
            raise KeyError(key)
        return super().__getitem__(key)

    def names(self) -> list[str]:
        return [f.name for f in self]


def _causes_core(*extra: Axiom) -> Ontology:
    causes, caused_by = prop("Causes"), prop("isCausedBy")
    sg, case = ind("SalmonellaGallinarum"), ind("FowlTyphoidCase1")
    axioms = [
        InverseOf(causes, caused_by),
        Domain(causes, cls("Bacterial")), Range(causes, Named(cls("Fowl typhoid"))),
        Domain(caused_by, cls("Fowl typhoid")), Range(caused_by, Named(cls("Bacterial"))),
        ClassAssertion(cls("Bacterial"), sg), ObjectAssertion(causes, sg, case),
    ]
    for p in (causes, caused_by):
        axioms += [HasCharacteristic(p, Characteristic.ASYMMETRIC),
                   HasCharacteristic(p, Characteristic.IRREFLEXIVE)]
    return Ontology(ONTOLOGY_IRI, axioms + list(extra))


def fixtures() -> Fixtures:
    base = build_poultry_ontology()
    C = Characteristic
    causes, prevents, period = prop("Causes"), prop("Prevents"), prop("hasPeriod")
    bio, vacc = cls("Biosecurity"), cls("Vaccination")
    flock_a, flock_b = ind("BroilerFlockA"), ind("BroilerFlockB")
    starter, grower = ind("StarterPeriod"), ind("GrowerPeriod")
    drive = ind("FarmHygieneDrive")
    vaccine, sg = ind("FowlTyphoidVaccine"), ind("SalmonellaGallinarum")
    out = Fixtures()

    def add(name, axioms, consistent, kinds, core_axioms=None, core=None, description=""):
        if core is None:
            core = Ontology(ONTOLOGY_IRI, core_axioms if core_axioms is not None else axioms)
        out.append(CorpusFixture(name, base.extend(axioms), consistent, frozenset(kinds),
                                 core, description))

    add("baseline", [], True, [], core=_causes_core(),
        description="the corpus as built")

    reflexive = HasCharacteristic(causes, C.REFLEXIVE)
    add("reflexive_causes", [reflexive], False,
        ["reflexive-asymmetric", "reflexive-irreflexive", "irreflexive-clash", "asymmetric-clash"],
        core=_causes_core(reflexive),
        description="Reflexive added to Causes, which is already Asymmetric and Irreflexive")

    symmetric = HasCharacteristic(causes, C.SYMMETRIC)
    add("symmetric_causes", [symmetric], False, ["symmetric-asymmetric", "asymmetric-clash"],
        core=_causes_core(symmetric),
        description="Symmetric added to Causes, which has a link")

    unused = [HasCharacteristic(period, C.SYMMETRIC), HasCharacteristic(period, C.ASYMMETRIC)]
    add("symmetric_asymmetric_unused", unused, True, ["symmetric-asymmetric"],
        description="Symmetric and Asymmetric on a property with no links")

    shared = [ClassAssertion(bio, drive), ClassAssertion(vacc, drive)]
    add("shared_individual_open_world", shared, True, [],
        description="one individual in two classes never declared disjoint")

    add("disjoint_violation", shared + [DisjointClasses(bio, vacc)], False, ["disjointness-clash"],
        description="the shared individual after declaring the classes disjoint")

    complement = [SubClassOf(bio, ComplementOf(vacc))] + shared
    add("complement_clash", complement, False, ["complement-clash"],
        description="Biosecurity made a subclass of the complement of Vaccination")

    cycle = [ObjectAssertion(prevents, vaccine, sg), ObjectAssertion(prevents, sg, vaccine)]
    add("asymmetric_cycle", cycle, False, ["asymmetric-clash"],
        core_axioms=cycle + [HasCharacteristic(prevents, C.ASYMMETRIC)],
        description="Prevents asserted in both directions")

    functional = [HasCharacteristic(period, C.FUNCTIONAL),
                  ObjectAssertion(period, flock_a, starter),
                  ObjectAssertion(period, flock_a, grower)]
    add("functional_warning", functional, True, ["functional-clash"],
        description="a functional property with two values that may denote the same period")
    add("functional_distinct", functional + [DifferentIndividuals(starter, grower)], False,
        ["functional-clash"],
        description="the same two values declared different")

    inv_functional = [HasCharacteristic(period, C.INVERSE_FUNCTIONAL),
                      ObjectAssertion(period, flock_a, starter),
                      ObjectAssertion(period, flock_b, starter)]
    add("inverse_functional_warning", inv_functional, True, ["inverse-functional-clash"],
        description="two flocks sharing a period under an inverse-functional property")
    add("inverse_functional_distinct", inv_functional + [DifferentIndividuals(flock_a, flock_b)],
        False, ["inverse-functional-clash"],
        description="the two flocks declared different")

    breed = prop("hasBreedName")
    data = [DeclareProperty(breed, PropertyKind.DATATYPE),
            HasCharacteristic(breed, C.FUNCTIONAL),
            DataAssertion(breed, flock_a, Literal("White Cornish")),
            DataAssertion(breed, flock_a, Literal("White Leghorn"))]
    add("functional_data_distinct", data, False, ["functional-clash"],
        description="a functional data property with two different strings")
    return out
