"""Regenerate the files under corpus/.

Run after an intentional change to the corpus or a serializer, then review
the diff by hand before committing: the tests treat these files as frozen.
"""

from pathlib import Path

from owlet.corpus import ONTOLOGY_IRI, build_poultry_ontology, fixtures
from owlet.model import Ontology
from owlet.rdf import export_dot, write_ntriples, write_rdfxml

ROOT = Path(__file__).resolve().parent.parent / "corpus"

PARSE_TYPE = """<?xml version="1.0" encoding="UTF-8"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:owl="http://www.w3.org/2002/07/owl#">
  <owl:Class rdf:about="http://ex.org/poultry#Layer">
    <owl:unionOf rdf:parseType="Collection">
      <owl:Class rdf:about="http://ex.org/poultry#White_Leghorn"/>
      <owl:Class rdf:about="http://ex.org/poultry#Rhode_Island_Red"/>
    </owl:unionOf>
  </owl:Class>
</rdf:RDF>
"""


def write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    print(f"wrote {path.relative_to(ROOT.parent)}")


def main() -> None:
    ont = build_poultry_ontology()
    write(ROOT / "poultry.rdf", write_rdfxml(ont))
    write(ROOT / "poultry.nt", write_ntriples(ont))
    write(ROOT / "poultry.dot", export_dot(ont))
    write(ROOT / "empty.rdf", write_rdfxml(Ontology(ONTOLOGY_IRI)))
    for f in fixtures():
        write(ROOT / "fixtures" / f"{f.name}.rdf", write_rdfxml(f.ontology))
    full = write_rdfxml(ont)
    write(ROOT / "fixtures" / "truncated.rdf", full[: len(full) // 2])
    write(ROOT / "fixtures" / "parse_type_collection.rdf", PARSE_TYPE)


if __name__ == "__main__":
    main()
