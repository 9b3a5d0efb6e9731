"""Vocabulary table for RDF output.

Every IRI the Turtle and TriG writers emit as a predicate or as the
object of ``rdf:type`` must come from this table; anything else is
rejected with :class:`~micropub.errors.UnknownTerm`.

Selectors use Open Annotation term names (``oa:TextQuoteSelector``,
``oa:TextPositionSelector``). The older Annotation Ontology names are
not emitted.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import UnknownTerm

DEFAULT_NAMESPACE = "http://purl.org/mp#"
INSTANCE_BASE = "urn:mp:"

MP_CLASSES = (
    "Micropublication",
    "Representation",
    "Sentence",
    "Statement",
    "Claim",
    "Qualifier",
    "Reference",
    "SemanticQualifier",
    "Data",
    "Method",
    "Procedure",
    "Material",
    "Attribution",
    "Agent",
    "Person",
    "Organization",
    "ArticleText",
)

MP_PREDICATES = (
    "supports",
    "challenges",
    "directlyChallenges",
    "arguedBy",
    "asserts",
    "quotes",
    "elementOf",
    "qualifiedBy",
    "hasSupportGraphElement",
    "hasChallengeGraphElement",
    "supportedByData",
    "supportedByMethod",
    "attributionOfAgent",
)

# accepted on input, never emitted
MP_ALIASES = {"attributionForAgent": "attributionOfAgent"}

PREFIXES = {
    "dcterms": "http://purl.org/dc/terms/",
    "mpx": "urn:x-micropub:ns#",
    "np": "http://www.nanopub.org/nschema#",
    "oa": "http://www.w3.org/ns/oa#",
    "prov": "http://www.w3.org/ns/prov#",
    "rdf": "http://www.w3.org/1999/02/22-rdf-syntax-ns#",
    "rdfs": "http://www.w3.org/2000/01/rdf-schema#",
    "xsd": "http://www.w3.org/2001/XMLSchema#",
}

AUX_CLASSES = (
    "np:Nanopublication",
    "oa:TextQuoteSelector",
    "oa:TextPositionSelector",
)

AUX_PREDICATES = (
    "rdf:type",
    "rdf:value",
    "rdfs:label",
    "dcterms:date",
    "dcterms:format",
    "dcterms:identifier",
    "prov:qualifiedAttribution",
    "prov:hadRole",
    "oa:hasTarget",
    "oa:hasSource",
    "oa:hasSelector",
    "oa:exact",
    "oa:prefix",
    "oa:suffix",
    "oa:start",
    "oa:end",
    "np:hasAssertion",
    "np:hasProvenance",
    "np:hasPublicationInfo",
    "mpx:hasSupport",
    "mpx:sourceMicropublication",
    "mpx:droppedElement",
    "mpx:resolvedDocument",
)


def expand(curie: str) -> str:
    prefix, local = curie.split(":", 1)
    return PREFIXES[prefix] + local


@dataclass(frozen=True)
class VocabularyMap:
    namespace: str = DEFAULT_NAMESPACE
    instance_base: str = INSTANCE_BASE

    def __post_init__(self) -> None:
        if not self.namespace.endswith(("#", "/")):
            object.__setattr__(self, "namespace", self.namespace + "#")

    def term(self, name: str) -> str:
        """Full IRI of an ``mp:`` class or predicate."""
        name = MP_ALIASES.get(name, name)
        if name not in MP_CLASSES and name not in MP_PREDICATES:
            raise UnknownTerm(f"mp:{name} is not in the vocabulary")
        return self.namespace + name

    def aux(self, curie: str) -> str:
        if curie not in AUX_CLASSES and curie not in AUX_PREDICATES:
            raise UnknownTerm(f"{curie} is not in the vocabulary")
        return expand(curie)

    @property
    def prefixes(self) -> dict[str, str]:
        return {"mp": self.namespace, **PREFIXES}

    def allowed_predicates(self) -> frozenset[str]:
        return frozenset(self.namespace + p for p in MP_PREDICATES) | {expand(c) for c in AUX_PREDICATES}

    def allowed_classes(self) -> frozenset[str]:
        return frozenset(self.namespace + c for c in MP_CLASSES) | {expand(c) for c in AUX_CLASSES}

    def canonical_predicate(self, iri: str) -> str:
        """Map an input predicate IRI onto its emitted form (resolves aliases)."""
        if iri.startswith(self.namespace):
            local = iri[len(self.namespace) :]
            if local in MP_ALIASES:
                return self.namespace + MP_ALIASES[local]
        return iri
