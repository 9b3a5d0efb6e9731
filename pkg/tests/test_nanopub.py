import pytest
from rdflib import Dataset, URIRef

from micropub import fixtures as fx
from micropub.errors import InvalidInput, MissingAssertion, MissingGraph, NoClaim
from micropub.model import Predicate, new_micropublication, validate
from micropub.serialization import dropped_elements, export_nanopub, import_nanopub, read_nanopub

AGENTS = list(fx.AGENTS.values())
NP = "urn:mp:MP1/np"


def graphs(text):
    ds = Dataset()
    ds.parse(data=text, format="trig")
    return {str(g.identifier): g for g in ds.graphs() if len(g)}


def test_mp1_export_layout():
    g = graphs(export_nanopub(fx.mp1(), AGENTS))
    assert set(g) == {f"{NP}/{part}" for part in ("Head", "Assertion", "Provenance", "PubInfo")}
    assertion = {str(s) for s in g[f"{NP}/Assertion"].subjects()}
    assert {"urn:mp:C1", "urn:mp:Q1", "urn:mp:Q2"} <= assertion
    assert "urn:mp:Ref5" not in assertion
    prov = g[f"{NP}/Provenance"]
    assert (URIRef("urn:mp:C1"), URIRef("http://www.w3.org/ns/prov#qualifiedAttribution"), URIRef("urn:mp:A_C1")) in prov
    pubinfo = g[f"{NP}/PubInfo"]
    dropped = {str(o) for o in pubinfo.objects(URIRef(NP), URIRef("urn:x-micropub:ns#droppedElement"))}
    assert dropped == {"urn:mp:Ref5"}


def test_mp3_drop_manifest():
    assert set(dropped_elements(fx.mp3())) == {"D1", "M1", "M2", "S1", "S2", "S3", "Ref5", "Ref9", "Ref10"}


def test_round_trip_mp1_to_minimal_form():
    text = export_nanopub(fx.mp1(), AGENTS)
    mp, agents = read_nanopub(text)
    report = validate(mp)
    assert report.valid and report.minimal_form
    original = fx.mp1()
    assert mp.id == original.id
    assert mp.attribution == original.attribution
    assert mp.claim == original.claim
    assert {e.pair for e in mp.edges} == {("A_C1", "C1"), ("Q1", "C1"), ("Q2", "C1")}
    assert {a.id for a in agents} == {"pspilman", "mp-curator"}


def test_export_is_stable_after_one_round():
    e1 = export_nanopub(fx.mp1(), AGENTS)
    mp, agents = read_nanopub(e1)
    e2 = export_nanopub(mp, agents)
    mp3, agents3 = read_nanopub(e2)
    assert export_nanopub(mp3, agents3) == e2
    assert e1 == export_nanopub(fx.mp1(), AGENTS)


def test_figure1_style():
    text = export_nanopub(fx.mp1(), AGENTS, style="figure1")
    g = graphs(text)
    support = {str(s) for s in g[f"{NP}/Support"].subjects()}
    assert support == {"urn:mp:C1", "urn:mp:Q1", "urn:mp:Q2"}
    qualified = URIRef("http://purl.org/mp#qualifiedBy")
    assert len(list(g[f"{NP}/Support"].triples((None, qualified, None)))) == 2
    assert not list(g[f"{NP}/Assertion"].triples((None, qualified, None)))
    mp = import_nanopub(text)
    assert {e.from_id for e in mp.edges if e.predicate is Predicate.QUALIFIED_BY} == {"Q1", "Q2"}


def test_unknown_style():
    with pytest.raises(InvalidInput):
        export_nanopub(fx.mp1(), AGENTS, style="compact")


def test_no_claim():
    with pytest.raises(NoClaim):
        export_nanopub(new_micropublication("M", fx.mp1().attribution))


def test_missing_provenance():
    text = export_nanopub(fx.mp1(), AGENTS)
    start = text.index("<urn:mp:MP1/np/Provenance> {")
    end = text.index("}", start) + 1
    with pytest.raises(MissingGraph):
        read_nanopub(text[:start] + text[end:])


def test_missing_assertion():
    text = export_nanopub(fx.mp1(), AGENTS)
    start = text.index("<urn:mp:MP1/np/Assertion> {")
    end = text.index("\n}\n", start) + 3
    with pytest.raises((MissingAssertion, MissingGraph)):
        read_nanopub(text[:start] + text[end:])


def test_assertion_without_statement():
    text = """@prefix np: <http://www.nanopub.org/nschema#> .
<urn:x:np/Head> { <urn:x:np> a np:Nanopublication ; np:hasAssertion <urn:x:np/A> ;
    np:hasProvenance <urn:x:np/P> ; np:hasPublicationInfo <urn:x:np/I> . }
<urn:x:np/A> { <urn:x:a> <urn:x:p> <urn:x:b> . }
<urn:x:np/P> { <urn:x:a> <urn:x:p> <urn:x:b> . }
<urn:x:np/I> { <urn:x:a> <urn:x:p> <urn:x:b> . }
"""
    with pytest.raises(MissingAssertion):
        read_nanopub(text)


def test_unparseable():
    with pytest.raises(InvalidInput):
        read_nanopub("this is { not trig")


HAND_WRITTEN = """@prefix np: <http://www.nanopub.org/nschema#> .
@prefix mp: <http://purl.org/mp#> .
@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
@prefix prov: <http://www.w3.org/ns/prov#> .
@prefix ex: <http://example.org/> .

ex:np1Head {
    ex:np1 a np:Nanopublication ;
        np:hasAssertion ex:np1Assertion ;
        np:hasProvenance ex:np1Provenance ;
        np:hasPublicationInfo ex:np1PubInfo .
}
ex:np1Assertion {
    ex:claim1 a mp:Statement ;
        rdf:value "mTOR inhibition extends lifespan in mice" .
}
ex:np1Provenance {
    ex:claim1 prov:wasAttributedTo ex:someone .
}
ex:np1PubInfo {
    ex:np1 prov:wasAttributedTo ex:someone .
}
"""


def test_foreign_nanopub_without_mp_provenance_terms():
    mp, _ = read_nanopub(HAND_WRITTEN)
    report = validate(mp)
    assert report.valid and report.minimal_form
    assert mp.claim.text == "mTOR inhibition extends lifespan in mice"
    assert mp.claim.attribution is not None
    assert mp.claim.attribution.agent_id.endswith("someone")
