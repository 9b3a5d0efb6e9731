"""Nanopublication export and import (TriG, one graph per part).

Export keeps what a statement-based format can hold: the claim with its
text and anchoring, its qualifier tags, the claim attribution and the
publication attribution. Everything else in the micropublication is
listed by id in the publication-info graph (``mpx:droppedElement``) so
the loss is explicit.

Graph layout (``style="default"``)::

    Head        the nanopublication node and links to the other graphs
    Assertion   claim node plus qualifier tags
    Provenance  claim attribution
    PubInfo     micropublication attribution, source id, drop manifest

``style="figure1"`` moves the qualifier tags into a fifth graph,
``Support``, linked from the head with ``mpx:hasSupport``.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping

import rdflib
from rdflib.namespace import RDF, RDFS

from ..anchoring import AnnotationTarget, Selector, SelectorKind
from ..errors import InvalidInput, MissingAssertion, MissingGraph, NoClaim
from ..model import (
    Agent,
    AgentKind,
    Attribution,
    Kind,
    Micropublication,
    Predicate,
    Representation,
    add_edge,
    new_micropublication,
    quote_element,
    set_claim,
)
from ._rdf import TripleBuilder, blocks, parse_date, prefix_lines
from .vocab import MP_ALIASES, VocabularyMap, expand

STYLES = ("default", "figure1")
_GRAPHS = ("Head", "Assertion", "Provenance", "PubInfo")


def qualifiers_of(mp: Micropublication) -> list[str]:
    return sorted({e.from_id for e in mp.edges if e.predicate is Predicate.QUALIFIED_BY and e.to_id == mp.claim_id})


def dropped_elements(mp: Micropublication) -> list[str]:
    """Element ids a nanopublication export cannot carry."""
    kept = {mp.claim_id, *qualifiers_of(mp)}
    for rid in list(kept):
        att = getattr(mp.lookup(rid), "attribution", None)
        if att is not None:
            kept.add(att.id)
    return sorted(mp.element_ids - kept)


def _agent_table(agents: Mapping[str, Agent] | Iterable[Agent] | None) -> dict[str, Agent]:
    if agents is None:
        return {}
    if isinstance(agents, Mapping):
        return dict(agents)
    return {a.id: a for a in agents}


def export_nanopub(
    mp: Micropublication,
    agents: Mapping[str, Agent] | Iterable[Agent] | None = None,
    vocab: VocabularyMap | None = None,
    style: str = "default",
) -> str:
    """TriG text for ``mp`` as a nanopublication.

    Raises:
        NoClaim: ``mp`` argues no claim.
        InvalidInput: the claim content is not carried by ``mp``, or
            ``style`` is unknown.
    """
    if style not in STYLES:
        raise InvalidInput(f"unknown nanopub style {style!r}; expected one of {', '.join(STYLES)}")
    if mp.claim_id is None:
        raise NoClaim(f"{mp.id} argues no claim")
    claim = mp.lookup(mp.claim_id)
    if not isinstance(claim, Representation):
        raise InvalidInput(f"{mp.id} does not carry the content of claim {mp.claim_id}")
    vocab = vocab or VocabularyMap()
    agent_table = _agent_table(agents)

    parts = {name: TripleBuilder(vocab) for name in (*_GRAPHS, "Support")}
    name = parts["Head"].name
    np_node = name.iri(f"{mp.id}/np")
    graph = {g: name.iri(f"{mp.id}/np/{g}") for g in parts}

    head = parts["Head"]
    head.add(np_node, head.aux("rdf:type"), head.aux("np:Nanopublication"))
    head.add(np_node, head.aux("np:hasAssertion"), graph["Assertion"])
    head.add(np_node, head.aux("np:hasProvenance"), graph["Provenance"])
    head.add(np_node, head.aux("np:hasPublicationInfo"), graph["PubInfo"])
    if style == "figure1":
        head.add(np_node, head.aux("mpx:hasSupport"), graph["Support"])

    assertion = parts["Assertion"]
    assertion.representation(claim, claim=True, with_attribution=False)
    tags = parts["Support"] if style == "figure1" else assertion
    prov = parts["Provenance"]

    def attributed(builder: TripleBuilder, subject, att: Attribution) -> None:
        builder.add(subject, builder.aux("prov:qualifiedAttribution"), name.iri(att.id))
        builder.attribution(att)
        if att.agent_id in agent_table:
            builder.agent(agent_table[att.agent_id])

    if claim.attribution is not None:
        attributed(prov, name.iri(claim.id), claim.attribution)
    for qid in qualifiers_of(mp):
        tags.add(name.iri(claim.id), tags.mp("qualifiedBy"), name.iri(qid))
        q = mp.lookup(qid)
        if isinstance(q, Representation):
            tags.representation(q, with_attribution=False)
            if q.attribution is not None:
                attributed(prov, name.iri(qid), q.attribution)

    info = parts["PubInfo"]
    attributed(info, np_node, mp.attribution)
    info.add(np_node, info.aux("mpx:sourceMicropublication"), name.iri(mp.id))
    for rid in dropped_elements(mp):
        info.add(np_node, info.aux("mpx:droppedElement"), name.iri(rid))

    order = [*_GRAPHS, "Support"] if style == "figure1" else list(_GRAPHS)
    prefixes = vocab.prefixes
    chunks = ["\n".join(prefix_lines(prefixes))]
    for g in order:
        body = "\n\n".join(blocks(parts[g].triples, prefixes, indent="    "))
        chunks.append(f"<{graph[g].value}> {{\n{body}\n}}")
    return "\n\n".join(chunks) + "\n"


# -- import -----------------------------------------------------------------


def _np(term: str) -> rdflib.URIRef:
    return rdflib.URIRef(expand(term))


class _Reader:
    def __init__(self, ds: rdflib.Dataset, vocab: VocabularyMap):
        self.ds = ds
        self.vocab = vocab
        self.mp = rdflib.Namespace(vocab.namespace)
        self.name = TripleBuilder(vocab).name

    def graph(self, iri) -> rdflib.Graph | None:
        for g in self.ds.graphs():
            if g.identifier == iri and len(g):
                return g
        return None

    def local(self, node) -> str:
        return self.name.local(str(node))

    def attribution_agent(self, g: rdflib.Graph, node):
        for name in ("attributionOfAgent", *[k for k, v in MP_ALIASES.items() if v == "attributionOfAgent"]):
            agent = g.value(node, self.mp[name])
            if agent is not None:
                return agent
        return None

    def attribution(self, graphs: list[rdflib.Graph], subject) -> Attribution | None:
        prov_q = _np("prov:qualifiedAttribution")
        for g in graphs:
            node = g.value(subject, prov_q)
            if node is None:
                continue
            agent = self.attribution_agent(g, node)
            if agent is None:
                continue
            role = g.value(node, _np("prov:hadRole"))
            date = g.value(node, _np("dcterms:date"))
            return Attribution(
                self.local(node),
                self.local(agent),
                str(role) if role is not None else "author",
                parse_date(str(date)) if date is not None else None,
            )
        return None

    def simple_attribution(self, graphs: list[rdflib.Graph], subjects, att_id: str) -> Attribution | None:
        # plain prov:wasAttributedTo, as found in hand-written nanopubs
        was = rdflib.URIRef("http://www.w3.org/ns/prov#wasAttributedTo")
        for g in graphs:
            for s in subjects:
                agent = g.value(s, was)
                if agent is not None:
                    return Attribution(att_id, self.local(agent))
        return None

    def agents(self) -> list[Agent]:
        out = {}
        for g in self.ds.graphs():
            for node in g.subjects(RDF.type, self.mp.Agent):
                kind = AgentKind.ORGANIZATION if (node, RDF.type, self.mp.Organization) in g else AgentKind.PERSON
                label = g.value(node, RDFS.label)
                out[self.local(node)] = Agent(self.local(node), str(label or self.local(node)), kind)
        return [out[k] for k in sorted(out)]

    def target(self, g: rdflib.Graph, node) -> AnnotationTarget | None:
        t = g.value(node, _np("oa:hasTarget"))
        if t is None:
            return None
        source = g.value(t, _np("oa:hasSource"))
        sels = []
        for sel in sorted(g.objects(t, _np("oa:hasSelector")), key=str):
            if (sel, RDF.type, _np("oa:TextQuoteSelector")) in g:
                sels.append(
                    Selector.quote(
                        str(g.value(sel, _np("oa:exact"))),
                        str(g.value(sel, _np("oa:prefix")) or ""),
                        str(g.value(sel, _np("oa:suffix")) or ""),
                    )
                )
            else:
                sels.append(Selector.position(int(g.value(sel, _np("oa:start"))), int(g.value(sel, _np("oa:end")))))
        sels.sort(key=lambda s: [SelectorKind.TEXT_POSITION, SelectorKind.TEXT_QUOTE].index(s.kind))
        return AnnotationTarget(self.local(source), tuple(sels))

    def text(self, g: rdflib.Graph, node) -> str | None:
        value = g.value(node, RDF.value)
        if value is None:
            value = g.value(node, RDFS.label)
        return None if value is None else str(value)

    def kind(self, g: rdflib.Graph, node, default: Kind) -> Kind:
        for k in Kind:
            if k is not Kind.ATTRIBUTION and (node, RDF.type, self.mp[k.value]) in g:
                return k
        return default


def read_nanopub(text: str, vocab: VocabularyMap | None = None) -> tuple[Micropublication, list[Agent]]:
    """Like :func:`import_nanopub`, also returning the agents described."""
    vocab = vocab or VocabularyMap()
    ds = rdflib.Dataset()
    try:
        ds.parse(data=text, format="trig")
    except Exception as exc:  # rdflib raises several unrelated types
        raise InvalidInput(f"not a TriG document: {exc}") from None
    r = _Reader(ds, vocab)

    np_node = head = None
    for g in ds.graphs():
        for s in g.subjects(RDF.type, _np("np:Nanopublication")):
            np_node, head = s, g
            break
        if head is not None:
            break
    if head is None:
        raise MissingGraph("no Head graph declaring an np:Nanopublication")

    def linked(pred: str, label: str) -> rdflib.Graph:
        iri = head.value(np_node, _np(pred))
        g = None if iri is None else r.graph(iri)
        if g is None:
            raise MissingGraph(f"missing {label} graph")
        return g

    assertion = linked("np:hasAssertion", "Assertion")
    provenance = linked("np:hasProvenance", "Provenance")
    pubinfo = linked("np:hasPublicationInfo", "PublicationInfo")
    support_iri = head.value(np_node, _np("mpx:hasSupport"))
    support = r.graph(support_iri) if support_iri is not None else None
    tag_graphs = [g for g in (assertion, support) if g is not None]

    candidates = sorted(set(assertion.subjects(RDF.type, r.mp.Claim)), key=str)
    if not candidates:
        candidates = sorted(set(assertion.subjects(RDF.type, r.mp.Statement)), key=str)
    if not candidates:
        candidates = sorted({s for s in assertion.subjects() if r.text(assertion, s)}, key=str)
    if not candidates:
        raise MissingAssertion("the Assertion graph holds no statement")
    claim_node = candidates[0]
    claim_text = r.text(assertion, claim_node)
    if not claim_text:
        raise MissingAssertion(f"statement {claim_node} has no text")
    claim_id = r.local(claim_node)

    source_mp = pubinfo.value(np_node, _np("mpx:sourceMicropublication"))
    np_local = r.local(np_node)
    if source_mp is not None:
        mp_id = r.local(source_mp)
    elif np_local.endswith("/np"):
        mp_id = np_local[: -len("/np")]
    else:
        mp_id = f"MP-{np_local}"

    claim_att = r.attribution([provenance], claim_node) or r.simple_attribution(
        [provenance], [claim_node, head.value(np_node, _np("np:hasAssertion"))], f"A_{claim_id}"
    )
    mp_att = (
        r.attribution([pubinfo], np_node)
        or r.simple_attribution([pubinfo], [np_node], f"A_{mp_id}")
        or Attribution(f"A_{mp_id}", "unknown", "curator")
    )

    origin = str(np_node)
    claim = Representation(claim_id, Kind.STATEMENT, claim_text, source=r.target(assertion, claim_node), attribution=claim_att)
    mp = new_micropublication(mp_id, mp_att)
    mp = quote_element(mp, claim_id, origin, claim)
    mp = set_claim(mp, claim_id)

    qualifiers = sorted({q for g in tag_graphs for q in g.objects(claim_node, r.mp.qualifiedBy)}, key=str)
    for q in qualifiers:
        g = next(g for g in tag_graphs if (claim_node, r.mp.qualifiedBy, q) in g)
        qid = r.local(q)
        rep = Representation(
            qid,
            r.kind(g, q, Kind.SEMANTIC_QUALIFIER),
            r.text(g, q) or str(q),
            source=r.target(g, q),
            attribution=r.attribution([provenance], q),
        )
        mp = quote_element(mp, qid, origin, rep)
        mp = add_edge(mp, qid, claim_id, Predicate.QUALIFIED_BY)
    if claim_att is not None:
        mp = add_edge(mp, claim_att.id, claim_id, Predicate.SUPPORTS)
    return mp, r.agents()


def import_nanopub(text: str, vocab: VocabularyMap | None = None) -> Micropublication:
    """Recruit a nanopublication assertion as the claim of a minimal micropublication.

    The claim and any qualifier tags are quoted with the nanopublication
    IRI as origin; provenance becomes the claim attribution, which
    supports the claim.

    Raises:
        MissingGraph: the head, assertion, provenance or publication-info
            graph is absent.
        MissingAssertion: the assertion graph holds no statement.
    """
    return read_nanopub(text, vocab)[0]
