"""Turtle emission of a merged network against the mp vocabulary.

Emission rules, one block of triples each:

* agents: type, ``rdfs:label``;
* attributions: type, ``mp:attributionOfAgent``, role, optional date;
* representations: kind type (plus ``mp:Claim`` when argued), value,
  media, anchoring target and selectors, ``prov:qualifiedAttribution``;
* micropublications: type, ``mp:arguedBy``, ``mp:asserts``,
  ``mp:quotes``, attribution, support and challenge graph members, and
  ``mp:elementOf`` back from every element;
* relation edges: ``mp:supports``, ``mp:directlyChallenges`` and
  ``mp:qualifiedBy`` (written statement to qualifier);
* resolutions: ``mpx:resolvedDocument`` plus the derived supports;
* inferred: ``mp:challenges``, ``mp:supportedByData``, ``mp:supportedByMethod``.
"""

from __future__ import annotations

from ..model import Attribution, Kind, Micropublication, Predicate
from ..network import Network, challenge_graph_of, merge, support_graph_of
from ._rdf import Triple, TripleBuilder, blocks, prefix_lines
from .vocab import VocabularyMap


def turtle_triples(net: Network, vocab: VocabularyMap | None = None) -> set[Triple]:
    b = TripleBuilder(vocab or VocabularyMap())
    iri = b.name.iri
    claims = {mp.claim_id for mp in net.micropublications.values() if mp.claim_id}

    for a in net.agents.values():
        b.agent(a)
    for el in net.representations.values():
        if isinstance(el, Attribution):
            b.attribution(el)
        else:
            b.representation(el, claim=el.id in claims)

    for mp in net.micropublications.values():
        s = iri(mp.id)
        b.typed(s, "Micropublication")
        if mp.claim_id:
            b.add(s, b.mp("arguedBy"), iri(mp.claim_id))
        for rid in mp.asserted:
            b.add(s, b.mp("asserts"), iri(rid))
        for rid in mp.quoted:
            b.add(s, b.mp("quotes"), iri(rid))
        b.add(s, b.aux("prov:qualifiedAttribution"), iri(mp.attribution.id))
        for rid in mp.element_ids:
            b.add(iri(rid), b.mp("elementOf"), s)
        for rid in support_graph_of(net, mp.id):
            b.add(s, b.mp("hasSupportGraphElement"), iri(rid))
        for rid in challenge_graph_of(net, mp.id):
            b.add(s, b.mp("hasChallengeGraphElement"), iri(rid))

    for e in net.edges:
        if e.predicate is Predicate.QUALIFIED_BY:
            b.add(iri(e.to_id), b.mp("qualifiedBy"), iri(e.from_id))
        else:
            b.add(iri(e.from_id), b.mp(e.predicate.value), iri(e.to_id))

    for res in net.resolution.values():
        b.add(iri(res.reference_id), b.aux("mpx:resolvedDocument"), b.name.document(res.document_id))
    for e in net.derived_edges():
        b.add(iri(e.from_id), b.mp("supports"), iri(e.to_id))

    closed = net.closed
    for x, z, _ in closed.inferred_challenges:
        b.add(iri(x), b.mp("challenges"), iri(z))
    for a, c in closed.closed_supports:
        if net.kind_of(c) is not Kind.STATEMENT:
            continue
        kind = net.kind_of(a)
        if kind is Kind.DATA:
            b.add(iri(c), b.mp("supportedByData"), iri(a))
        elif kind is not None and kind.is_method:
            b.add(iri(c), b.mp("supportedByMethod"), iri(a))
    return b.triples


def emit_turtle(net: Network | Micropublication, vocab: VocabularyMap | None = None) -> str:
    """Deterministic Turtle for ``net``; a lone micropublication is merged first.

    Raises:
        UnknownTerm: a term outside the vocabulary table would be emitted.
    """
    vocab = vocab or VocabularyMap()
    if isinstance(net, Micropublication):
        net = merge([net])
    triples = turtle_triples(net, vocab)
    lines = prefix_lines(vocab.prefixes)
    body = blocks(triples, vocab.prefixes)
    if body:
        lines.append("")
        lines.append("\n\n".join(body))
    return "\n".join(lines) + "\n"

