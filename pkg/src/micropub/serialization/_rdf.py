"""Minimal RDF term model and a deterministic Turtle block writer.

The writers build plain triple sets first and serialize them here, so
tests can count triples without parsing text and the output never
depends on set iteration order.
"""

from __future__ import annotations

import datetime
from collections.abc import Iterable
from typing import NamedTuple
from urllib.parse import quote, unquote

from ..anchoring import AnnotationTarget, SelectorKind
from ..errors import UnknownTerm
from ..model import Agent, Attribution, Kind, Representation
from .vocab import VocabularyMap

XSD_DATE = "http://www.w3.org/2001/XMLSchema#date"
XSD_INTEGER = "http://www.w3.org/2001/XMLSchema#integer"
RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"

_IRI_SAFE = "-._~:@!$&'()*+,;=/"


class IRI(NamedTuple):
    value: str


class Literal(NamedTuple):
    value: str
    datatype: str | None = None


Term = IRI | Literal
Triple = tuple[IRI, IRI, Term]


def is_absolute_iri(text: str) -> bool:
    scheme, sep, rest = text.partition(":")
    return bool(sep and rest and scheme[:1].isalpha() and all(c.isalnum() or c in "+-." for c in scheme)) and not any(
        c.isspace() or c in '<>"{}|^`\\' for c in text
    )


class Namer:
    """Maps local ids onto instance IRIs and back."""

    def __init__(self, vocab: VocabularyMap):
        self.base = vocab.instance_base

    def iri(self, local_id: str) -> IRI:
        return IRI(self.base + quote(local_id, safe=_IRI_SAFE))

    def document(self, doc_id: str) -> IRI:
        if doc_id.startswith(("http://", "https://")) and is_absolute_iri(doc_id):
            return IRI(doc_id)
        return self.iri(doc_id)

    def local(self, iri: str) -> str:
        if iri.startswith(self.base):
            return unquote(iri[len(self.base) :])
        return iri


class TripleBuilder:
    """Collects triples, checking every predicate and class against the vocabulary."""

    def __init__(self, vocab: VocabularyMap):
        self.vocab = vocab
        self.name = Namer(vocab)
        self.triples: set[Triple] = set()
        self._predicates = vocab.allowed_predicates()
        self._classes = vocab.allowed_classes()

    def mp(self, name: str) -> IRI:
        return IRI(self.vocab.term(name))

    def aux(self, curie: str) -> IRI:
        return IRI(self.vocab.aux(curie))

    def add(self, s: IRI, p: IRI, o: Term) -> None:
        if p.value not in self._predicates:
            raise UnknownTerm(f"predicate {p.value} is not in the vocabulary")
        if p.value == RDF_TYPE and o.value not in self._classes:
            raise UnknownTerm(f"class {o.value} is not in the vocabulary")
        self.triples.add((s, p, o))

    def typed(self, s: IRI, *classes: str) -> None:
        for c in classes:
            self.add(s, self.aux("rdf:type"), self.mp(c))

    # -- entity rules -------------------------------------------------------

    def agent(self, a: Agent) -> None:
        s = self.name.iri(a.id)
        self.typed(s, "Agent", a.kind.value)
        self.add(s, self.aux("rdfs:label"), Literal(a.name))

    def attribution(self, att: Attribution) -> None:
        s = self.name.iri(att.id)
        self.typed(s, "Attribution")
        self.add(s, self.mp("attributionOfAgent"), self.name.iri(att.agent_id))
        self.add(s, self.aux("prov:hadRole"), Literal(att.role))
        if att.date is not None:
            self.add(s, self.aux("dcterms:date"), Literal(att.date.isoformat(), XSD_DATE))

    def representation(self, r: Representation, *, claim: bool = False, with_attribution: bool = True) -> None:
        s = self.name.iri(r.id)
        self.typed(s, r.kind.value)
        if claim:
            self.typed(s, "Claim")
        if r.text is not None:
            if r.kind is Kind.SEMANTIC_QUALIFIER and is_absolute_iri(r.text):
                self.add(s, self.aux("rdf:value"), IRI(r.text))
            else:
                self.add(s, self.aux("rdf:value"), Literal(r.text))
        if r.media is not None:
            self.add(s, self.aux("dcterms:format"), Literal(r.media.kind))
            self.add(s, self.aux("dcterms:identifier"), Literal(r.media.locator))
        if r.source is not None:
            self.target(r.id, r.source)
        if with_attribution and r.attribution is not None:
            self.add(s, self.aux("prov:qualifiedAttribution"), self.name.iri(r.attribution.id))

    def target(self, rid: str, target: AnnotationTarget) -> None:
        s = self.name.iri(rid)
        t = self.name.iri(f"{rid}/target")
        self.add(s, self.aux("oa:hasTarget"), t)
        self.add(t, self.aux("oa:hasSource"), self.name.document(target.document_id))
        for sel in target.selectors:
            n = self.name.iri(f"{rid}/target/{sel.kind.value}")
            self.add(t, self.aux("oa:hasSelector"), n)
            if sel.kind is SelectorKind.TEXT_QUOTE:
                self.add(n, self.aux("rdf:type"), self.aux("oa:TextQuoteSelector"))
                self.add(n, self.aux("oa:exact"), Literal(sel.exact))
                self.add(n, self.aux("oa:prefix"), Literal(sel.prefix))
                self.add(n, self.aux("oa:suffix"), Literal(sel.suffix))
            else:
                self.add(n, self.aux("rdf:type"), self.aux("oa:TextPositionSelector"))
                self.add(n, self.aux("oa:start"), Literal(str(sel.start), XSD_INTEGER))
                self.add(n, self.aux("oa:end"), Literal(str(sel.end), XSD_INTEGER))


# -- text output ------------------------------------------------------------

_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r", "\t": "\\t", "\b": "\\b", "\f": "\\f"}


def _literal(lit: Literal, prefixes: dict[str, str]) -> str:
    body = '"' + "".join(_ESCAPES.get(c, c) for c in lit.value) + '"'
    if lit.datatype:
        body += "^^" + _iri(IRI(lit.datatype), prefixes)
    return body


def _iri(iri: IRI, prefixes: dict[str, str]) -> str:
    for name, ns in sorted(prefixes.items(), key=lambda kv: -len(kv[1])):
        if iri.value.startswith(ns):
            local = iri.value[len(ns) :]
            if local and local.replace("_", "a").replace("-", "a").isalnum() and local[0].isalpha():
                return f"{name}:{local}"
    return f"<{iri.value}>"


def term_text(term: Term, prefixes: dict[str, str]) -> str:
    return _iri(term, prefixes) if isinstance(term, IRI) else _literal(term, prefixes)


def prefix_lines(prefixes: dict[str, str]) -> list[str]:
    return [f"@prefix {name}: <{ns}> ." for name, ns in sorted(prefixes.items())]


def blocks(triples: Iterable[Triple], prefixes: dict[str, str], indent: str = "") -> list[str]:
    """Subject blocks, subjects and predicates sorted, rdf:type first."""
    by_subject: dict[IRI, dict[IRI, list[Term]]] = {}
    for s, p, o in triples:
        by_subject.setdefault(s, {}).setdefault(p, []).append(o)
    out: list[str] = []
    for s in sorted(by_subject, key=lambda t: t.value):
        preds = by_subject[s]
        order = sorted(preds, key=lambda p: (p.value != RDF_TYPE, p.value))
        lines = []
        for p in order:
            objs = sorted({term_text(o, prefixes) for o in preds[p]})
            verb = "a" if p.value == RDF_TYPE else term_text(p, prefixes)
            lines.append(f"{verb} {', '.join(objs)}")
        head = f"{indent}{term_text(s, prefixes)} "
        pad = f" ;\n{indent}    "
        out.append(head + pad.join(lines) + " .")
    return out


def parse_date(text: str) -> datetime.date | None:
    try:
        return datetime.date.fromisoformat(text)
    except ValueError:
        return None
