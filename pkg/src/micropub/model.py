"""Domain types for representations and micropublications.

A micropublication asserts or quotes a set of representations, argues
exactly one claim (a Statement) and stamps every relation edge it
contains with its own id. All values are frozen; the construction
functions below return updated copies::

    mp = new_micropublication("MP1", Attribution("A_MP1", "mp-curator", "curator"))
    mp = assert_element(mp, Representation("C1", Kind.STATEMENT, text="..."))
    mp = set_claim(mp, "C1")
    report = validate(mp)
"""

from __future__ import annotations

import datetime
import enum
import warnings
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field, replace
from typing import Union

from . import _graph
from .anchoring import AnnotationTarget
from .errors import (
    AssertQuoteConflict,
    DuplicateElement,
    DuplicateId,
    EndpointNotElement,
    InvalidQualifier,
    InvalidRepresentation,
    NotAnElement,
    NotAStatement,
    SelfEdge,
)


class MicropubWarning(UserWarning):
    pass


class Kind(enum.Enum):
    SENTENCE = "Sentence"
    STATEMENT = "Statement"
    DATA = "Data"
    METHOD = "Method"
    PROCEDURE = "Procedure"
    MATERIAL = "Material"
    REFERENCE = "Reference"
    SEMANTIC_QUALIFIER = "SemanticQualifier"
    ARTICLE_TEXT = "ArticleText"
    ATTRIBUTION = "Attribution"

    @property
    def is_method(self) -> bool:
        return self in (Kind.METHOD, Kind.PROCEDURE, Kind.MATERIAL)

    @property
    def is_sentence(self) -> bool:
        return self in (Kind.SENTENCE, Kind.STATEMENT)

    @property
    def can_qualify(self) -> bool:
        return self in (Kind.REFERENCE, Kind.SEMANTIC_QUALIFIER, Kind.SENTENCE)


class Predicate(enum.Enum):
    SUPPORTS = "supports"
    DIRECTLY_CHALLENGES = "directlyChallenges"
    QUALIFIED_BY = "qualifiedBy"


class AgentKind(enum.Enum):
    PERSON = "Person"
    ORGANIZATION = "Organization"


@dataclass(frozen=True)
class Agent:
    id: str
    name: str
    kind: AgentKind = AgentKind.PERSON

    def __post_init__(self) -> None:
        if not self.id:
            raise InvalidRepresentation("agent id must be non-empty")


@dataclass(frozen=True)
class Attribution:
    """Attribution of a representation (or of a whole micropublication) to an agent.

    Attribution nodes take part in the supports relation like any other
    representation; ``supports(A_C1, C1)`` is the minimal support a
    claim can have.
    """

    id: str
    agent_id: str
    role: str = "author"
    date: datetime.date | None = None

    def __post_init__(self) -> None:
        if not self.id or not self.agent_id:
            raise InvalidRepresentation("attribution needs an id and an agent id")

    @property
    def kind(self) -> Kind:
        return Kind.ATTRIBUTION


@dataclass(frozen=True)
class Media:
    """Opaque content descriptor for Data and Method representations."""

    kind: str
    locator: str


_RELATIVE_REF_STARTS = ("/", "./", "../", "#", "?")


@dataclass(frozen=True)
class Representation:
    id: str
    kind: Kind
    text: str | None = None
    media: Media | None = None
    source: AnnotationTarget | None = None
    attribution: Attribution | None = None

    def __post_init__(self) -> None:
        if not self.id:
            raise InvalidRepresentation("representation id must be non-empty")
        if self.kind is Kind.ATTRIBUTION:
            raise InvalidRepresentation("use the Attribution type for attribution nodes")
        if self.kind is Kind.STATEMENT and not (self.text and self.text.strip()):
            raise InvalidRepresentation(f"statement {self.id} needs non-empty text")
        if self.kind is Kind.SEMANTIC_QUALIFIER and self.text:
            t = self.text
            if not any(c.isspace() for c in t) and t.startswith(_RELATIVE_REF_STARTS):
                raise InvalidRepresentation(f"qualifier {self.id}: URI {t!r} is not absolute")


Element = Union[Representation, Attribution]


@dataclass(frozen=True)
class RelationEdge:
    from_id: str
    to_id: str
    predicate: Predicate
    asserted_by: str

    def __post_init__(self) -> None:
        if self.from_id == self.to_id:
            raise SelfEdge(f"{self.predicate.value}({self.from_id}, {self.to_id}) relates a node to itself")

    @property
    def pair(self) -> tuple[str, str]:
        return (self.from_id, self.to_id)

    def sort_key(self) -> tuple[str, str, str, str]:
        return (self.asserted_by, self.predicate.value, self.from_id, self.to_id)


@dataclass(frozen=True)
class Quote:
    """A quoted element: its id, the micropublication it comes from (if
    known) and, optionally, a copy of its content."""

    id: str
    origin: str | None = None
    representation: Representation | None = None


@dataclass(frozen=True)
class Micropublication:
    id: str
    attribution: Attribution
    claim_id: str | None = None
    asserted: Mapping[str, Representation] = field(default_factory=dict)
    quoted: Mapping[str, Quote] = field(default_factory=dict)
    edges: frozenset[RelationEdge] = frozenset()

    @property
    def asserted_ids(self) -> frozenset[str]:
        return frozenset(self.asserted)

    @property
    def quoted_ids(self) -> frozenset[str]:
        return frozenset(self.quoted)

    @property
    def quoted_refs(self) -> frozenset[tuple[str, str | None]]:
        return frozenset((q.id, q.origin) for q in self.quoted.values())

    def contents(self) -> Iterator[Representation]:
        """Representations whose content this micropublication carries."""
        yield from self.asserted.values()
        for q in self.quoted.values():
            if q.representation is not None:
                yield q.representation

    @property
    def element_attributions(self) -> dict[str, Attribution]:
        """Attributions of elements; they count as elements themselves."""
        out: dict[str, Attribution] = {}
        for r in self.contents():
            if r.attribution is not None:
                out.setdefault(r.attribution.id, r.attribution)
        return out

    @property
    def element_ids(self) -> frozenset[str]:
        return frozenset(self.asserted) | frozenset(self.quoted) | frozenset(self.element_attributions)

    def lookup(self, rid: str) -> Element | None:
        if rid in self.asserted:
            return self.asserted[rid]
        q = self.quoted.get(rid)
        if q is not None:
            return q.representation
        return self.element_attributions.get(rid)

    def kind_of(self, rid: str) -> Kind | None:
        el = self.lookup(rid)
        return None if el is None else el.kind

    @property
    def claim(self) -> Element | None:
        return None if self.claim_id is None else self.lookup(self.claim_id)

    def edges_of(self, predicate: Predicate) -> list[RelationEdge]:
        return sorted((e for e in self.edges if e.predicate is predicate), key=RelationEdge.sort_key)


class Corpus:
    """Working set of micropublications and agents (single writer).

    Its only job is id bookkeeping while micropublications are being
    built; the merged, queryable view is :class:`micropub.network.Network`.
    """

    def __init__(self, micropublications: Iterable[Micropublication] = (), agents: Iterable[Agent] = ()):
        self._mps: dict[str, Micropublication] = {}
        self.agents: dict[str, Agent] = {}
        for a in agents:
            self.add_agent(a)
        for mp in micropublications:
            self.add(mp)

    def add_agent(self, agent: Agent) -> Agent:
        known = self.agents.get(agent.id)
        if known is not None and known != agent:
            raise DuplicateId(f"agent id {agent.id} already used for {known.name!r}")
        self.agents[agent.id] = agent
        return agent

    def new_micropublication(self, mp_id: str, attribution: Attribution) -> Micropublication:
        return new_micropublication(mp_id, attribution, corpus=self)

    def add(self, mp: Micropublication) -> Micropublication:
        if mp.id in self._mps:
            raise DuplicateId(f"micropublication id {mp.id} already in use")
        self._mps[mp.id] = mp
        return mp

    def put(self, mp: Micropublication) -> Micropublication:
        """Store ``mp``, replacing an earlier version with the same id."""
        self._mps[mp.id] = mp
        return mp

    def __contains__(self, mp_id: object) -> bool:
        return mp_id in self._mps

    def __getitem__(self, mp_id: str) -> Micropublication:
        return self._mps[mp_id]

    def __iter__(self) -> Iterator[Micropublication]:
        return iter(self._mps.values())

    def __len__(self) -> int:
        return len(self._mps)


# -- construction -----------------------------------------------------------


def new_micropublication(mp_id: str, attribution: Attribution, corpus: Corpus | None = None) -> Micropublication:
    """Create an empty micropublication shell.

    When a corpus is given the id is checked and registered there.
    """
    if not mp_id:
        raise InvalidRepresentation("micropublication id must be non-empty")
    mp = Micropublication(mp_id, attribution)
    if corpus is not None:
        corpus.add(mp)
    return mp


def assert_element(mp: Micropublication, r: Representation) -> Micropublication:
    if r.id in mp.quoted:
        raise AssertQuoteConflict(f"{mp.id} already quotes {r.id}")
    if r.id in mp.asserted:
        raise DuplicateElement(f"{mp.id} already asserts {r.id}")
    return replace(mp, asserted={**mp.asserted, r.id: r})


def quote_element(
    mp: Micropublication,
    rid: str,
    origin: str | None = None,
    representation: Representation | None = None,
) -> Micropublication:
    """Record ``rid`` as quoted from ``origin``.

    An unknown origin is allowed here and only reported when the
    micropublication is merged into a network.
    """
    if rid in mp.asserted:
        raise AssertQuoteConflict(f"{mp.id} already asserts {rid}")
    if rid in mp.quoted:
        raise DuplicateElement(f"{mp.id} already quotes {rid}")
    if representation is not None and representation.id != rid:
        raise InvalidRepresentation(f"quoted content has id {representation.id}, expected {rid}")
    return replace(mp, quoted={**mp.quoted, rid: Quote(rid, origin, representation)})


def _check_qualifier(mp: Micropublication, from_id: str, to_id: str) -> None:
    src, dst = mp.kind_of(from_id), mp.kind_of(to_id)
    if dst is not None and dst is not Kind.STATEMENT:
        raise InvalidQualifier(f"qualifiedBy must target a Statement, {to_id} is {dst.value}")
    if src is not None and not src.can_qualify:
        raise InvalidQualifier(f"{from_id} ({src.value}) cannot qualify a statement")


def add_edge(mp: Micropublication, from_id: str, to_id: str, predicate: Predicate) -> Micropublication:
    if from_id == to_id:
        raise SelfEdge(f"{predicate.value}({from_id}, {to_id}) relates a node to itself")
    elements = mp.element_ids
    for end in (from_id, to_id):
        if end not in elements:
            raise EndpointNotElement(f"{end} is not an element of {mp.id}")
    if predicate is Predicate.QUALIFIED_BY:
        _check_qualifier(mp, from_id, to_id)
    edge = RelationEdge(from_id, to_id, predicate, mp.id)
    return replace(mp, edges=mp.edges | {edge})


def set_claim(mp: Micropublication, statement_id: str) -> Micropublication:
    if statement_id not in mp.element_ids:
        raise NotAnElement(f"{statement_id} is not an element of {mp.id}")
    kind = mp.kind_of(statement_id)
    if kind is not Kind.STATEMENT:
        what = "unknown kind" if kind is None else kind.value
        raise NotAStatement(f"claim must be a Statement; {statement_id} has {what}")
    if mp.claim_id is not None and mp.claim_id != statement_id:
        warnings.warn(
            f"{mp.id}: claim {mp.claim_id} replaced by {statement_id}",
            MicropubWarning,
            stacklevel=2,
        )
    return replace(mp, claim_id=statement_id)


# -- validation -------------------------------------------------------------


@dataclass(frozen=True)
class Finding:
    code: str
    message: str
    subjects: tuple[str, ...] = ()


@dataclass(frozen=True)
class ValidationReport:
    errors: tuple[Finding, ...]
    warnings: tuple[Finding, ...]
    minimal_form: bool

    @property
    def valid(self) -> bool:
        return not self.errors

    def codes(self) -> set[str]:
        return {f.code for f in self.errors} | {f.code for f in self.warnings}


def validate(mp: Micropublication) -> ValidationReport:
    """Check a micropublication against the model's structural rules.

    Findings never raise; they are collected into the report. Error codes:
    ``NoClaim``, ``ClaimNotElement``, ``ClaimNotStatement``,
    ``EndpointNotElement``, ``ForeignEdge``,
    ``InvalidQualifier``, ``Cycle``, ``NotReachingClaim``,
    ``AssertQuoteConflict``. Warning codes: ``MissingAttributionSupport``,
    ``OrphanElement``, ``QuotedSupportDetached``.
    """
    errors: list[Finding] = []
    warns: list[Finding] = []
    elements = mp.element_ids

    for rid in sorted(mp.asserted_ids & mp.quoted_ids):
        errors.append(Finding("AssertQuoteConflict", f"{rid} is both asserted and quoted", (rid,)))

    claim = mp.claim_id
    claim_ok = False
    if claim is None:
        errors.append(Finding("NoClaim", f"{mp.id} argues no claim", ()))
    elif claim not in elements:
        errors.append(Finding("ClaimNotElement", f"claim {claim} is not an element of {mp.id}", (claim,)))
    elif mp.kind_of(claim) is not Kind.STATEMENT:
        kind = mp.kind_of(claim)
        what = "of unknown kind" if kind is None else f"a {kind.value}"
        errors.append(Finding("ClaimNotStatement", f"claim {claim} is {what}", (claim,)))
    else:
        claim_ok = True

    for e in sorted(mp.edges, key=RelationEdge.sort_key):
        label = f"{e.predicate.value}({e.from_id}, {e.to_id})"
        if e.asserted_by != mp.id:
            errors.append(Finding("ForeignEdge", f"{label} is stamped {e.asserted_by}", e.pair))
        for end in e.pair:
            if end not in elements:
                errors.append(Finding("EndpointNotElement", f"{label}: {end} is not an element", (end,)))
        if e.predicate is Predicate.QUALIFIED_BY:
            try:
                _check_qualifier(mp, e.from_id, e.to_id)
            except InvalidQualifier as exc:
                errors.append(Finding("InvalidQualifier", str(exc), e.pair))

    supports = [e.pair for e in mp.edges if e.predicate is Predicate.SUPPORTS]
    succ = _graph.adjacency(supports)
    cycle = _graph.find_cycle(succ)
    if cycle is not None:
        errors.append(Finding("Cycle", "supports cycle " + " -> ".join(cycle), tuple(cycle[:-1])))

    if claim_ok:
        reaching = _graph.reachable_from(_graph.reverse(succ), claim) | {claim}
        for n in sorted(set(succ) - reaching):
            if n in mp.quoted:
                warns.append(
                    Finding("QuotedSupportDetached", f"quoted {n} does not reach claim {claim} locally", (n,))
                )
            else:
                errors.append(Finding("NotReachingClaim", f"{n} supports nothing that reaches claim {claim}", (n,)))

    minimal = claim_ok and mp.attribution is not None and any(
        b == claim and mp.kind_of(a) is Kind.ATTRIBUTION for a, b in supports
    )
    if claim_ok and not minimal:
        warns.append(
            Finding("MissingAttributionSupport", f"claim {claim} has no supporting attribution", (claim,))
        )

    touched = {n for e in mp.edges for n in e.pair}
    for rid in sorted((mp.asserted_ids | mp.quoted_ids) - touched - {claim}):
        warns.append(Finding("OrphanElement", f"{rid} takes part in no relation", (rid,)))

    return ValidationReport(tuple(errors), tuple(warns), minimal)
