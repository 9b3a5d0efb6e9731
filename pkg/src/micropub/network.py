"""Corpus-level claim networks.

:func:`merge` unions individually valid micropublications into a
:class:`Network`. Every edge keeps the id of the micropublication that
asserted it, so removing a member removes exactly what it contributed.
On top of the merged graph this module answers lineage, grounding and
similarity questions and produces a citation-distortion audit.
"""

from __future__ import annotations

import enum
import itertools
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import NamedTuple

from . import _graph
from .errors import (
    ConflictingRepresentation,
    DuplicateId,
    GroupTooSmall,
    HolotypeNotMember,
    InvalidMicropublication,
    NonStatementMember,
    NotAReference,
    UnknownClaim,
    UnknownMicropublication,
    UnknownStatement,
)
from .inference import ClosedRelation, challenge_graph, close, support_graph
from .model import (
    Agent,
    Attribution,
    Element,
    Finding,
    Kind,
    Micropublication,
    Predicate,
    RelationEdge,
    add_edge,
    new_micropublication,
    quote_element,
    set_claim,
    validate,
)

Pair = tuple[str, str]


class Level(enum.IntEnum):
    ATTRIBUTION_ONLY = 0
    REFERENCE_BACKED = 1
    STATEMENT_BACKED = 2
    DATA_BACKED = 3
    METHOD_BACKED = 4

    @property
    def label(self) -> str:
        return "".join(w.capitalize() for w in self.name.split("_"))

    def __str__(self) -> str:
        return f"{self.label} ({int(self)})"


@dataclass(frozen=True)
class GroundingLevel:
    level: Level
    witness: tuple[str, ...]


@dataclass(frozen=True)
class Resolution:
    """Document-level citation upgraded (optionally) to a specific statement."""

    reference_id: str
    document_id: str
    statement_id: str | None = None
    resolved_by: str | None = None

    @property
    def asserted_by(self) -> str:
        return self.resolved_by or f"resolution:{self.reference_id}"


@dataclass(frozen=True)
class Lineage:
    root: str
    nodes: frozenset[str]
    edges: frozenset[Pair]
    depth: int


@dataclass(frozen=True)
class SimilarityGroup:
    group_mp: str
    holotype_id: str
    member_ids: frozenset[str]
    attribution: Attribution


@dataclass(frozen=True)
class ClaimAudit:
    claim_id: str
    level: Level
    depth: int
    self_citation_ratio: float
    qualifier_loss: frozenset[Pair]
    flagged: bool


@dataclass(frozen=True)
class DistortionReport:
    depth_threshold: int
    entries: tuple[ClaimAudit, ...]

    @property
    def flagged(self) -> list[ClaimAudit]:
        return [e for e in self.entries if e.flagged]

    def __getitem__(self, claim_id: str) -> ClaimAudit:
        for e in self.entries:
            if e.claim_id == claim_id:
                return e
        raise KeyError(claim_id)


@dataclass(frozen=True)
class Network:
    micropublications: Mapping[str, Micropublication]
    representations: Mapping[str, Element]
    asserters: Mapping[str, tuple[str, ...]]
    agents: Mapping[str, Agent]
    edges: frozenset[RelationEdge]
    resolution: Mapping[str, Resolution] = field(default_factory=dict)
    groups: tuple[SimilarityGroup, ...] = ()
    warnings: tuple[Finding, ...] = ()

    def lookup(self, rid: str) -> Element | None:
        return self.representations.get(rid)

    def kind_of(self, rid: str) -> Kind | None:
        el = self.representations.get(rid)
        return None if el is None else el.kind

    def attribution_of(self, rid: str) -> Attribution | None:
        return getattr(self.representations.get(rid), "attribution", None)

    @property
    def group_mps(self) -> frozenset[str]:
        return frozenset(g.group_mp for g in self.groups)

    def claims(self) -> list[str]:
        return sorted({mp.claim_id for mp in self.micropublications.values() if mp.claim_id})

    def derived_edges(self) -> frozenset[RelationEdge]:
        """Supports edges implied by statement-level reference resolutions.

        A reference resolved to statement S makes S support whatever the
        reference supports.
        """
        out = set()
        for res in self.resolution.values():
            if res.statement_id is None:
                continue
            for e in self.edges:
                if e.predicate is Predicate.SUPPORTS and e.from_id == res.reference_id and e.to_id != res.statement_id:
                    out.add(RelationEdge(res.statement_id, e.to_id, Predicate.SUPPORTS, res.asserted_by))
        return frozenset(out)

    @cached_property
    def evidential_edges(self) -> frozenset[RelationEdge]:
        """Edges used for lineage and grounding: similarity-group edges are
        left out, resolution-derived supports are added."""
        groups = self.group_mps
        own = {e for e in self.edges if e.asserted_by not in groups}
        return frozenset(own) | self.derived_edges()

    @cached_property
    def closed(self) -> ClosedRelation:
        return close(self.evidential_edges)

    @cached_property
    def _support_succ(self) -> dict[str, set[str]]:
        return _graph.adjacency(e.pair for e in self.evidential_edges if e.predicate is Predicate.SUPPORTS)

    def without(self, mp_id: str) -> "Network":
        """The network re-merged without one member."""
        if mp_id not in self.micropublications:
            raise UnknownMicropublication(mp_id)
        mps = [mp for k, mp in self.micropublications.items() if k != mp_id]
        groups = [g for g in self.groups if g.group_mp != mp_id]
        remaining = {r for mp in mps for r in mp.element_ids}
        resolution = [
            r
            for r in self.resolution.values()
            if r.resolved_by != mp_id and r.reference_id in remaining and (r.statement_id in remaining or r.statement_id is None)
        ]
        return merge(mps, self.agents.values(), resolution=resolution, groups=groups)


# -- merge ------------------------------------------------------------------


def _register(table: dict[str, Element], el: Element, where: str) -> None:
    known = table.get(el.id)
    if known is None:
        table[el.id] = el
    elif known != el:
        raise ConflictingRepresentation(f"{el.id} has different content in {where}")


def merge(
    micropublications: Iterable[Micropublication],
    agents: Iterable[Agent] = (),
    *,
    resolution: Iterable[Resolution] = (),
    groups: Iterable[SimilarityGroup] = (),
) -> Network:
    """Union valid micropublications into one network.

    Raises:
        InvalidMicropublication: a member fails :func:`validate`.
        ConflictingRepresentation: one id carries two different contents.
        CycleDetected: the merged supports relation is cyclic.
    """
    mps: dict[str, Micropublication] = {}
    for mp in sorted(micropublications, key=lambda m: m.id):
        if mp.id in mps:
            raise DuplicateId(f"micropublication {mp.id} appears twice")
        report = validate(mp)
        if not report.valid:
            raise InvalidMicropublication(mp.id, report)
        mps[mp.id] = mp
    agent_table = {a.id: a for a in agents}

    reps: dict[str, Element] = {}
    asserters: dict[str, list[str]] = {}
    for mp in mps.values():
        for r in mp.asserted.values():
            _register(reps, r, mp.id)
            asserters.setdefault(r.id, []).append(mp.id)
        for att in mp.element_attributions.values():
            _register(reps, att, mp.id)
        _register(reps, mp.attribution, mp.id)

    warns: list[Finding] = []
    for mp in mps.values():
        for q in sorted(mp.quoted.values(), key=lambda q: q.id):
            if q.representation is not None:
                _register(reps, q.representation, f"{mp.id} (quoted)")
            bound = asserters.get(q.id, [])
            if not bound and q.id not in mps:
                warns.append(Finding("DanglingQuote", f"{mp.id} quotes {q.id}, which no member asserts", (mp.id, q.id)))
            elif q.origin is None:
                origin = bound[0] if bound else q.id
                warns.append(Finding("OriginInferred", f"{mp.id} quotes {q.id}; bound to {origin}", (mp.id, q.id)))
            elif bound and q.origin not in bound:
                warns.append(
                    Finding(
                        "QuoteOriginMismatch",
                        f"{mp.id} quotes {q.id} from {q.origin}, but it is asserted by {', '.join(bound)}",
                        (mp.id, q.id),
                    )
                )

    for att in sorted((r for r in reps.values() if isinstance(r, Attribution)), key=lambda a: a.id):
        if att.agent_id not in agent_table:
            warns.append(Finding("UnknownAgent", f"{att.id} names unknown agent {att.agent_id}", (att.id,)))

    edges = frozenset(e for mp in mps.values() for e in mp.edges)
    net = Network(
        micropublications=mps,
        representations=reps,
        asserters={k: tuple(v) for k, v in asserters.items()},
        agents=agent_table,
        edges=edges,
        warnings=tuple(warns),
    )
    for g in groups:
        if g.group_mp not in mps:
            raise UnknownMicropublication(f"similarity group {g.group_mp} is not a member")
    net = replace(net, groups=tuple(sorted(groups, key=lambda g: g.group_mp)))
    for res in resolution:
        net = resolve_reference(net, res.reference_id, res.document_id, res.statement_id, res.resolved_by)
    net.closed  # noqa: B018 - raises CycleDetected early
    return net


def resolve_reference(
    net: Network,
    ref_id: str,
    document_id: str,
    statement_id: str | None = None,
    resolved_by: str | None = None,
) -> Network:
    """Record what a Reference points at.

    Resolution is kept as data next to the original citation; when a
    statement is given, lineage and grounding queries see it as
    supporting everything the reference supports.
    """
    if net.kind_of(ref_id) is not Kind.REFERENCE:
        raise NotAReference(f"{ref_id} is not a Reference")
    if statement_id is not None and net.kind_of(statement_id) is not Kind.STATEMENT:
        raise UnknownStatement(f"{statement_id} is not a statement in this network")
    res = Resolution(ref_id, document_id, statement_id, resolved_by)
    table = dict(net.resolution)
    table[ref_id] = res
    updated = replace(net, resolution=dict(sorted(table.items())))
    updated.closed  # noqa: B018 - a resolution must not close a cycle
    return updated


# -- lineage and grounding --------------------------------------------------


def _ancestors(net: Network, node: str) -> set[str]:
    return net.closed.supporters_of(node)


def claim_lineage(net: Network, claim_id: str) -> Lineage:
    """Statements that transitively support ``claim_id`` and the
    statement-to-statement edges between them."""
    if net.kind_of(claim_id) is not Kind.STATEMENT:
        raise UnknownClaim(f"{claim_id} is not a statement in this network")
    nodes = {n for n in _ancestors(net, claim_id) if net.kind_of(n) is Kind.STATEMENT} | {claim_id}
    succ = net._support_succ

    edges: set[Pair] = set()
    for s in nodes:
        # follow non-statement intermediates until the next statement
        todo, seen = list(succ.get(s, ())), set()
        while todo:
            n = todo.pop()
            if n in seen:
                continue
            seen.add(n)
            if net.kind_of(n) is Kind.STATEMENT:
                if n in nodes:
                    edges.add((s, n))
            else:
                todo.extend(succ.get(n, ()))

    into: dict[str, list[str]] = {}
    for a, b in edges:
        into.setdefault(b, []).append(a)
    depth: dict[str, int] = {}

    def longest(n: str) -> int:
        # longest chain of edges ending at n; the lineage is acyclic
        if n not in depth:
            stack = [n]
            while stack:
                top = stack[-1]
                pending = [p for p in into.get(top, ()) if p not in depth]
                if pending:
                    stack.extend(pending)
                    continue
                stack.pop()
                depth[top] = max((depth[p] + 1 for p in into.get(top, ())), default=0)
        return depth[n]

    return Lineage(claim_id, frozenset(nodes), frozenset(edges), longest(claim_id))


def _crosses(net: Network, a: str, b: str) -> bool:
    return not set(net.asserters.get(a, ())) & set(net.asserters.get(b, ()))


def _node_level(net: Network, node: str, claim_id: str, ancestors: set[str]) -> Level:
    kind = net.kind_of(node)
    if kind is Kind.REFERENCE:
        return Level.REFERENCE_BACKED
    if kind is Kind.STATEMENT and net.asserters.get(node) and _crosses(net, node, claim_id):
        return Level.STATEMENT_BACKED
    if kind is Kind.DATA:
        return Level.DATA_BACKED
    if kind is not None and kind.is_method:
        for d in net._support_succ.get(node, ()):
            if net.kind_of(d) is Kind.DATA and d in ancestors:
                return Level.METHOD_BACKED
    return Level.ATTRIBUTION_ONLY


def grounding_level(net: Network, claim_id: str) -> GroundingLevel:
    """Deepest kind of evidence behind ``claim_id`` with a witness path.

    Levels: attribution only, reference, a statement from another
    publication, data, data produced by a described method.
    """
    if claim_id not in net.representations:
        raise UnknownClaim(f"{claim_id} is not in this network")
    ancestors = _ancestors(net, claim_id)
    best: tuple[int, int, list[str]] | None = None
    for n in ancestors:
        level = _node_level(net, n, claim_id, ancestors)
        path = _graph.shortest_path(net._support_succ, n, claim_id)
        key = (-int(level), len(path), path)
        if best is None or key < best:
            best = key
    if best is None:
        return GroundingLevel(Level.ATTRIBUTION_ONLY, (claim_id,))
    return GroundingLevel(Level(-best[0]), tuple(best[2]))


def closed_for(net: Network, mp_id: str) -> ClosedRelation:
    """Relation to read one member's graphs from.

    Ordinary members see the whole network; a similarity group's edges are
    left out of the network closure, so a group sees its own edges only.
    """
    if mp_id not in net.micropublications:
        raise UnknownMicropublication(f"{mp_id} is not a member of this network")
    mp = net.micropublications[mp_id]
    return close(mp.edges) if mp_id in net.group_mps else net.closed


def support_graph_of(net: Network, mp_id: str) -> frozenset[str]:
    return support_graph(net.micropublications.get(mp_id), closed_for(net, mp_id))


def challenge_graph_of(net: Network, mp_id: str) -> frozenset[str]:
    return challenge_graph(net.micropublications.get(mp_id), closed_for(net, mp_id))


# -- similarity groups ------------------------------------------------------


class SimilarityGroupResult(NamedTuple):
    group: SimilarityGroup
    micropublication: Micropublication
    network: Network


def create_similarity_group(
    net: Network,
    member_ids: Iterable[str],
    holotype_id: str,
    attribution: Attribution,
    group_id: str | None = None,
) -> SimilarityGroupResult:
    """Assert that statements share a meaning, with one representative.

    The group is itself a micropublication: it quotes every member,
    argues the holotype, and has each other member support it.
    """
    members = frozenset(member_ids)
    if len(members) < 2:
        raise GroupTooSmall("a similarity group needs at least two members")
    if holotype_id not in members:
        raise HolotypeNotMember(f"holotype {holotype_id} is not among the members")
    for m in sorted(members):
        kind = net.kind_of(m)
        if kind is None:
            raise UnknownStatement(f"{m} is not in this network")
        if kind is not Kind.STATEMENT:
            raise NonStatementMember(f"{m} is a {kind.value}, not a Statement")
    group_id = group_id or f"SG-{holotype_id}"
    if group_id in net.micropublications:
        raise DuplicateId(f"micropublication id {group_id} already in use")

    mp = new_micropublication(group_id, attribution)
    for m in sorted(members):
        origin = (net.asserters.get(m) or (None,))[0]
        mp = quote_element(mp, m, origin, net.representations[m])
    mp = set_claim(mp, holotype_id)
    for m in sorted(members - {holotype_id}):
        mp = add_edge(mp, m, holotype_id, Predicate.SUPPORTS)

    group = SimilarityGroup(group_id, holotype_id, members, attribution)
    updated = merge(
        [*net.micropublications.values(), mp],
        net.agents.values(),
        resolution=net.resolution.values(),
        groups=[*net.groups, group],
    )
    return SimilarityGroupResult(group, mp, updated)


def similogs_of(net: Network, statement_id: str) -> frozenset[str]:
    if statement_id not in net.representations:
        raise UnknownStatement(f"{statement_id} is not in this network")
    out: set[str] = set()
    for g in net.groups:
        if statement_id in g.member_ids:
            out |= g.member_ids
    return frozenset(out)


# -- audit ------------------------------------------------------------------


def self_citation_ratio(net: Network, lineage: Lineage) -> float:
    """Share of cross-publication lineage edges whose two ends are
    attributed to the same agent. Edges with an unattributed end are
    skipped entirely."""
    same = total = 0
    for a, b in lineage.edges:
        if not _crosses(net, a, b):
            continue
        att_a, att_b = net.attribution_of(a), net.attribution_of(b)
        if att_a is None or att_b is None:
            continue
        total += 1
        same += att_a.agent_id == att_b.agent_id
    return same / total if total else 0.0


def _qualifier_count(net: Network, sid: str) -> int:
    return len({e.from_id for e in net.edges if e.predicate is Predicate.QUALIFIED_BY and e.to_id == sid})


def _upstream_first(net: Network, a: str, b: str) -> bool | None:
    """True when ``a`` precedes ``b``; None when nothing decides it."""
    closure = net.closed.closed_supports
    if (a, b) in closure:
        return True
    if (b, a) in closure:
        return False
    da = getattr(net.attribution_of(a), "date", None)
    db = getattr(net.attribution_of(b), "date", None)
    if da is not None and db is not None and da != db:
        return da < db
    return None


def qualifier_losses(net: Network) -> frozenset[Pair]:
    """Similog pairs ``(upstream, downstream)`` where the downstream
    statement carries fewer qualifiers.

    Order comes from the supports relation, then from attribution dates;
    when neither decides, the more qualified statement is taken as the
    upstream one.
    """
    out: set[Pair] = set()
    for g in net.groups:
        for a, b in itertools.combinations(sorted(g.member_ids), 2):
            qa, qb = _qualifier_count(net, a), _qualifier_count(net, b)
            if qa == qb:
                continue
            first = _upstream_first(net, a, b)
            if first is None:
                first = qa > qb
            up, down = (a, b) if first else (b, a)
            if _qualifier_count(net, down) < _qualifier_count(net, up):
                out.add((up, down))
    return frozenset(out)


def distortion_report(net: Network, depth_threshold: int = 2) -> DistortionReport:
    """Audit every claim for weakly grounded lineages and dropped hedges.

    A claim is flagged when its lineage is at least ``depth_threshold``
    deep without reaching data, or when it lost a qualifier that a
    similar upstream statement carried.
    """
    losses = qualifier_losses(net)
    entries = []
    for claim in net.claims():
        if net.kind_of(claim) is not Kind.STATEMENT:
            continue
        level = grounding_level(net, claim).level
        lineage = claim_lineage(net, claim)
        lost = frozenset(p for p in losses if p[1] == claim)
        flagged = (lineage.depth >= depth_threshold and level < Level.DATA_BACKED) or bool(lost)
        entries.append(
            ClaimAudit(claim, level, lineage.depth, self_citation_ratio(net, lineage), lost, flagged)
        )
    return DistortionReport(depth_threshold, tuple(entries))

