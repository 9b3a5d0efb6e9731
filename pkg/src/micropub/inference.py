"""Transitive support, undercutting challenges and graph views.

``supports`` is transitive. ``challenges`` is inferred one step at a
time: X challenges Z when X directly challenges Z, or when X directly
challenges some Y that (transitively) supports Z. Challenges do not
chain through other challenges.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from . import _graph
from .errors import CycleDetected
from .model import Micropublication, Predicate, RelationEdge

Pair = tuple[str, str]
Challenge = tuple[str, str, "str | None"]


@dataclass(frozen=True)
class ClosedRelation:
    base_edges: frozenset[RelationEdge]
    closed_supports: frozenset[Pair]
    inferred_challenges: frozenset[Challenge]

    def supporters_of(self, node: str) -> set[str]:
        return {a for a, b in self.closed_supports if b == node}


def _supports_pairs(edges: Iterable[RelationEdge]) -> set[Pair]:
    return {e.pair for e in edges if e.predicate is Predicate.SUPPORTS}


def supports_closure(edges: Iterable[RelationEdge]) -> frozenset[Pair]:
    """Smallest transitively closed relation containing the supports edges.

    Raises:
        CycleDetected: the supports edges contain a cycle.
    """
    succ = _graph.adjacency(_supports_pairs(edges))
    cycle = _graph.find_cycle(succ)
    if cycle is not None:
        raise CycleDetected(cycle)

    # reverse topological order: every successor's reach is final first
    reach: dict[str, set[str]] = {}
    order: list[str] = []
    seen: set[str] = set()
    for root in sorted(succ):
        if root in seen:
            continue
        stack = [(root, iter(sorted(succ[root])))]
        seen.add(root)
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                order.append(node)
            elif nxt not in seen:
                seen.add(nxt)
                stack.append((nxt, iter(sorted(succ[nxt]))))
    for node in order:
        r: set[str] = set()
        for m in succ[node]:
            r.add(m)
            r |= reach[m]
        reach[node] = r
    return frozenset((a, b) for a, targets in reach.items() for b in targets)


def challenges_inferred(edges: Iterable[RelationEdge], closure: frozenset[Pair] | None = None) -> frozenset[Challenge]:
    """Direct challenges plus those inferred by undercutting a supporter.

    Direct ones come back as ``(x, z, None)``; undercuts as ``(x, z, y)``
    where ``y`` is the directly challenged representation.
    """
    edges = list(edges)
    if closure is None:
        closure = supports_closure(edges)
    supported_by: dict[str, set[str]] = {}
    for a, b in closure:
        supported_by.setdefault(a, set()).add(b)

    out: set[Challenge] = set()
    for e in edges:
        if e.predicate is not Predicate.DIRECTLY_CHALLENGES:
            continue
        out.add((e.from_id, e.to_id, None))
        for z in supported_by.get(e.to_id, ()):
            out.add((e.from_id, z, e.to_id))
    return frozenset(out)


def close(edges: Iterable[RelationEdge]) -> ClosedRelation:
    edges = frozenset(edges)
    closure = supports_closure(edges)
    return ClosedRelation(edges, closure, challenges_inferred(edges, closure))


def support_graph(mp: Micropublication, closed: ClosedRelation | None = None) -> frozenset[str]:
    """Elements of ``mp`` that support its claim, plus their attributions.

    Without ``closed`` only the micropublication's own edges are used, so
    support that reaches a quoted element through other publications is
    not visible.
    """
    if mp.claim_id is None:
        return frozenset()
    if closed is None:
        closed = close(mp.edges)
    elements = mp.element_ids
    members = {e for e in closed.supporters_of(mp.claim_id) if e in elements}
    for e in list(members):
        el = mp.lookup(e)
        attribution = getattr(el, "attribution", None)
        if attribution is not None:
            members.add(attribution.id)
    members.discard(mp.claim_id)
    return frozenset(members)


def challenge_targets(mp: Micropublication, closed: ClosedRelation | None = None) -> frozenset[Challenge]:
    """Inferred challenges that land on the claim of ``mp`` or its support graph."""
    if mp.claim_id is None:
        return frozenset()
    if closed is None:
        closed = close(mp.edges)
    targets = support_graph(mp, closed) | {mp.claim_id}
    return frozenset(c for c in closed.inferred_challenges if c[1] in targets)


def challenge_graph(mp: Micropublication, closed: ClosedRelation | None = None) -> frozenset[str]:
    """Representations that challenge the claim of ``mp`` or one of its supporters.

    With a network-wide ``closed`` relation the challengers may belong to
    other micropublications.
    """
    return frozenset(x for x, _, _ in challenge_targets(mp, closed))
