"""Small directed-graph helpers over adjacency dicts of string ids."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Mapping

Adjacency = Mapping[str, Iterable[str]]


def adjacency(pairs: Iterable[tuple[str, str]]) -> dict[str, set[str]]:
    succ: dict[str, set[str]] = defaultdict(set)
    for a, b in pairs:
        succ[a].add(b)
        succ.setdefault(b, set())
    return dict(succ)


def reverse(succ: Adjacency) -> dict[str, set[str]]:
    pred: dict[str, set[str]] = {n: set() for n in succ}
    for a, targets in succ.items():
        for b in targets:
            pred.setdefault(b, set()).add(a)
    return pred


def find_cycle(succ: Adjacency) -> list[str] | None:
    """Return one cycle as ``[n0, n1, ..., n0]``, or None for a DAG.

    Iterative three-colour DFS; nodes and successors are visited in
    sorted order so the reported cycle is deterministic.
    """
    WHITE, GREY, BLACK = 0, 1, 2
    colour = {n: WHITE for n in succ}
    for root in sorted(succ):
        if colour[root] != WHITE:
            continue
        path = [root]
        stack = [iter(sorted(succ[root]))]
        colour[root] = GREY
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                colour[path.pop()] = BLACK
                continue
            state = colour.get(nxt, WHITE)
            if state == GREY:
                return path[path.index(nxt):] + [nxt]
            if state == WHITE:
                colour[nxt] = GREY
                path.append(nxt)
                stack.append(iter(sorted(succ.get(nxt, ()))))
    return None


def reachable_from(succ: Adjacency, start: str) -> set[str]:
    """Nodes reachable from ``start`` by one or more steps."""
    seen: set[str] = set()
    todo = list(succ.get(start, ()))
    while todo:
        n = todo.pop()
        if n in seen:
            continue
        seen.add(n)
        todo.extend(succ.get(n, ()))
    return seen


def shortest_path(succ: Adjacency, start: str, goal: str) -> list[str] | None:
    """Breadth-first path, lexicographically smallest among the shortest."""
    if start == goal:
        return [start]
    frontier = [[start]]
    seen = {start}
    while frontier:
        nxt_frontier = []
        for path in frontier:
            for n in sorted(succ.get(path[-1], ())):
                if n in seen:
                    continue
                if n == goal:
                    return path + [n]
                seen.add(n)
                nxt_frontier.append(path + [n])
        frontier = nxt_frontier
    return None
