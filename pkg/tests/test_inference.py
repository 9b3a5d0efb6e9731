import random

import pytest

from micropub import fixtures as fx
from micropub.errors import CycleDetected
from micropub.inference import challenge_graph, challenges_inferred, close, support_graph, supports_closure
from micropub.model import Predicate, RelationEdge

from generators import random_dag
from oracles import challenges_brute, closure_matrix, has_cycle_brute


def E(a, b, p=Predicate.SUPPORTS, by="MP"):
    return RelationEdge(a, b, p, by)


def test_closure_of_chain():
    assert supports_closure([E("a", "b"), E("b", "c")]) == {("a", "b"), ("b", "c"), ("a", "c")}


def test_closure_ignores_other_predicates():
    edges = [E("a", "b"), E("q", "a", Predicate.QUALIFIED_BY), E("x", "a", Predicate.DIRECTLY_CHALLENGES)]
    assert supports_closure(edges) == {("a", "b")}


def test_cycle_raises_with_members():
    with pytest.raises(CycleDetected) as info:
        supports_closure([E("a", "b"), E("b", "c"), E("c", "a"), E("c", "d")])
    assert set(info.value.cycle) == {"a", "b", "c"}


def test_undercut_through_s3():
    mp12 = fx.mp12()
    got = challenges_inferred(mp12.edges)
    assert ("C11", "S3", None) in got
    assert ("C11", "C12", "S3") in got
    spilman = fx.spilman_network()
    assert ("C11", "C3", "S3") in spilman.closed.inferred_challenges


def test_challenges_do_not_chain():
    edges = [E("x", "y", Predicate.DIRECTLY_CHALLENGES), E("w", "x", Predicate.DIRECTLY_CHALLENGES)]
    assert {(a, b) for a, b, _ in challenges_inferred(edges)} == {("x", "y"), ("w", "x")}


def test_support_and_challenge_graphs_of_mp3_in_network():
    net = fx.spilman_network()
    mp3 = net.micropublications["MP3"]
    assert support_graph(mp3, net.closed) == support_graph(mp3)
    assert challenge_graph(mp3, net.closed) == {"C11"}
    # without the network MP3 knows of no challenger
    assert challenge_graph(mp3) == frozenset()


@pytest.mark.parametrize("seed", range(200))
def test_matches_oracles_on_random_dags(seed):
    nodes, edges = random_dag(random.Random(seed), max_nodes=12)
    pairs = {e.pair for e in edges if e.predicate is Predicate.SUPPORTS}
    direct = {e.pair for e in edges if e.predicate is Predicate.DIRECTLY_CHALLENGES}
    closed = closure_matrix(nodes, pairs)
    assert supports_closure(edges) == closed
    assert {(x, z) for x, z, _ in challenges_inferred(edges)} == challenges_brute(closed, direct)


@pytest.mark.parametrize("seed", range(50))
def test_cycle_detection_agrees_with_oracle(seed):
    rng = random.Random(seed)
    nodes = [f"n{i}" for i in range(rng.randint(2, 7))]
    pairs = {(a, b) for a in nodes for b in nodes if a != b and rng.random() < 0.25}
    edges = [E(a, b) for a, b in pairs]
    if has_cycle_brute(pairs):
        with pytest.raises(CycleDetected):
            close(edges)
    else:
        assert close(edges).closed_supports == closure_matrix(nodes, pairs)
