import random
from itertools import permutations

import pytest

from patchwork.graphs import Graph, to_dot
from patchwork.intervalgraph import (
    OracleCapExceeded,
    c_plus,
    intersection_graph,
    interval_representation,
    is_interval_graph_oracle,
    morris_check,
)
from patchwork.orderability import ContractViolation, decide
from patchwork.setcore import GroundSet, SetFamily


def complete(n):
    return Graph.from_edges(map(str, range(n)), [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n):
    return Graph.from_edges(map(str, range(n)), [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return Graph.from_edges(map(str, range(n)), [(i, i + 1) for i in range(n - 1)])


def plain_permutation_oracle(g):
    """Unpruned scan of all vertex orders; used to cross-check the pruned search."""
    n = len(g)
    for order in permutations(range(n)):
        ok = True
        for a in range(n):
            for c in range(a + 2, n):
                if g.has_edge(order[a], order[c]):
                    if any(not g.has_edge(order[a], order[b]) for b in range(a + 1, c)):
                        ok = False
                        break
            if not ok:
                break
        if ok:
            return True
    return False


def test_c_plus(triangle):
    assert len(c_plus(triangle)) == 6
    assert c_plus(SetFamily(GroundSet(("a",)), (0,))).sets == (1,)
    assert len(c_plus(SetFamily(GroundSet(("a", "b")), (1,)))) == 2


def test_intersection_graph_k3(triangle, chain):
    for f in (triangle, chain):
        g = intersection_graph(f)
        assert len(g) == 3 and g.edge_count() == 3


def test_intersection_graph_disjoint():
    g = intersection_graph(SetFamily(GroundSet(tuple("abc")), (1, 2, 4)))
    assert g.edge_count() == 0


def test_interval_rep_chain(chain):
    rep = interval_representation((0, 1, 2), chain)
    assert rep.intervals == {0b001: (2, 3), 0b011: (2, 5), 0b111: (2, 7)}


def test_interval_rep_singletons():
    f = c_plus(SetFamily(GroundSet(tuple("abc")), ()))
    rep = interval_representation((2, 0, 1), f)
    assert rep.intervals == {0b100: (2, 3), 0b001: (4, 5), 0b010: (6, 7)}


def test_interval_rep_requires_convexity(triangle):
    with pytest.raises(ContractViolation):
        interval_representation((0, 1, 2), triangle)


@pytest.mark.parametrize("n", range(1, 7))
def test_oracle_complete(n):
    assert is_interval_graph_oracle(complete(n))


@pytest.mark.parametrize("n", range(4, 9))
def test_oracle_cycles(n):
    assert not is_interval_graph_oracle(cycle(n))


@pytest.mark.parametrize("n", range(1, 9))
def test_oracle_paths(n):
    assert is_interval_graph_oracle(path(n))


def test_oracle_edgeless_and_cap():
    assert is_interval_graph_oracle(Graph.from_edges(map(str, range(5)), []))
    with pytest.raises(OracleCapExceeded):
        is_interval_graph_oracle(path(11))


def test_oracle_matches_unpruned_scan():
    rng = random.Random(1)
    for _ in range(150):
        n = rng.randint(1, 6)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
        g = Graph.from_edges(map(str, range(n)), edges)
        assert is_interval_graph_oracle(g) == plain_permutation_oracle(g)


def test_morris_named(triangle, chain):
    assert not morris_check(triangle)
    assert morris_check(chain)
    assert morris_check(SetFamily(GroundSet(tuple("abcd")), ()))


def test_morris_random_agrees():
    rng = random.Random(8)
    g = GroundSet(tuple("abcde"))
    for _ in range(150):
        f = SetFamily(g, tuple(rng.getrandbits(5) for _ in range(rng.randint(0, 4))))
        v = decide(f).verdict
        assert morris_check(f) == v.orderable
        if v.orderable:
            plus = c_plus(f)
            rep = interval_representation(v.order, plus)
            graph = intersection_graph(plus)
            for i, a in enumerate(plus.sets):
                for j, b in enumerate(plus.sets):
                    if i < j:
                        assert rep.intersects(a, b) == graph.has_edge(i, j)


def test_to_dot():
    text = to_dot(complete(3))
    assert text.count("label=") == 3 and text.count(" -- ") == 3
    assert to_dot(Graph.from_edges("ab", [])).count(" -- ") == 0
    assert to_dot(complete(3)) == text


def test_graph_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        Graph(("a", "b"), (frozenset({1}), frozenset()))
    with pytest.raises(ValueError):
        Graph(("a",), (frozenset({0}),))
