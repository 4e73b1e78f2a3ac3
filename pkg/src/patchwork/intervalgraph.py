"""Intersection graphs of a family plus all singletons, and interval models.

A family is orderable exactly when the intersection graph of its nonempty
sets together with every singleton is an interval graph.  The recognizer
here is a deliberately naive exhaustive search, meant only as an
independent check at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph, to_dot  # noqa: F401  (re-exported)
from .orderability import ContractViolation, verify_order
from .setcore import SetFamily, members

DEFAULT_ORACLE_CAP = 10


class OracleCapExceeded(ValueError):
    pass


def c_plus(f: SetFamily) -> SetFamily:
    singletons = (1 << i for i in range(len(f.ground)))
    return SetFamily(f.ground, tuple(s for s in f.sets if s) + tuple(singletons))


def intersection_graph(f: SetFamily) -> Graph:
    sets = f.sets
    edges = [
        (i, j)
        for i in range(len(sets))
        for j in range(i + 1, len(sets))
        if sets[i] & sets[j]
    ]
    return Graph.from_edges((f.ground.format(s) for s in sets), edges)


@dataclass(frozen=True)
class IntervalRep:
    intervals: dict[int, tuple[int, int]]  # nonempty set mask -> (lo, hi)

    def intersects(self, a: int, b: int) -> bool:
        (lo1, hi1), (lo2, hi2) = self.intervals[a], self.intervals[b]
        return lo1 <= hi2 and lo2 <= hi1


def interval_representation(order: Sequence[int], f: SetFamily) -> IntervalRep:
    """Element at 1-based position ``i`` gets ``[2i, 2i+1]``; a set gets the
    hull of its elements' intervals."""
    ok, witness = verify_order([s for s in f.sets if s], order)
    if not ok:
        raise ContractViolation(f"set is not convex under the given order: {witness}")
    pos = {e: i + 1 for i, e in enumerate(order)}
    out = {}
    for s in f.sets:
        if not s:
            continue
        where = [pos[e] for e in members(s)]
        out[s] = (2 * min(where), 2 * max(where) + 1)
    return IntervalRep(out)


def is_interval_graph_oracle(g: Graph, cap: int = DEFAULT_ORACLE_CAP) -> bool:
    """Exhaustive search for a vertex order with: u < v < w and uw an edge
    imply uv an edge.  Such an order exists iff ``g`` is an interval graph.

    Orders are built left to right and a prefix is abandoned as soon as it
    breaks the condition, so the search is complete but never enumerates
    extensions of a bad prefix.
    """
    n = len(g)
    if n > cap:
        raise OracleCapExceeded(f"{n} vertices exceeds the oracle cap of {cap}")
    adj = g.adjacency
    prefix: list[int] = []
    used = [False] * n

    def fits(w: int) -> bool:
        # every earlier u adjacent to w must be adjacent to everything after u
        for i, u in enumerate(prefix):
            if w in adj[u]:
                for v in prefix[i + 1:]:
                    if v not in adj[u]:
                        return False
        return True

    def search() -> bool:
        if len(prefix) == n:
            return True
        tried: set[frozenset[int]] = set()
        for w in range(n):
            if used[w]:
                continue
            # true twins (equal closed neighbourhoods) are interchangeable
            twin_key = adj[w] | {w}
            if twin_key in tried:
                continue
            tried.add(twin_key)
            if fits(w):
                used[w] = True
                prefix.append(w)
                if search():
                    return True
                prefix.pop()
                used[w] = False
        return False

    return search()


def morris_check(f: SetFamily, cap: int = DEFAULT_ORACLE_CAP) -> bool:
    return is_interval_graph_oracle(intersection_graph(c_plus(f)), cap)
