"""Autonomous sets, the autonomy tree, cohort adjacency and its trichotomy.

A nonempty member of a patchwork is *autonomous* when it overlaps no member.
Autonomous sets are pairwise disjoint or nested, so they form a tree under
inclusion rooted at the full ground set.  The maximal autonomous proper
subsets of a node are its *cohort*; two disjoint nonempty members are
*adjacent* when their union is a member too.  Each cohort's adjacency graph
is complete (on at least three vertices), a path, or edgeless.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Iterable, Optional, Sequence

from .closure import Patchwork
from .graphs import Graph
from .setcore import GroundSet, SetFamily, canonical_key, canonical_sorted, overlap

COMPLETE = "complete"
PATH = "path"
EDGELESS = "edgeless"
KINDS = (COMPLETE, PATH, EDGELESS)


class NotAPatchwork(ValueError):
    """The input family is not closed, so the cohort trichotomy does not apply."""

    def __init__(self, node_mask: int, reason: str) -> None:
        super().__init__(f"not a patchwork: node {node_mask:#b}: {reason}")
        self.node_mask = node_mask
        self.reason = reason


class EmptyUniverse(ValueError):
    pass


class TreeSpecError(ValueError):
    pass


@dataclass(frozen=True)
class CaseLabel:
    kind: str
    order: tuple[int, ...] = ()  # node indices along the path, PATH only

    def same_as(self, other: CaseLabel) -> bool:
        """Equality that treats a path and its reversal as the same."""
        if self.kind != other.kind:
            return False
        return self.order == other.order or self.order == tuple(reversed(other.order))

    def to_json(self) -> str:
        return self.kind


@dataclass(frozen=True)
class TreeNode:
    mask: int
    parent: Optional[int]
    cohort: tuple[int, ...]
    non_cohort: int
    label: CaseLabel


@dataclass(frozen=True)
class AutonomyTree:
    nodes: tuple[TreeNode, ...]
    root: int

    def __len__(self) -> int:
        return len(self.nodes)

    def index_of(self, mask: int) -> int:
        for i, node in enumerate(self.nodes):
            if node.mask == mask:
                return i
        raise KeyError(f"{mask:#b} is not an autonomous set")

    def to_json(self, ground: GroundSet, index: Optional[int] = None) -> dict:
        i = self.root if index is None else index
        node = self.nodes[i]
        children = node.label.order if node.label.kind == PATH else node.cohort
        return {
            "set": ground.labels_of(node.mask),
            "case": node.label.kind,
            "non_cohort": ground.labels_of(node.non_cohort),
            "children": [self.to_json(ground, c) for c in children],
        }


def autonomous_sets(P: Patchwork) -> list[int]:
    sets = P.sets
    return canonical_sorted(
        m for m in sets if m and not any(overlap(m, q) for q in sets)
    )


def adjacent(P: Patchwork, a: int, b: int) -> bool:
    if a not in P or b not in P:
        raise ValueError("adjacency is only defined between members of the patchwork")
    return bool(a) and bool(b) and not (a & b) and (a | b) in P


def _adjacency_edges(P: Patchwork, masks: Sequence[int]) -> list[tuple[int, int]]:
    return [
        (i, j)
        for i, j in combinations(range(len(masks)), 2)
        if not (masks[i] & masks[j]) and (masks[i] | masks[j]) in P
    ]


def adjacency_graph(P: Patchwork, masks: Sequence[int]) -> Graph:
    return Graph.from_edges((P.ground.format(m) for m in masks), _adjacency_edges(P, masks))


def _classify(P: Patchwork, mask: int, cohort: Sequence[int]) -> tuple[str, tuple[int, ...]]:
    """Return the case and, for a path, the cohort positions in path order."""
    g = adjacency_graph(P, cohort)
    k = len(cohort)
    n_edges = g.edge_count()
    if n_edges == 0:
        return EDGELESS, ()
    union = 0
    for c in cohort:
        union |= c
    if not g.is_connected():
        raise NotAPatchwork(mask, "cohort adjacency graph has edges but is disconnected")
    if union != mask:
        raise NotAPatchwork(mask, "cohort graph has edges but the cohort does not cover the node")
    if k >= 3 and n_edges == k * (k - 1) // 2:
        return COMPLETE, ()
    if n_edges == k - 1 and all(g.degree(i) <= 2 for i in range(k)):
        ends = [i for i in range(k) if g.degree(i) == 1]
        start = min(ends, key=lambda i: canonical_key(cohort[i]))
        order = [start]
        prev = None
        while len(order) < k:
            cur = order[-1]
            nxt = [w for w in g.adjacency[cur] if w != prev]
            prev = cur
            order.append(nxt[0])
        return PATH, tuple(order)
    raise NotAPatchwork(mask, "cohort adjacency graph is neither complete, a path, nor edgeless")


def autonomy_tree(P: Patchwork) -> AutonomyTree:
    if not P.ground.full:
        raise EmptyUniverse("the autonomy tree of an empty ground set is undefined")
    autos = autonomous_sets(P)
    parents: list[Optional[int]] = []
    for i, a in enumerate(autos):
        # canonical order is by popcount, so the first proper superset is the least one
        parent = next((j for j in range(i + 1, len(autos)) if autos[j] & a == a and autos[j] != a), None)
        parents.append(parent)
    children: list[list[int]] = [[] for _ in autos]
    for i, p in enumerate(parents):
        if p is not None:
            children[p].append(i)

    nodes = []
    for i, a in enumerate(autos):
        cohort_masks = [autos[c] for c in children[i]]
        covered = 0
        for c in cohort_masks:
            covered |= c
        kind, positions = _classify(P, a, cohort_masks)
        label = CaseLabel(kind, tuple(children[i][p] for p in positions))
        nodes.append(TreeNode(a, parents[i], tuple(children[i]), a & ~covered, label))
    roots = [i for i, p in enumerate(parents) if p is None]
    if len(roots) != 1 or autos[roots[0]] != P.ground.full:
        raise NotAPatchwork(P.ground.full, "autonomous sets do not form a single tree under the ground set")
    return AutonomyTree(tuple(nodes), roots[0])


def cohort_adjacency(P: Patchwork, tree: AutonomyTree, node: int) -> Graph:
    return adjacency_graph(P, [tree.nodes[c].mask for c in tree.nodes[node].cohort])


def classify_node(P: Patchwork, tree: AutonomyTree, node: int) -> CaseLabel:
    n = tree.nodes[node]
    kind, positions = _classify(P, n.mask, [tree.nodes[c].mask for c in n.cohort])
    return CaseLabel(kind, tuple(n.cohort[p] for p in positions))


def maximal_autonomous_decomposition(
    P: Patchwork, a: int, autos: Optional[Sequence[int]] = None
) -> list[int]:
    """Split a nonempty member into its maximal autonomous subsets."""
    if a not in P or not a:
        raise ValueError("expected a nonempty member of the patchwork")
    if autos is None:
        autos = autonomous_sets(P)
    inside = [x for x in autos if x & a == x]
    return [x for x in inside if not any(y != x and y & x == x for y in inside)]


# -- synthesis --------------------------------------------------------------


@dataclass(frozen=True)
class TreeSpec:
    kind: str
    labels: tuple[str, ...] = ()
    children: tuple[TreeSpec, ...] = ()

    @classmethod
    def from_json(cls, data: Any) -> TreeSpec:
        if isinstance(data, dict) and "node" in data and "kind" not in data:
            data = data["node"]
        if not isinstance(data, dict) or "kind" not in data:
            raise TreeSpecError('tree node must be an object with a "kind"')
        labels = data.get("labels", [])
        children = data.get("children", [])
        if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
            raise TreeSpecError('"labels" must be a list of strings')
        if not isinstance(children, list):
            raise TreeSpecError('"children" must be a list')
        return cls(data["kind"], tuple(labels), tuple(cls.from_json(c) for c in children))

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "labels": list(self.labels),
            "children": [c.to_json() for c in self.children],
        }

    def walk(self) -> Iterable[TreeSpec]:
        yield self
        for c in self.children:
            yield from c.walk()

    def validate(self) -> None:
        seen: set[str] = set()
        for node in self.walk():
            if node.kind not in KINDS:
                raise TreeSpecError(f"unknown node kind {node.kind!r}")
            k = len(node.children)
            if node.kind == COMPLETE and k < 3:
                raise TreeSpecError("complete nodes need at least 3 children")
            if node.kind == PATH and k < 2:
                raise TreeSpecError("path nodes need at least 2 children")
            if node.kind != EDGELESS and node.labels:
                raise TreeSpecError("only edgeless nodes may carry labels")
            # two label-free children would be adjacent through their parent
            if node.kind == EDGELESS and k <= 2 and not node.labels:
                raise TreeSpecError("an edgeless node with at most two children needs labels")
            for label in node.labels:
                if label in seen:
                    raise TreeSpecError(f"label {label!r} used twice")
                seen.add(label)

    def shape(self) -> tuple:
        """Canonical form: children unordered except along a path, which may be reversed."""
        forms = [c.shape() for c in self.children]
        return _shape(self.kind, self.labels, forms)


def _shape(kind: str, labels: Iterable[str], child_forms: list[tuple]) -> tuple:
    if kind == PATH:
        forms = min(tuple(child_forms), tuple(reversed(child_forms)))
    else:
        forms = tuple(sorted(child_forms))
    return kind, tuple(sorted(labels)), forms


def tree_shape(tree: AutonomyTree, ground: GroundSet, index: Optional[int] = None) -> tuple:
    node = tree.nodes[tree.root if index is None else index]
    ordered = node.label.order if node.label.kind == PATH else node.cohort
    forms = [tree_shape(tree, ground, c) for c in ordered]
    return _shape(node.label.kind, ground.labels_of(node.non_cohort), forms)


def synthesize_patchwork(spec: TreeSpec) -> tuple[GroundSet, Patchwork, AutonomyTree]:
    """Build the patchwork described by a tree of cohort graph kinds."""
    spec.validate()
    labels = [label for node in spec.walk() for label in node.labels]
    ground = GroundSet(tuple(labels))
    members: set[int] = {0}

    def build(node: TreeSpec) -> int:
        child_masks = [build(c) for c in node.children]
        mask = ground.mask(node.labels)
        for c in child_masks:
            mask |= c
        k = len(child_masks)
        if node.kind == COMPLETE:
            for r in range(2, k + 1):
                for combo in combinations(child_masks, r):
                    u = 0
                    for c in combo:
                        u |= c
                    members.add(u)
        elif node.kind == PATH:
            for i in range(k):
                u = child_masks[i]
                for j in range(i + 1, k):
                    u |= child_masks[j]
                    members.add(u)
        members.add(mask)
        return mask

    build(spec)
    P = Patchwork(SetFamily(ground, tuple(members)), len(members))
    return ground, P, autonomy_tree(P)
