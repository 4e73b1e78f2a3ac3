"""Decide whether a total order makes every set of a family convex.

The pipeline: optionally collapse points with identical membership, close
the family with an early exit at the convex size bound ``2n^2 - n + 2``,
build the autonomy tree, and either report three pairwise adjacent sets or
assemble an ordering from the tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .closure import Closed, Patchwork, close_bounded
from .setcore import GroundSet, SetFamily, canonical_key, members
from .structure import COMPLETE, PATH, AutonomyTree, autonomy_tree


class ContractViolation(RuntimeError):
    """An internal invariant failed; signals a bug, not bad input."""


def convex_bound(n: int) -> int:
    return 2 * n * n - n + 2


# -- convexity --------------------------------------------------------------


class ConvexityWitness(NamedTuple):
    set: int
    p: int
    q: int
    r: int


def verify_order(f: SetFamily | Sequence[int], order: Sequence[int]) -> tuple[bool, Optional[ConvexityWitness]]:
    """Check that every set is convex under ``order`` (a permutation of indices).

    On failure the witness has ``p`` before ``q`` before ``r`` with ``p, r``
    in the set and ``q`` outside it.
    """
    pos = {e: i for i, e in enumerate(order)}
    for s in f:
        if not s:
            continue
        where = sorted(pos[e] for e in members(s))
        lo, hi = where[0], where[-1]
        if hi - lo + 1 == len(where):
            continue
        q = next(order[i] for i in range(lo, hi + 1) if not (s >> order[i]) & 1)
        return False, ConvexityWitness(s, order[lo], q, order[hi])
    return True, None


# -- quotient by membership signature --------------------------------------


@dataclass(frozen=True)
class QuotientMap:
    classes: tuple[int, ...]          # blocks over the original ground set
    representatives: tuple[int, ...]  # least original index in each block
    signatures: tuple[int, ...]       # bit j set iff the block lies in set j
    original: GroundSet

    def lift_mask(self, reduced: int) -> int:
        out = 0
        for k in members(reduced):
            out |= self.classes[k]
        return out


def quotient(f: SetFamily) -> tuple[SetFamily, QuotientMap]:
    """Keep one point per class of points lying in exactly the same sets."""
    blocks: dict[int, int] = {}
    for e in range(len(f.ground)):
        sig = 0
        for j, s in enumerate(f.sets):
            if (s >> e) & 1:
                sig |= 1 << j
        blocks[sig] = blocks.get(sig, 0) | (1 << e)
    ordered = sorted(blocks.items(), key=lambda kv: next(members(kv[1])))
    classes = tuple(b for _, b in ordered)
    reps = tuple(next(members(b)) for b in classes)
    sigs = tuple(s for s, _ in ordered)
    reduced_ground = GroundSet(tuple(f.ground.labels[r] for r in reps))
    reduced_sets = []
    for j in range(len(f.sets)):
        reduced_sets.append(sum(1 << k for k, sig in enumerate(sigs) if (sig >> j) & 1))
    qmap = QuotientMap(classes, reps, sigs, f.ground)
    return SetFamily(reduced_ground, tuple(reduced_sets)), qmap


def lift_order(reduced_order: Sequence[int], qmap: QuotientMap) -> list[int]:
    """Expand an order of the classes into an order of the whole ground set."""
    if sorted(reduced_order) != list(range(len(qmap.classes))):
        raise ValueError("reduced order must permute the quotient classes")
    out: list[int] = []
    for k in reduced_order:
        out.extend(members(qmap.classes[k]))
    return out


# -- certificates and verdicts ---------------------------------------------


@dataclass(frozen=True)
class Certificate:
    kind: str  # "adjacent_triple" or "closure_bound_exceeded"
    sets: tuple[int, ...] = ()
    bound: int = 0
    reached: int = 0

    def to_json(self, ground: GroundSet) -> dict:
        if self.kind == "adjacent_triple":
            return {"kind": self.kind, "sets": [ground.labels_of(s) for s in self.sets]}
        return {"kind": self.kind, "bound": self.bound, "reached": self.reached}


@dataclass(frozen=True)
class Verdict:
    orderable: bool
    order: Optional[tuple[int, ...]] = None
    certificate: Optional[Certificate] = None

    def to_json(self, ground: GroundSet) -> dict:
        return {
            "orderable": self.orderable,
            "order": None if self.order is None else [ground.labels[i] for i in self.order],
            "certificate": None if self.certificate is None else self.certificate.to_json(ground),
        }


def find_adjacent_triple(P: Patchwork, tree: AutonomyTree) -> Optional[tuple[int, int, int]]:
    """Three pairwise adjacent cohort members, taken from the canonically
    least node whose cohort graph is complete."""
    complete = [n for n in tree.nodes if n.label.kind == COMPLETE]
    if not complete:
        return None
    node = min(complete, key=lambda n: canonical_key(n.mask))
    cohort = sorted((tree.nodes[c].mask for c in node.cohort), key=canonical_key)
    a, b, c = cohort[:3]
    return a, b, c


def construct_order(P: Patchwork, tree: AutonomyTree) -> list[int]:
    """Assemble an order, bottom-up, under which every member is convex."""

    def walk(i: int) -> list[int]:
        node = tree.nodes[i]
        if node.label.kind == COMPLETE:
            raise ContractViolation("cannot order a node whose cohort graph is complete")
        children = node.label.order if node.label.kind == PATH else sorted(
            node.cohort, key=lambda c: canonical_key(tree.nodes[c].mask)
        )
        out: list[int] = []
        for c in children:
            out.extend(walk(c))
        out.extend(members(node.non_cohort))
        return out

    return walk(tree.root)


@dataclass(frozen=True)
class Decision:
    """A verdict together with the intermediate objects used to reach it.

    ``patchwork`` and ``tree`` live on the reduced ground set when a quotient
    was taken; the verdict itself is always stated on the original one.
    """

    verdict: Verdict
    family: SetFamily
    reduced: SetFamily
    qmap: Optional[QuotientMap] = None
    patchwork: Optional[Patchwork] = None
    tree: Optional[AutonomyTree] = None


def decide(
    f: SetFamily,
    *,
    use_quotient: bool = True,
    find_triple: bool = False,
    triple_cap: int = 1 << 16,
) -> Decision:
    n = len(f.sets)
    qmap = None
    reduced = f
    if use_quotient and len(f.ground) > 2 ** n:
        reduced, qmap = quotient(f)

    def lift_set(m: int) -> int:
        return m if qmap is None else qmap.lift_mask(m)

    if not reduced.ground.full:
        return Decision(Verdict(True, ()), f, reduced, qmap)

    bound = convex_bound(n)
    outcome = close_bounded(reduced, max(bound, 2))
    if not isinstance(outcome, Closed):
        cert = Certificate("closure_bound_exceeded", bound=outcome.bound, reached=outcome.reached)
        if find_triple and triple_cap > outcome.bound:
            wider = close_bounded(reduced, triple_cap)
            if isinstance(wider, Closed):
                P = wider.patchwork
                tree = autonomy_tree(P)
                triple = find_adjacent_triple(P, tree)
                if triple is None:
                    raise ContractViolation("closure exceeded the convex bound but no complete cohort exists")
                cert = Certificate("adjacent_triple", tuple(lift_set(s) for s in triple))
                return Decision(Verdict(False, None, cert), f, reduced, qmap, P, tree)
        return Decision(Verdict(False, None, cert), f, reduced, qmap)

    P = outcome.patchwork
    tree = autonomy_tree(P)
    triple = find_adjacent_triple(P, tree)
    if triple is not None:
        cert = Certificate("adjacent_triple", tuple(lift_set(s) for s in triple))
        return Decision(Verdict(False, None, cert), f, reduced, qmap, P, tree)

    order = construct_order(P, tree)
    ok, witness = verify_order(P.sets, order)
    if not ok:
        raise ContractViolation(f"constructed order breaks convexity: {witness}")
    if qmap is not None:
        order = lift_order(order, qmap)
    ok, witness = verify_order(f, order)
    if not ok:
        raise ContractViolation(f"lifted order breaks convexity: {witness}")
    return Decision(Verdict(True, tuple(order)), f, reduced, qmap, P, tree)
