"""Extremal families, size bounds, a brute-force oracle and enumerators."""

from __future__ import annotations

import random
from itertools import combinations, permutations
from typing import Iterator, Optional

from .orderability import convex_bound, verify_order
from .setcore import GroundSet, SetFamily
from .structure import COMPLETE, EDGELESS, PATH, TreeSpec

ORACLE_CAP = 8
POWERSET_CAP = 4


def max_patchwork_size(n: int) -> int:
    """Largest patchwork generated by ``n`` sets: ``2**(2**n - 1) + 1``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > 6:
        raise OverflowError("bound is astronomically large for n > 6")
    return 2 ** (2 ** n - 1) + 1


def max_convex_patchwork_size(n: int) -> int:
    """Largest patchwork generated by ``n`` sets that are convex under one order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return convex_bound(n)


def powerset_example(n: int) -> SetFamily:
    """Points are the subsets of ``{1..n}`` (labelled ``""``, ``"1"``, ``"12"``, ...);
    generator ``i`` is the set of points containing ``i``."""
    if not 0 <= n <= POWERSET_CAP:
        raise ValueError(f"n must lie in 0..{POWERSET_CAP}")
    points = sorted(
        (c for r in range(n + 1) for c in combinations(range(1, n + 1), r)),
        key=lambda c: (len(c), c),
    )
    labels = ["".join(map(str, c)) for c in points]
    sets = [[lab for c, lab in zip(points, labels) if i in c] for i in range(1, n + 1)]
    return SetFamily.from_labels(labels, sets)


def interval_example(n: int) -> SetFamily:
    """Ground set ``-n..n``; generators ``[-n+i, i-1]`` for ``i = 1..n``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    omega = [str(k) for k in range(-n, n + 1)]
    sets = [[str(k) for k in range(-n + i, i)] for i in range(1, n + 1)]
    return SetFamily.from_labels(omega, sets)


def brute_force_decide(f: SetFamily) -> Optional[tuple[int, ...]]:
    """First permutation (lexicographic) making every set convex, or ``None``."""
    if len(f.ground) > ORACLE_CAP:
        raise ValueError(f"brute force is capped at {ORACLE_CAP} elements")
    for order in permutations(range(len(f.ground))):
        if verify_order(f, order)[0]:
            return order
    return None


def _labels(k: int) -> tuple[str, ...]:
    return tuple("abcdefgh"[:k]) if k <= 8 else tuple(f"e{i}" for i in range(k))


def enumerate_families(omega_size: int, max_sets: Optional[int] = None) -> Iterator[SetFamily]:
    """Every family of distinct subsets of an ``omega_size``-point set.

    With ``max_sets`` only families of at most that many sets are produced;
    without it every one of the ``2**(2**omega_size)`` families is, which is
    allowed for ``omega_size <= 3``.
    """
    if omega_size > 4:
        raise ValueError("omega_size is capped at 4")
    if max_sets is None and omega_size > 3:
        raise ValueError("full enumeration is capped at omega_size 3")
    ground = GroundSet(_labels(omega_size))
    subsets = list(range(1 << omega_size))
    top = len(subsets) if max_sets is None else min(max_sets, len(subsets))
    for r in range(top + 1):
        for combo in combinations(subsets, r):
            yield SetFamily(ground, combo)


def random_family(rng: random.Random, omega_size: int, max_sets: int) -> SetFamily:
    ground = GroundSet(_labels(omega_size))
    k = rng.randint(0, max_sets)
    return SetFamily(ground, tuple(rng.getrandbits(omega_size) for _ in range(k)))


def random_tree_spec(rng: random.Random, max_labels: int = 12) -> TreeSpec:
    """A random valid tree description using at most ``max_labels`` labels."""
    counter = iter(range(max_labels))

    def fresh(k: int) -> tuple[str, ...]:
        return tuple(f"p{next(counter)}" for _ in range(k))

    def grow(budget: int, depth: int) -> tuple[TreeSpec, int]:
        # returns the node and the number of labels it consumed
        if budget <= 2 or depth >= 3 or rng.random() < 0.3:
            k = rng.randint(1, min(2, budget))
            return TreeSpec(EDGELESS, fresh(k)), k
        kind = rng.choice([COMPLETE, PATH, EDGELESS])
        lo = 3 if kind == COMPLETE else 2
        n_children = rng.randint(lo, max(lo, min(budget, 4)))
        # an edgeless node with two children must own a label
        own = 1 if kind == EDGELESS and (n_children == 2 or rng.random() < 0.5) else 0
        if budget < n_children + own:
            return TreeSpec(EDGELESS, fresh(1)), 1
        labels = fresh(own)
        used = own
        children = []
        for i in range(n_children):
            reserve = n_children - i - 1
            child, k = grow(budget - used - reserve, depth + 1)
            children.append(child)
            used += k
        return TreeSpec(kind, labels, tuple(children)), used

    root, _ = grow(max_labels, 0)
    return root
