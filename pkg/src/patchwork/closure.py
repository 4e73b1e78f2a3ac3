"""Patchwork closure of a set family.

A patchwork contains the empty set and the whole ground set, and for every
overlapping pair ``A, B`` also ``A | B``, ``A & B``, ``A - B`` and ``B - A``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Union

from .setcore import SetFamily, canonical_sorted, overlap


@dataclass(frozen=True)
class Patchwork:
    family: SetFamily
    generator_count: int
    member_index: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        index = {m: i for i, m in enumerate(self.family.sets)}
        object.__setattr__(self, "member_index", index)

    @property
    def ground(self):
        return self.family.ground

    @property
    def sets(self) -> tuple[int, ...]:
        return self.family.sets

    def __len__(self) -> int:
        return len(self.family.sets)

    def __contains__(self, mask: object) -> bool:
        return mask in self.member_index

    def __iter__(self):
        return iter(self.family.sets)


@dataclass(frozen=True)
class Closed:
    patchwork: Patchwork


@dataclass(frozen=True)
class Exceeded:
    reached: int
    bound: int


ClosureOutcome = Union[Closed, Exceeded]


def _combinations(a: int, b: int) -> tuple[int, int, int, int]:
    return a | b, a & b, a & ~b, b & ~a


def _saturate(f: SetFamily, bound: Optional[int]) -> Union[list[int], int]:
    """Worklist fixpoint.  Returns the member list, or the size reached when
    it first goes above ``bound``."""
    seen: set[int] = set()
    queue: deque[int] = deque()

    def push(m: int) -> bool:
        if m not in seen:
            seen.add(m)
            queue.append(m)
            if bound is not None and len(seen) > bound:
                return False
        return True

    for m in (0, f.ground.full, *f.sets):
        if not push(m):
            return len(seen)

    processed: list[int] = []
    while queue:
        m = queue.popleft()
        for p in processed:
            if overlap(m, p):
                for r in _combinations(m, p):
                    if not push(r):
                        return len(seen)
        processed.append(m)
    return processed


def close(f: SetFamily) -> Patchwork:
    """Least patchwork containing ``f``."""
    result = _saturate(f, None)
    assert isinstance(result, list)
    return Patchwork(SetFamily(f.ground, tuple(result)), len(f.sets))


def close_bounded(f: SetFamily, bound: int) -> ClosureOutcome:
    """Like :func:`close`, but give up once more than ``bound`` sets exist."""
    if bound < 2:
        raise ValueError("bound must be at least 2")
    result = _saturate(f, bound)
    if isinstance(result, int):
        return Exceeded(reached=result, bound=bound)
    return Closed(Patchwork(SetFamily(f.ground, tuple(result)), len(f.sets)))


class Violation(NamedTuple):
    pair: tuple[int, int]
    missing: int


def is_patchwork(f: SetFamily) -> tuple[bool, Optional[Violation]]:
    """Check closure; on failure report one overlapping pair and a missing set.

    A missing ``0`` or full mask is reported with the pair ``(0, 0)``.
    """
    present = set(f.sets)
    for required in (0, f.ground.full):
        if required not in present:
            return False, Violation((0, 0), required)
    sets = canonical_sorted(present)
    for i, a in enumerate(sets):
        for b in sets[i + 1:]:
            if overlap(a, b):
                for r in (a & b, a | b, a & ~b, b & ~a):
                    if r not in present:
                        return False, Violation((a, b), r)
    return True, None
