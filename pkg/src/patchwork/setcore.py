"""Ground sets, subset masks and set families.

A subset of the ground set is an ``int`` bitmask: bit ``i`` is set when the
element with index ``i`` belongs to the subset.  Labels only appear at the
edges (parsing and serialization); everything else works on indices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class InstanceError(ValueError):
    """Raised for malformed instance input (bad JSON, unknown labels, ...)."""


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def members(mask: int) -> Iterator[int]:
    """Yield the element indices of ``mask`` in increasing order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def canonical_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key: popcount first, then the sorted member indices."""
    return popcount(mask), tuple(members(mask))


def canonical_sorted(masks: Iterable[int]) -> list[int]:
    return sorted(set(masks), key=canonical_key)


def overlap(a: int, b: int) -> bool:
    """True iff ``a`` and ``b`` meet but neither contains the other."""
    return bool(a & b) and bool(a & ~b) and bool(b & ~a)


@dataclass(frozen=True)
class GroundSet:
    labels: tuple[str, ...]
    index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        index = {label: i for i, label in enumerate(labels)}
        if len(index) != len(labels):
            seen: set[str] = set()
            dups = sorted({x for x in labels if x in seen or seen.add(x)})
            raise InstanceError(f"duplicate ground labels: {dups}")
        object.__setattr__(self, "index", index)

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    def mask(self, labels: Iterable[str]) -> int:
        m = 0
        for label in labels:
            try:
                m |= 1 << self.index[label]
            except KeyError:
                raise InstanceError(f"element {label!r} is not in omega") from None
        return m

    def labels_of(self, mask: int) -> list[str]:
        if mask >> len(self.labels):
            raise ValueError("mask is wider than the ground set")
        return [self.labels[i] for i in members(mask)]

    def format(self, mask: int) -> str:
        return "{" + ",".join(self.labels_of(mask)) + "}"


@dataclass(frozen=True)
class SetFamily:
    """A duplicate-free family of subsets of ``ground``, in canonical order."""

    ground: GroundSet
    sets: tuple[int, ...]

    def __post_init__(self) -> None:
        width = len(self.ground)
        for m in self.sets:
            if m < 0 or m >> width:
                raise ValueError(f"mask {m:#b} does not fit a ground set of size {width}")
        object.__setattr__(self, "sets", tuple(canonical_sorted(self.sets)))

    @classmethod
    def from_labels(cls, omega: Sequence[str], sets: Iterable[Iterable[str]]) -> SetFamily:
        ground = GroundSet(tuple(omega))
        return cls(ground, tuple(ground.mask(s) for s in sets))

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sets)

    def __contains__(self, mask: object) -> bool:
        return mask in self.sets

    def to_json(self) -> dict:
        return {
            "omega": list(self.ground.labels),
            "sets": [self.ground.labels_of(m) for m in self.sets],
        }


def parse_family(text: str) -> SetFamily:
    """Parse the instance JSON ``{"omega": [...], "sets": [[...], ...]}``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"malformed JSON: {exc}") from None
    return family_from_json(data)


def family_from_json(data: object) -> SetFamily:
    if not isinstance(data, dict) or "omega" not in data or "sets" not in data:
        raise InstanceError('instance must be an object with "omega" and "sets"')
    omega, sets = data["omega"], data["sets"]
    if not isinstance(omega, list) or not all(isinstance(x, str) for x in omega):
        raise InstanceError('"omega" must be a list of strings')
    if not isinstance(sets, list) or not all(isinstance(s, list) for s in sets):
        raise InstanceError('"sets" must be a list of lists')
    for s in sets:
        if not all(isinstance(x, str) for x in s):
            raise InstanceError("set elements must be strings")
    return SetFamily.from_labels(omega, sets)


def serialize_family(f: SetFamily) -> str:
    return json.dumps(f.to_json())
