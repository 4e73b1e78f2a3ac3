from __future__ import annotations

import sys
from itertools import combinations

import pytest

from patchwork.setcore import SetFamily


def naive_closure(f: SetFamily) -> set[int]:
    """Full pair sweeps until nothing changes; independent of the worklist."""
    sets = {0, f.ground.full, *f.sets}
    while True:
        new = set(sets)
        for a, b in combinations(sets, 2):
            if a & b and a & ~b and b & ~a:
                new |= {a | b, a & b, a & ~b, b & ~a}
        if new == sets:
            return sets
        sets = new


def naive_autonomous(sets) -> set[int]:
    def overlaps(a, b):
        return a & b and a & ~b and b & ~a

    return {a for a in sets if a and not any(overlaps(a, b) for b in sets)}


@pytest.fixture
def triangle() -> SetFamily:
    return SetFamily.from_labels("xyz", [["x", "y"], ["y", "z"], ["x", "z"]])


@pytest.fixture
def chain() -> SetFamily:
    return SetFamily.from_labels(["1", "2", "3"], [["1"], ["1", "2"], ["1", "2", "3"]])


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
