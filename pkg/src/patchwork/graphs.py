"""A small undirected graph value type and DOT export."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1`` with display labels.

    ``adjacency[i]`` is the frozenset of neighbours of vertex ``i``.
    """

    vertices: tuple[str, ...]
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.adjacency):
            raise ValueError("one adjacency set per vertex is required")
        for i, nbrs in enumerate(self.adjacency):
            if i in nbrs:
                raise ValueError(f"self-loop at vertex {i}")
            for j in nbrs:
                if i not in self.adjacency[j]:
                    raise ValueError(f"asymmetric edge {i}-{j}")

    @classmethod
    def from_edges(cls, vertices: Iterable[str], edges: Iterable[tuple[int, int]]) -> Graph:
        vertices = tuple(vertices)
        adj: list[set[int]] = [set() for _ in vertices]
        for i, j in edges:
            adj[i].add(j)
            adj[j].add(i)
        return cls(vertices, tuple(frozenset(s) for s in adj))

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> Iterator[tuple[int, int]]:
        for i, nbrs in enumerate(self.adjacency):
            for j in sorted(nbrs):
                if i < j:
                    yield i, j

    def edge_count(self) -> int:
        return sum(len(n) for n in self.adjacency) // 2

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adjacency[i]

    def is_connected(self, subset: Iterable[int] | None = None) -> bool:
        """Connectivity of the subgraph induced by ``subset`` (default: all)."""
        nodes = set(range(len(self.vertices)) if subset is None else subset)
        if not nodes:
            return True
        start = next(iter(nodes))
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in self.adjacency[v]:
                if w in nodes and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == nodes

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for s in range(len(self.vertices)):
            if s in seen:
                continue
            comp = []
            stack = [s]
            seen.add(s)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adjacency[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [[i, j] for i, j in self.edges()],
        }


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for i, label in enumerate(g.vertices):
        lines.append(f"  n{i} [label={_quote(label)}];")
    for i, j in g.edges():
        lines.append(f"  n{i} -- n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
