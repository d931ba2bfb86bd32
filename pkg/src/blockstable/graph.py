"""Labeled simple graphs on the vertex set [n] = {1, ..., n}.

Graphs are immutable. All public interfaces speak 1-based labels.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable


class GraphFormatError(ValueError):
    """Raised when an edge-list document cannot be parsed."""


Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LabeledGraph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        normed = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u}, {v}) outside [1, {self.n}]")
            normed.add(_norm(u, v))
        object.__setattr__(self, "edges", frozenset(normed))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "LabeledGraph":
        return cls(n, frozenset(_norm(u, v) for u, v in edges))

    @cached_property
    def adjacency(self) -> list[list[int]]:
        """Sorted neighbour lists; index 0 is unused."""
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for nbrs in adj:
            nbrs.sort()
        return adj

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __repr__(self):
        return f"LabeledGraph(n={self.n}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class VertexPartition:
    parts: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


def parse_graph(text: str) -> LabeledGraph:
    """Parse the edge-list format: a header ``n m`` followed by ``m`` lines ``u v``.

    Blank lines are ignored. Errors name the 1-based line number.
    """
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty document")

    def ints(lineno: int, line: str) -> tuple[int, int]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}") from None

    hline, header = lines[0]
    n, m = ints(hline, header)
    if n < 1 or m < 0:
        raise GraphFormatError(f"line {hline}: bad header {header!r}")
    body = lines[1:]
    seen: set[Edge] = set()
    for lineno, line in body:
        u, v = ints(lineno, line)
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"line {lineno}: endpoint out of range [1, {n}] in {line!r}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop {line!r}")
        e = _norm(u, v)
        if e in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {line!r}")
        seen.add(e)
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)} edge lines")
    return LabeledGraph(n, frozenset(seen))


def serialize_graph(g: LabeledGraph) -> str:
    edges = g.sorted_edges()
    out = [f"{g.n} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def components(g: LabeledGraph) -> VertexPartition:
    seen = [False] * (g.n + 1)
    adj = g.adjacency
    parts = []
    for s in range(1, g.n + 1):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        parts.append(tuple(sorted(comp)))
    # scanning s in increasing order already orders parts by minimum
    return VertexPartition(tuple(parts))


def is_connected(g: LabeledGraph) -> bool:
    return len(components(g)) == 1


def induced_relabeled(g: LabeledGraph, vertices: Iterable[int]) -> tuple[LabeledGraph, tuple[int, ...]]:
    """Induced subgraph on ``vertices``, relabeled order-preservingly onto [len(vertices)].

    Returns the relabeled graph and the tuple ``labels`` with ``labels[i-1]`` the
    original label of new vertex ``i``.
    """
    labels = tuple(sorted(vertices))
    index = {v: i + 1 for i, v in enumerate(labels)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return LabeledGraph.from_edges(len(labels), edges), labels


def relabel(g: LabeledGraph, labels: tuple[int, ...], n: int) -> LabeledGraph:
    """Map vertex ``i`` of ``g`` to ``labels[i-1]`` inside a graph on [n]."""
    return LabeledGraph.from_edges(n, ((labels[u - 1], labels[v - 1]) for u, v in g.edges))


def union(n: int, graphs: Iterable[LabeledGraph]) -> LabeledGraph:
    edges: set[Edge] = set()
    for h in graphs:
        edges |= h.edges
    return LabeledGraph(n, frozenset(edges))


# common fixtures

def path_graph(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, ((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def pendant_triangle_graph() -> LabeledGraph:
    """Five vertices: pendant edges 1-2 and 2-5 and the triangle {2, 3, 4}."""
    return LabeledGraph.from_edges(5, [(1, 2), (2, 3), (3, 4), (2, 4), (2, 5)])
