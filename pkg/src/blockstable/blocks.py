"""Blocks (biconnected components), block forests and block-path statistics.

A block is a maximal 2-connected subgraph, a bridge, or an isolated vertex.
The block forest has a node ``x_v`` per vertex and ``y_B`` per block, with
``x_v ~ y_B`` iff ``v`` lies in ``B``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .graph import Edge, LabeledGraph


@dataclass(frozen=True)
class BlockDecomposition:
    n: int
    blocks: tuple[frozenset[int], ...]
    block_edges: tuple[frozenset[Edge], ...]
    cut_vertices: frozenset[int]

    @cached_property
    def block_of_edge(self) -> dict[Edge, int]:
        return {e: i for i, es in enumerate(self.block_edges) for e in es}

    def __len__(self):
        return len(self.blocks)

    def to_json(self) -> str:
        return json.dumps(
            {
                "blocks": [sorted(b) for b in self.blocks],
                "cut_vertices": sorted(self.cut_vertices),
            }
        )


def _block_key(vertices, edges):
    if edges:
        return min(edges)
    (v,) = vertices
    return (v, v)


def decompose_blocks(g: LabeledGraph) -> BlockDecomposition:
    """Edge-stack depth-first decomposition, iterative to survive deep graphs.

    Blocks are ordered by their smallest edge; an isolated vertex ``v`` sorts as ``(v, v)``.
    """
    n = g.n
    adj = g.adjacency
    disc = [0] * (n + 1)
    low = [0] * (n + 1)
    clock = 1
    found: list[tuple[frozenset[int], frozenset[Edge]]] = []

    for root in range(1, n + 1):
        if disc[root]:
            continue
        disc[root] = low[root] = clock
        clock += 1
        if not adj[root]:
            found.append((frozenset([root]), frozenset()))
            continue
        edge_stack: list[Edge] = []
        stack = [(root, 0, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if w == parent:
                    continue
                if not disc[w]:
                    disc[w] = low[w] = clock
                    clock += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(adj[w])))
                    descended = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if descended:
                continue
            stack.pop()
            if not stack:
                break
            u = stack[-1][0]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                verts: set[int] = set()
                es: set[Edge] = set()
                while True:
                    a, b = edge_stack.pop()
                    verts.add(a)
                    verts.add(b)
                    es.add((a, b) if a < b else (b, a))
                    if a == u and b == v:
                        break
                found.append((frozenset(verts), frozenset(es)))

    found.sort(key=lambda be: _block_key(*be))
    count = [0] * (n + 1)
    for verts, _ in found:
        for v in verts:
            count[v] += 1
    cut = frozenset(v for v in range(1, n + 1) if count[v] > 1)
    return BlockDecomposition(
        n=n,
        blocks=tuple(b for b, _ in found),
        block_edges=tuple(e for _, e in found),
        cut_vertices=cut,
    )


@dataclass(frozen=True)
class BlockForest:
    """Bipartite vertex/block incidence forest.

    Nodes are integers: ``x_v`` is ``v - 1`` and ``y_b`` (0-based block index) is ``n + b``.
    """

    n: int
    num_blocks: int
    adjacency: tuple[tuple[int, ...], ...]

    def x(self, v: int) -> int:
        return v - 1

    def y(self, b: int) -> int:
        return self.n + b

    def is_block_node(self, node: int) -> bool:
        return node >= self.n

    def label(self, node: int) -> tuple[str, int]:
        return ("y", node - self.n) if node >= self.n else ("x", node + 1)

    @property
    def num_nodes(self) -> int:
        return self.n + self.num_blocks

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a, nbrs in enumerate(self.adjacency) for b in nbrs if a < b]


def block_forest(g: LabeledGraph, decomposition: BlockDecomposition | None = None) -> BlockForest:
    dec = decomposition or decompose_blocks(g)
    n = g.n
    adj: list[list[int]] = [[] for _ in range(n + len(dec.blocks))]
    for b, verts in enumerate(dec.blocks):
        for v in sorted(verts):
            adj[v - 1].append(n + b)
            adj[n + b].append(v - 1)
    return BlockForest(n, len(dec.blocks), tuple(tuple(a) for a in adj))


def block_degree_sequence(g: LabeledGraph) -> tuple[int, ...]:
    """Number of blocks containing each vertex, as a tuple indexed by ``v - 1``."""
    count = [0] * g.n
    for verts in decompose_blocks(g).blocks:
        for v in verts:
            count[v - 1] += 1
    return tuple(count)


def max_block_degree(g: LabeledGraph) -> int:
    return max(block_degree_sequence(g))


def _bfs_far(adj, source: int, dist: list[int]) -> tuple[int, int, list[int]]:
    """Farthest node from ``source``; ``dist`` must be all -1 on entry for the component."""
    dist[source] = 0
    queue = deque([source])
    seen = [source]
    far = source
    while queue:
        v = queue.popleft()
        dv = dist[v]
        if dv > dist[far]:
            far = v
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dv + 1
                queue.append(w)
                seen.append(w)
    return far, dist[far], seen


def forest_component_diameters(adj) -> list[tuple[int, int]]:
    """(diameter, start node) for each tree of a forest given by adjacency lists.

    Double traversal: the farthest node from any start is an endpoint of a longest path.
    """
    size = len(adj)
    mark = [-1] * size
    scratch = [-1] * size
    out = []
    for s in range(size):
        if mark[s] >= 0:
            continue
        far, _, seen = _bfs_far(adj, s, mark)
        _, diam, seen2 = _bfs_far(adj, far, scratch)
        for v in seen2:
            scratch[v] = -1
        out.append((diam, s))
    return out


def btf_diameter(g: LabeledGraph) -> int:
    forest = block_forest(g)
    return max(d for d, _ in forest_component_diameters(forest.adjacency))


def max_blocks_on_path(g: LabeledGraph) -> int:
    """Largest number of distinct blocks met by the edges of one simple path of ``g``.

    Inside a block any two distinct vertices are joined by a path using only that
    block's edges, so this is the largest number of y-nodes on a block-forest path
    between two x-nodes. Leaves of a tree with an edge are all x-nodes, so that
    equals half the tree's diameter; isolated vertices contribute nothing.
    """
    forest = block_forest(g)
    best = 0
    for diam, _ in forest_component_diameters(forest.adjacency):
        # an isolated vertex gives the 2-node tree x-y with diameter 1
        if diam >= 2:
            best = max(best, diam // 2)
    return best


def in_q(g: LabeledGraph, t: int) -> bool:
    """Membership in the class of graphs with a path whose edges meet at least ``t`` blocks."""
    return max_blocks_on_path(g) >= t
