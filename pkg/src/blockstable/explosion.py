"""Exploding a connected graph into vertex-disjoint block copies joined by ghost bridges.

Rooted at vertex ``n``. Each block ``B`` gets an anchor ``v_B`` (``n`` itself when
``n`` is in ``B``, otherwise the cut vertex of ``B`` on the way to ``n``) and the
part ``Q_B = V(B) - {v_B}``. Blocks are numbered by increasing ``max(Q_B)``. Part
``i`` holds ``Q_i`` plus a ghost ``g_i = n + i`` standing in for the anchor; the
ghost is joined to the anchor by the only edge leaving the part. Part ``k + 1``
is ``{n}``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .blocks import block_forest, decompose_blocks
from .graph import Edge, LabeledGraph, components, induced_relabeled, is_connected
from .prufer import Tree


class DisconnectedGraphError(ValueError):
    pass


class InvalidExplosionError(ValueError):
    pass


@dataclass(frozen=True)
class PartTemplate:
    """One non-root part: the labeled block copy on ``members | {ghost}``."""

    members: tuple[int, ...]
    ghost: int
    edges: frozenset[Edge]


@dataclass(frozen=True)
class ExplodedGraph:
    base_n: int
    k: int
    parts: tuple[frozenset[int], ...]
    within_part_edges: frozenset[Edge]
    attachment_edges: tuple[tuple[int, int], ...]

    @property
    def num_vertices(self) -> int:
        return self.base_n + self.k

    @cached_property
    def part_of(self) -> dict[int, int]:
        return {v: i + 1 for i, part in enumerate(self.parts) for v in part}

    def as_graph(self) -> LabeledGraph:
        """The exploded graph itself, ghosts labeled ``n + 1 .. n + k``."""
        return LabeledGraph.from_edges(
            self.num_vertices, list(self.within_part_edges) + list(self.attachment_edges)
        )


@dataclass(frozen=True)
class ExplosionNeighborhood:
    """Everything shared by the graphs of one explosion neighbourhood.

    ``f[v - 1]`` is the part containing vertex ``v``; ``weights[j - 1] = |Q_j|`` with
    the root weight 1.
    """

    n: int
    k: int
    parts: tuple[PartTemplate, ...]
    f: tuple[int, ...]
    weights: tuple[int, ...]

    @property
    def size(self) -> int:
        """Number of graphs in the neighbourhood, ``n ** (k - 1)``."""
        return self.n ** (self.k - 1) if self.k >= 1 else 1

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "parts": [
                {"members": list(p.members), "ghost": p.ghost, "edges": [list(e) for e in sorted(p.edges)]}
                for p in self.parts
            ],
            "f": list(self.f),
            "weights": list(self.weights),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "ExplosionNeighborhood":
        if "descriptor" in data:
            data = data["descriptor"]
        n, k = int(data["n"]), int(data["k"])
        parts = tuple(
            PartTemplate(
                members=tuple(int(v) for v in p["members"]),
                ghost=int(p["ghost"]),
                edges=frozenset(tuple(sorted((int(a), int(b)))) for a, b in p["edges"]),
            )
            for p in data["parts"]
        )
        d = _assemble_descriptor(n, parts)
        if "f" in data and tuple(data["f"]) != d.f:
            raise InvalidExplosionError("descriptor map f disagrees with its parts")
        if "weights" in data and tuple(data["weights"]) != d.weights:
            raise InvalidExplosionError("descriptor weights disagree with its parts")
        if k != d.k:
            raise InvalidExplosionError(f"descriptor says k={k} but lists {d.k} parts")
        return d

    @classmethod
    def from_json(cls, text: str) -> "ExplosionNeighborhood":
        return cls.from_dict(json.loads(text))


def _assemble_descriptor(n: int, parts: tuple[PartTemplate, ...]) -> ExplosionNeighborhood:
    k = len(parts)
    f = [0] * n
    for i, p in enumerate(parts, start=1):
        if p.ghost != n + i:
            raise InvalidExplosionError(f"part {i} ghost must be {n + i}, got {p.ghost}")
        allowed = set(p.members) | {p.ghost}
        for a, b in p.edges:
            if a not in allowed or b not in allowed:
                raise InvalidExplosionError(f"part {i} edge ({a}, {b}) leaves the part")
        for v in p.members:
            if not 1 <= v < n or f[v - 1]:
                raise InvalidExplosionError(f"vertex {v} misplaced in part {i}")
            f[v - 1] = i
    f[n - 1] = k + 1
    if 0 in f:
        raise InvalidExplosionError("parts do not cover [n - 1]")
    weights = tuple(len(p.members) for p in parts) + (1,)
    return ExplosionNeighborhood(n=n, k=k, parts=parts, f=tuple(f), weights=weights)


def _anchors(g: LabeledGraph, dec) -> list[int]:
    """Anchor ``v_B`` of every block: its parent x-node in the block tree rooted at ``x_n``."""
    forest = block_forest(g, dec)
    n = g.n
    root = forest.x(n)
    parent = [-1] * forest.num_nodes
    parent[root] = root
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in forest.adjacency[v]:
            if parent[w] < 0:
                parent[w] = v
                queue.append(w)
    anchors = []
    for b in range(len(dec.blocks)):
        node = forest.y(b)
        anchors.append(forest.label(parent[node])[1])
    return anchors


def explode(g: LabeledGraph) -> ExplodedGraph:
    if not is_connected(g):
        raise DisconnectedGraphError("explosion needs a connected graph; explode components separately")
    n = g.n
    dec = decompose_blocks(g)
    anchors = _anchors(g, dec)
    order = sorted(
        range(len(dec.blocks)),
        key=lambda b: max(dec.blocks[b] - {anchors[b]}, default=0),
    )
    k = len(order)
    parts = []
    within: set[Edge] = set()
    attachments = []
    for i, b in enumerate(order, start=1):
        ghost = n + i
        anchor = anchors[b]
        parts.append(frozenset(dec.blocks[b] - {anchor}) | {ghost})
        for u, v in dec.block_edges[b]:
            u = ghost if u == anchor else u
            v = ghost if v == anchor else v
            within.add((u, v) if u < v else (v, u))
        attachments.append((ghost, anchor))
    parts.append(frozenset([n]))
    return ExplodedGraph(
        base_n=n,
        k=k,
        parts=tuple(parts),
        within_part_edges=frozenset(within),
        attachment_edges=tuple(attachments),
    )


def skeleton_tree(x: ExplodedGraph) -> Tree:
    part_of = x.part_of
    edges = [(part_of[g], part_of[v]) for g, v in x.attachment_edges]
    return Tree(x.k + 1, frozenset(edges))


def contract(x: ExplodedGraph) -> LabeledGraph:
    n = x.base_n
    target: dict[int, int] = {}
    for g, v in x.attachment_edges:
        if not n < g <= n + x.k:
            raise InvalidExplosionError(f"attachment edge ({g}, {v}) does not start at a ghost")
        if g in target:
            raise InvalidExplosionError(f"ghost {g} has more than one attachment edge")
        if not 1 <= v <= n:
            raise InvalidExplosionError(f"ghost {g} attached to non-original vertex {v}")
        if x.part_of.get(v) == x.part_of.get(g):
            raise InvalidExplosionError(f"ghost {g} attached inside its own part")
        target[g] = v
    if len(target) != x.k:
        missing = sorted(set(range(n + 1, n + x.k + 1)) - set(target))
        raise InvalidExplosionError(f"ghosts without attachment edge: {missing}")
    edges = set()
    for u, v in x.within_part_edges:
        u = target.get(u, u)
        v = target.get(v, v)
        e = (u, v) if u < v else (v, u)
        if u == v or e in edges:
            raise InvalidExplosionError(f"contraction creates a loop or parallel edge at {e}")
        edges.add(e)
    return LabeledGraph(n, frozenset(edges))


def neighborhood_of(x: ExplodedGraph) -> ExplosionNeighborhood:
    n = x.base_n
    by_part: list[list[Edge]] = [[] for _ in range(x.k)]
    part_of = x.part_of
    for e in x.within_part_edges:
        by_part[part_of[e[0]] - 1].append(e)
    templates = []
    for i in range(1, x.k + 1):
        ghost = n + i
        members = tuple(sorted(x.parts[i - 1] - {ghost}))
        templates.append(PartTemplate(members, ghost, frozenset(by_part[i - 1])))
    return _assemble_descriptor(n, tuple(templates))


def descriptor_of(g: LabeledGraph) -> ExplosionNeighborhood:
    return neighborhood_of(explode(g))


def exploded_from_attachments(d: ExplosionNeighborhood, anchors: Sequence[int]) -> ExplodedGraph:
    """Rebuild the exploded graph of the neighbourhood member whose ghost ``g_i`` hangs on ``anchors[i-1]``."""
    if len(anchors) != d.k:
        raise InvalidExplosionError(f"need {d.k} anchors, got {len(anchors)}")
    within = frozenset(e for p in d.parts for e in p.edges)
    parts = tuple(frozenset(p.members) | {p.ghost} for p in d.parts) + (frozenset([d.n]),)
    return ExplodedGraph(
        base_n=d.n,
        k=d.k,
        parts=parts,
        within_part_edges=within,
        attachment_edges=tuple((p.ghost, a) for p, a in zip(d.parts, anchors)),
    )


@dataclass(frozen=True)
class ComponentNeighborhood:
    """Descriptor of one component, relabeled onto ``[len(labels)]`` order-preservingly.

    Vertex ``i`` of the descriptor is ``labels[i - 1]`` of the host graph, so the
    component root is its largest label.
    """

    labels: tuple[int, ...]
    descriptor: ExplosionNeighborhood


def component_neighborhoods(g: LabeledGraph) -> list[ComponentNeighborhood]:
    out = []
    for part in components(g):
        sub, labels = induced_relabeled(g, part)
        out.append(ComponentNeighborhood(labels, descriptor_of(sub)))
    return out
