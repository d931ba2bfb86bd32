"""Prufer coding of labeled trees, uniform and weighted random trees, tree distances.

Leaves are always removed smallest label first. Codewords are tuples of ints.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

Codeword = tuple[int, ...]


@dataclass(frozen=True)
class Tree:
    m: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        normed = frozenset((u, v) if u < v else (v, u) for u, v in self.edges)
        object.__setattr__(self, "edges", normed)
        if self.m < 1:
            raise ValueError("a tree needs at least one node")
        if len(normed) != self.m - 1:
            raise ValueError(f"a tree on {self.m} nodes has {self.m - 1} edges, got {len(normed)}")
        for u, v in normed:
            if u == v or not (1 <= u <= self.m and 1 <= v <= self.m):
                raise ValueError(f"bad tree edge ({u}, {v})")
        # m - 1 edges plus connectivity rules out cycles
        if self.m > 1 and -1 in bfs_distances(self.adjacency, 1)[1:]:
            raise ValueError("edges do not form a connected tree")

    @cached_property
    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.m + 1)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(self.adjacency[v]) for v in range(1, self.m + 1))


@dataclass(frozen=True)
class WeightModel:
    """Positive weights ``w_1..w_m``; a symbol ``j`` is drawn with probability ``w_j / sum(w)``."""

    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        if not self.weights or any(w <= 0 for w in self.weights):
            raise ValueError(f"weights must be positive, got {self.weights}")

    @property
    def m(self) -> int:
        return len(self.weights)

    @property
    def total(self):
        return sum(self.weights)

    @property
    def is_integral(self) -> bool:
        return all(isinstance(w, (int, np.integer)) for w in self.weights)


def appearances(word: Sequence[int], alphabet: int) -> list[int]:
    """``a(j, word)`` for ``j = 1..alphabet``, as a list indexed by ``j - 1``."""
    counts = [0] * alphabet
    for x in word:
        counts[x - 1] += 1
    return counts


def _check_word(word: Sequence[int], m: int) -> None:
    if m < 2:
        raise ValueError(f"Prufer words need m >= 2, got m={m}")
    if len(word) != m - 2:
        raise ValueError(f"word over [{m}] must have length {m - 2}, got {len(word)}")
    for x in word:
        if not 1 <= x <= m:
            raise ValueError(f"symbol {x} outside [1, {m}]")


def prufer_encode_with_order(tree: Tree) -> tuple[Codeword, tuple[int, ...]]:
    """Prufer word of ``tree`` together with the labels of the removed leaves, in order."""
    m = tree.m
    if m < 2:
        raise ValueError("cannot encode a tree with fewer than two nodes")
    adj = tree.adjacency
    # rooted at m, the remaining neighbour of a removed leaf is its parent
    parent = [0] * (m + 1)
    parent[m] = -1
    queue = deque([m])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if parent[w] == 0 and w != m:
                parent[w] = v
                queue.append(w)
    degree = [len(a) for a in adj]
    word = []
    removed = []
    ptr = 1
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for _ in range(m - 2):
        v = parent[leaf]
        word.append(v)
        removed.append(leaf)
        degree[v] -= 1
        if degree[v] == 1 and v < ptr:
            leaf = v
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    return tuple(word), tuple(removed)


def prufer_encode(tree: Tree) -> Codeword:
    return prufer_encode_with_order(tree)[0]


def prufer_decode_steps(word: Sequence[int], m: int) -> tuple[list[tuple[int, int]], tuple[int, int]]:
    """Replay the decoding of ``word``.

    Returns the ``(leaf, neighbour)`` pair removed at each step and the final
    surviving pair ``(a, m)``. Node ``m`` is never removed.
    """
    _check_word(word, m)
    degree = [1] * (m + 1)
    for x in word:
        degree[x] += 1
    ptr = 1
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    steps = []
    for x in word:
        steps.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    if leaf == m:
        raise AssertionError("node m was selected as a leaf")
    return steps, (leaf, m)


def prufer_decode(word: Sequence[int], m: int) -> Tree:
    if m == 1 and not word:
        return Tree(1)
    steps, final = prufer_decode_steps(word, m)
    steps.append(final)
    return Tree(m, frozenset(steps))


def sample_uniform_tree(m: int, rng: np.random.Generator) -> Tree:
    if m <= 2:
        return prufer_decode((), m)
    word = rng.integers(1, m + 1, size=m - 2)
    return prufer_decode(word.tolist(), m)


def sample_weighted_word(wm: WeightModel, length: int, rng: np.random.Generator) -> Codeword:
    """I.i.d. symbols with ``P(j) = w_j / sum(w)`` by inversion of the cumulative weights.

    Integer weights are inverted exactly against a uniform integer in ``[0, sum(w))``.
    """
    if length == 0:
        return ()
    cum = np.cumsum(np.asarray(wm.weights, dtype=np.int64 if wm.is_integral else float))
    if wm.is_integral:
        u = rng.integers(0, int(cum[-1]), size=length)
    else:
        u = rng.random(size=length) * cum[-1]
    idx = np.searchsorted(cum, u, side="right")
    return tuple(int(i) + 1 for i in idx)


def sample_weighted_tree(wm: WeightModel, rng: np.random.Generator) -> Tree:
    if wm.m < 2:
        raise ValueError("weighted trees need m >= 2")
    return prufer_decode(sample_weighted_word(wm, wm.m - 2, rng), wm.m)


def bfs_distances(adj, source: int) -> list[int]:
    """Distances from ``source`` (``-1`` when unreachable); index 0 unused for 1-based adjacency."""
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def tree_distance(tree: Tree, i: int, j: int) -> int:
    for v in (i, j):
        if not 1 <= v <= tree.m:
            raise ValueError(f"node {v} outside [1, {tree.m}]")
    return bfs_distances(tree.adjacency, i)[j]


def tree_diameter(tree: Tree) -> int:
    if tree.m == 1:
        return 0
    d = bfs_distances(tree.adjacency, 1)
    far = max(range(1, tree.m + 1), key=d.__getitem__)
    return max(bfs_distances(tree.adjacency, far)[1:])


def format_codeword(word: Sequence[int]) -> str:
    return " ".join(str(x) for x in word)


def parse_codeword(text: str, alphabet: int | None = None) -> Codeword:
    try:
        word = tuple(int(tok) for tok in text.split())
    except ValueError:
        raise ValueError(f"codeword must be space-separated integers, got {text!r}") from None
    if alphabet is not None:
        for x in word:
            if not 1 <= x <= alphabet:
                raise ValueError(f"symbol {x} outside [1, {alphabet}]")
    return word
