"""Extended Prufer coding of an explosion neighbourhood by words in [n]^(k-1).

Decoding maps the word through ``f`` to a Prufer word over the parts, replays the
smallest-leaf removals, and hangs the ghost of each removed part on the recorded
original vertex. The last non-root part hangs on ``n``.
"""

from __future__ import annotations

from math import prod
from typing import Sequence

import numpy as np

from .explosion import (
    ExplosionNeighborhood,
    contract,
    explode,
    exploded_from_attachments,
    neighborhood_of,
    skeleton_tree,
)
from .graph import LabeledGraph, relabel, union
from .prufer import Codeword, Tree, prufer_decode_steps, prufer_encode_with_order


class DescriptorMismatchError(ValueError):
    """The graph does not belong to the given explosion neighbourhood."""


def _require_k(d: ExplosionNeighborhood) -> None:
    if d.k < 2:
        raise ValueError(f"extended codewords need at least two blocks, got k={d.k}")


def encode_extended(h: LabeledGraph, d: ExplosionNeighborhood) -> Codeword:
    _require_k(d)
    if h.n != d.n:
        raise DescriptorMismatchError(f"graph has {h.n} vertices, neighbourhood has {d.n}")
    x = explode(h)
    if neighborhood_of(x) != d:
        raise DescriptorMismatchError("graph is not in this explosion neighbourhood")
    _, removed = prufer_encode_with_order(skeleton_tree(x))
    anchor = {g: v for g, v in x.attachment_edges}
    return tuple(anchor[d.n + i] for i in removed)


def attachments_for(x: Sequence[int], d: ExplosionNeighborhood) -> list[int]:
    """Anchor of every ghost for the neighbourhood member coded by ``x``."""
    _require_k(d)
    n, k = d.n, d.k
    if len(x) != k - 1:
        raise ValueError(f"word must have length {k - 1}, got {len(x)}")
    for v in x:
        if not 1 <= v <= n:
            raise ValueError(f"symbol {v} outside [1, {n}]")
    t = [d.f[v - 1] for v in x]
    steps, (last, root) = prufer_decode_steps(t, k + 1)
    if root != k + 1 or last == k + 1:
        raise AssertionError("root part removed during decoding")
    anchors = [0] * k
    for s, (leaf, _) in enumerate(steps):
        anchors[leaf - 1] = x[s]
    # the root part is {n}, so the final ghost can only hang on n
    anchors[last - 1] = n
    return anchors


def decode_extended(x: Sequence[int], d: ExplosionNeighborhood) -> LabeledGraph:
    return contract(exploded_from_attachments(d, attachments_for(x, d)))


def decode_skeleton(x: Sequence[int], d: ExplosionNeighborhood) -> Tree:
    return skeleton_tree(exploded_from_attachments(d, attachments_for(x, d)))


def count_with_tree(d: ExplosionNeighborhood, t: Tree) -> int:
    """Members of the neighbourhood whose skeleton tree is ``t``: prod_j w_j^(deg_t(j) - 1)."""
    if t.m != d.k + 1:
        raise ValueError(f"skeleton trees live on [{d.k + 1}], got a tree on [{t.m}]")
    return prod(w ** (deg - 1) for w, deg in zip(d.weights, t.degrees()))


def unique_member(d: ExplosionNeighborhood) -> LabeledGraph:
    """The single graph of a neighbourhood with one block."""
    if d.k != 1:
        raise ValueError("only one-block neighbourhoods have a unique member")
    return contract(exploded_from_attachments(d, [d.n]))


def sample_word(d: ExplosionNeighborhood, rng: np.random.Generator) -> Codeword:
    if d.k < 2:
        return ()
    return tuple(rng.integers(1, d.n + 1, size=d.k - 1).tolist())


def sample_neighborhood_uniform(d: ExplosionNeighborhood, rng: np.random.Generator) -> LabeledGraph:
    if d.k == 1:
        return unique_member(d)
    return decode_extended(sample_word(d, rng), d)


def sample_components_uniform(
    n: int, comps, rng: np.random.Generator
) -> LabeledGraph:
    """Product sample over per-component neighbourhoods, assembled on [n]."""
    return union(
        n,
        (relabel(sample_neighborhood_uniform(c.descriptor, rng), c.labels, n) for c in comps),
    )
