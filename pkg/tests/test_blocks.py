import itertools

import networkx as nx
from hypothesis import given, settings

from blockstable.blocks import (
    block_degree_sequence,
    block_forest,
    btf_diameter,
    decompose_blocks,
    in_q,
    max_block_degree,
    max_blocks_on_path,
)
from blockstable.graph import LabeledGraph, components, cycle_graph, path_graph
from blockstable.oracle import all_graphs

from conftest import graphs


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(1, g.n + 1))
    h.add_edges_from(g.edges)
    return h


def _longest_block_path(g):
    """Most distinct blocks met by the edges of any simple path, by exhaustive DFS."""
    dec = decompose_blocks(g)
    owner = dec.block_of_edge
    adj = g.adjacency
    best = 0

    def walk(v, seen, used):
        nonlocal best
        best = max(best, len(used))
        for w in adj[v]:
            if w not in seen:
                e = (min(v, w), max(v, w))
                seen.add(w)
                walk(w, seen, used | {owner[e]})
                seen.discard(w)

    for s in range(1, g.n + 1):
        walk(s, {s}, frozenset())
    return best


def test_pendant_triangle_blocks(tri):
    dec = decompose_blocks(tri)
    assert [sorted(b) for b in dec.blocks] == [[1, 2], [2, 3, 4], [2, 5]]
    assert dec.cut_vertices == frozenset({2})
    assert block_degree_sequence(tri) == (1, 3, 1, 1, 1)
    assert max_block_degree(tri) == 3
    assert btf_diameter(tri) == 4
    assert max_blocks_on_path(tri) == 2


def test_triangle_is_one_block():
    g = cycle_graph(3)
    dec = decompose_blocks(g)
    assert len(dec) == 1 and not dec.cut_vertices
    assert btf_diameter(g) == 2
    assert max_blocks_on_path(g) == 1


def test_path_blocks():
    g = path_graph(5)
    dec = decompose_blocks(g)
    assert len(dec) == 4
    assert dec.cut_vertices == frozenset({2, 3, 4})
    assert max_blocks_on_path(g) == 4
    assert btf_diameter(g) == 8


def test_isolated_vertices():
    g = LabeledGraph(3)
    dec = decompose_blocks(g)
    assert [sorted(b) for b in dec.blocks] == [[1], [2], [3]]
    assert block_degree_sequence(g) == (1, 1, 1)
    assert max_blocks_on_path(g) == 0


def test_decompose_json(tri):
    assert decompose_blocks(tri).to_json() == '{"blocks": [[1, 2], [2, 3, 4], [2, 5]], "cut_vertices": [2]}'


@settings(max_examples=200)
@given(graphs(max_n=25))
def test_blocks_match_networkx(g):
    dec = decompose_blocks(g)
    ours = {frozenset(b) for b in dec.blocks if len(b) > 1}
    theirs = {frozenset(c) for c in nx.biconnected_components(_nx(g))}
    assert ours == theirs
    assert dec.cut_vertices == frozenset(nx.articulation_points(_nx(g)))
    # every edge is in exactly one block
    assert sorted(e for es in dec.block_edges for e in es) == g.sorted_edges()


@given(graphs(max_n=25))
def test_block_degree_sum(g):
    seq = block_degree_sequence(g)
    k = len(decompose_blocks(g))
    assert sum(d - 1 for d in seq) == k - len(components(g))


@given(graphs(max_n=25))
def test_forest_diameter_matches_bfs(g):
    forest = block_forest(g)
    h = nx.Graph()
    h.add_nodes_from(range(forest.num_nodes))
    h.add_edges_from(forest.edges())
    assert nx.is_forest(h)
    diam = max(nx.diameter(h.subgraph(c)) for c in nx.connected_components(h))
    assert btf_diameter(g) == diam


def test_max_blocks_exhaustive_small():
    for n in range(1, 6):
        for g in all_graphs(n):
            assert max_blocks_on_path(g) == _longest_block_path(g)


@settings(max_examples=150)
@given(graphs(min_n=6, max_n=7, max_extra=12))
def test_max_blocks_random_n7(g):
    assert max_blocks_on_path(g) == _longest_block_path(g)


@given(graphs(max_n=15))
def test_in_q_monotone(g):
    top = max_blocks_on_path(g)
    assert in_q(g, top)
    assert not in_q(g, top + 1)
    assert all(in_q(g, t) for t in range(top + 1))


def test_all_graphs_count():
    assert sum(1 for _ in all_graphs(4)) == 2 ** 6
    assert all(len(list(itertools.islice(all_graphs(n), 1))) == 1 for n in (1, 2))
