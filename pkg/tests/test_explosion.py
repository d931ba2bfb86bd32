import networkx as nx
import pytest
from hypothesis import given, settings

from blockstable.blocks import decompose_blocks, max_blocks_on_path
from blockstable.explosion import (
    DisconnectedGraphError,
    ExplosionNeighborhood,
    InvalidExplosionError,
    component_neighborhoods,
    contract,
    descriptor_of,
    explode,
    exploded_from_attachments,
    neighborhood_of,
    skeleton_tree,
)
from blockstable.graph import LabeledGraph, cycle_graph, path_graph
from blockstable.oracle import connected_multiblock_graphs, two_paths_graph
from blockstable.prufer import tree_diameter

from conftest import connected_graphs


def test_pendant_triangle_explosion(tri):
    x = explode(tri)
    assert x.k == 3
    assert x.parts == (frozenset({1, 6}), frozenset({2, 7}), frozenset({3, 4, 8}), frozenset({5}))
    assert x.attachment_edges == ((6, 2), (7, 5), (8, 2))
    d = neighborhood_of(x)
    assert d.f == (1, 2, 3, 3, 4)
    assert d.weights == (1, 1, 2, 1)
    assert d.size == 25
    assert skeleton_tree(x).edges == frozenset({(1, 2), (2, 3), (2, 4)})


def test_triangle_single_block():
    x = explode(cycle_graph(3))
    assert x.k == 1
    assert x.attachment_edges == ((4, 3),)
    assert descriptor_of(cycle_graph(3)).weights == (2, 1)


def test_single_vertex():
    x = explode(LabeledGraph(1))
    assert x.k == 1
    assert contract(x) == LabeledGraph(1)


def test_disconnected_rejected():
    with pytest.raises(DisconnectedGraphError):
        explode(two_paths_graph())


def test_exploded_graph_structure(tri):
    x = explode(tri)
    h = x.as_graph()
    assert h.n == 8
    g = nx.Graph(list(h.edges))
    g.add_nodes_from(range(1, 9))
    bridges = {tuple(sorted(e)) for e in nx.bridges(g)}
    for gh, v in x.attachment_edges:
        assert (min(gh, v), max(gh, v)) in bridges
    g.remove_edges_from(x.attachment_edges)
    assert {frozenset(c) for c in nx.connected_components(g)} == set(x.parts)


def test_roundtrip_exhaustive_small():
    for n in range(2, 6):
        for g in connected_multiblock_graphs(n):
            assert contract(explode(g)) == g


@settings(max_examples=200)
@given(connected_graphs(max_n=7))
def test_roundtrip_random(g):
    x = explode(g)
    assert contract(x) == g
    d = neighborhood_of(x)
    assert sum(d.weights) == g.n
    assert x.k == len(decompose_blocks(g))
    # a path meeting t + 1 blocks forces a skeleton path of length t
    assert max_blocks_on_path(g) - 1 <= tree_diameter(skeleton_tree(x))


def test_descriptor_json_roundtrip(tri):
    d = descriptor_of(tri)
    assert ExplosionNeighborhood.from_json(d.to_json()) == d
    wrapped = {"descriptor": d.to_dict(), "skeleton_tree": []}
    assert ExplosionNeighborhood.from_dict(wrapped) == d


def test_descriptor_validation(tri):
    data = descriptor_of(tri).to_dict()
    data["parts"][0]["ghost"] = 99
    with pytest.raises(InvalidExplosionError):
        ExplosionNeighborhood.from_dict(data)
    data = descriptor_of(tri).to_dict()
    data["weights"] = [1, 1, 1, 2]
    with pytest.raises(InvalidExplosionError):
        ExplosionNeighborhood.from_dict(data)


def test_contract_rejects_bad_attachments(tri):
    d = descriptor_of(tri)
    # parts {1} and {2} hung on each other: both bridges become the edge 1-2
    with pytest.raises(InvalidExplosionError, match="parallel"):
        contract(exploded_from_attachments(d, [2, 1, 5]))
    with pytest.raises(InvalidExplosionError, match="own part"):
        contract(exploded_from_attachments(d, [2, 5, 3]))


def test_component_neighborhoods():
    comps = component_neighborhoods(two_paths_graph())
    assert [c.labels for c in comps] == [(1, 2, 3), (4, 5, 6)]
    assert all(c.descriptor.k == 2 for c in comps)


def test_path_descriptor():
    d = descriptor_of(path_graph(5))
    assert d.weights == (1, 1, 1, 1, 1)
    assert d.size == 125
