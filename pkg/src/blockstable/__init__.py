"""Block decompositions, explosions and extended Prufer coding for block-stable graph classes."""

from .blocks import (
    BlockDecomposition,
    BlockForest,
    block_degree_sequence,
    block_forest,
    btf_diameter,
    decompose_blocks,
    max_blocks_on_path,
)
from .codec import count_with_tree, decode_extended, encode_extended, sample_neighborhood_uniform
from .explosion import ExplodedGraph, ExplosionNeighborhood, contract, descriptor_of, explode, skeleton_tree
from .graph import LabeledGraph, VertexPartition, components, is_connected, parse_graph, serialize_graph
from .prufer import Tree, WeightModel, prufer_decode, prufer_encode, sample_uniform_tree, sample_weighted_tree

__version__ = "0.1.0"
