"""Low-diameter edge decompositions and covers of graphs and k-uniform hypergraphs."""

from .cover import EdgeCover, cover_diam5, cover_diam6, cover_sampling_diam3, maximal_scattered_set
from .decompose import (
    EdgePartition,
    best_pair_by_p3,
    decompose_diam3,
    decompose_diam4,
    decompose_hyper_diam3,
    decompose_stars,
    prune_to_diam2,
)
from .graph import (
    Graph,
    Subgraph,
    ball_subgraph,
    bfs_distances,
    bipartite_diam3_check,
    blow_up,
    diameter_of_edge_set,
    peel_min_degree,
    walk_subgraph,
)
from .hypergraph import (
    Hypergraph,
    count_labeled_copies,
    link_subhypergraph,
    make_pattern_Hk,
    make_pattern_K2k,
    tight_diameter,
    tight_distance,
)

__version__ = "0.1.0"
