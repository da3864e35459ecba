"""Dual clique cover (DCC) graph representations: construction, algorithms, encoding."""
from .algorithms import (INF, DisconnectedGraphError, UnionFind, bfs, bfs_forest,
                         connected_components, densest_subgraph_2approx, dfs_forest,
                         eccentricity_sweep, ff_complement_coloring_dcc, first_fit_coloring,
                         k_core_decomposition, maximal_clique, maximal_independent_set,
                         maximal_matching)
from .constructors import (CONSTRUCTORS, AdmissibilityState, ColorClasses,
                           ff_complement_color_classes, global_admissibility, local_admissibility,
                           local_peeling, lovasz_peeling, succinct_peeling)
from .cover import (CliqueCover, CoverStats, Dcc, IncidenceDual, adjacency_query, cover_from_dual,
                    cover_stats, dual_from_cover, is_assignment_minimal, is_composition_minimal,
                    is_inclusion_minimal, is_support_minimal, make_assignment_minimal,
                    neighborhood_query, read_cover, validate_cover, write_cover)
from .encoding import (EncodedCover, decode_clique, decode_cover, encode_cover, read_encoded,
                       write_encoded)
from .graph import (DegeneracyOrdering, Graph, GraphStats, backward_neighborhoods,
                    degeneracy_ordering, graph_stats, load_graph, save_graph)

__version__ = "0.1.0"
