"""Lexicographic breadth-first search and LBFS end-vertex tools.

The LBFS kernel is compiled with Cython when the extension is built and
falls back to pure Python otherwise; ``lexsearch.BACKEND`` names the one in
use.
"""

from ._kernels import BACKEND
from .endvertex import (
    EndVertexVerdict,
    NecessaryConditions,
    decide_end_vertex_atfree_bigraph,
    decide_end_vertex_oracle,
    end_vertex_set_atfree_bigraph,
    necessary_conditions_report,
)
from .errors import (
    AsteroidalTripleError,
    CapExceededError,
    DimacsError,
    DisconnectedGraphError,
    GraphInputError,
    LexsearchError,
    NotBipartiteError,
    OrderingError,
    ReductionError,
)
from .gadgets import (
    ReductionArtifact,
    build_G,
    build_G_from_sat,
    build_H,
    extract_assignment,
    reduce_bev_to_ev,
)
from .graph import (
    ComponentPartition,
    Graph,
    LayerStructure,
    bfs_layers,
    bipartition,
    build_graph,
    components_minus_closed_neighborhood,
    deep_components,
    diameter,
    eccentric_vertices,
    eccentricity,
    find_odd_cycle,
    is_connected,
)
from .lbfs import (
    Ordering,
    TiePolicy,
    end_vertex_set_oracle,
    end_vertices_from,
    enumerate_lbfs_orderings,
    is_beginning_end_pair_oracle,
    lbfs,
    tracked_visit_orders,
    verify_lbfs_ordering,
)
from .sat import SatInstance, brute_force_sat, parse_dimacs
from .structure import (
    find_asteroidal_triple,
    is_admissible,
    is_dominating_pair,
    is_proper_interval_bigraph,
    is_unrelated_pair,
)

__version__ = "0.1.0"
