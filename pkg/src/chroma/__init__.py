"""Minimum-edge graphs for colour clusters and their chromatic Zagreb indices."""

from .chromatic import chromatic_number_exact, colour_weights, is_proper
from .cluster import (
    ColourCluster,
    ColouredGraph,
    PermutationMap,
    apply_colour_map,
    canonicalize,
    parse_cluster,
)
from .embodiment import (
    EmbodimentKind,
    complete_embodiment,
    embody,
    has_rainbow_connected_subgraph,
    multipartite_max,
    null_embodiment,
    odd_cycle_embodiment,
    path_embodiment,
    path_type_tree,
    thorn_embodiment,
    type1_tree,
    type2_tree,
)
from .errors import ChromaError, InstanceTooLarge
from .formulas import FormulaId, compare, evaluate_formula, oracle_value
from .graph import Graph, VertexLabel, add_edges, graph_stats, v
from .sequences import SequenceKind, fibonacci, sequence_cluster
from .suite import DiscrepancyReport, SuiteConfig, run_suite
from .zagreb import (
    ChromaticIndices,
    ZagrebExtrema,
    chromatic_indices,
    classical_indices,
    extremal_indices,
    heuristic_map,
)

__version__ = "0.1.0"
