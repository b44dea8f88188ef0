"""Dynamic minimum-cut queries on a fully dynamic simple graph."""

from .engine import DynamicNmc
from .errors import (BudgetError, CycleError, DegenerateInputError, DisconnectedError,
                     DuplicateEdgeError, EmptyAdjacencyError, EmptyListError, GraphError,
                     SelfLoopError, SizeLimitError, StaleHandleError, UnknownEdgeError)
from .eulertour import EulerTourForest
from .forests import DcsStructure, DsfStructure
from .graph import DynamicSimpleGraph, Edge
from .kedge import (KSubgraphPartition, maximal_k_edge_connected,
                    maximal_k_edge_connected_multigraph, multigraph_to_simple_gadget)
from .linkcut import LinkCutForest
from .mincut import Cut, CutFamily, enumerate_min_cuts, min_cut_exact, min_cut_report, min_cuts_of_graph
from .msf import DynMsf
from .multigraph import Multigraph
from .sampler import SampledList
from .sparsifier import (SparsifierOutput, SparsifierParams, build_nmc_per_component,
                         build_nmc_sparsifier)

__version__ = "0.1.0"

__all__ = [
    "BudgetError", "CycleError", "Cut", "CutFamily", "DcsStructure", "DegenerateInputError",
    "DisconnectedError", "DsfStructure", "DuplicateEdgeError", "DynMsf", "DynamicNmc",
    "DynamicSimpleGraph", "Edge", "EmptyAdjacencyError", "EmptyListError", "EulerTourForest",
    "GraphError", "KSubgraphPartition", "LinkCutForest", "Multigraph", "SampledList",
    "SelfLoopError", "SizeLimitError", "SparsifierOutput", "SparsifierParams",
    "StaleHandleError", "UnknownEdgeError", "build_nmc_per_component", "build_nmc_sparsifier",
    "enumerate_min_cuts", "maximal_k_edge_connected", "maximal_k_edge_connected_multigraph",
    "min_cut_exact", "min_cut_report", "min_cuts_of_graph", "multigraph_to_simple_gadget",
]
