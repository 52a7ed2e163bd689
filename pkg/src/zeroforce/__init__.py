"""Exact failed zero forcing invariants and the independent-set gadget reduction."""

from .forcing import Mode, closure, forced_vertices, is_forcing_set, is_stalled
from .graph import Graph, GraphFormatError, VertexSet, is_connected, parse_graph, serialize_graph
from .reduction import (
    ReducedGraph,
    ReductionCertificate,
    build_witness,
    check_observation_3,
    check_observations_4_to_7,
    connectify,
    reduce,
    verify_theorem,
)
from .solvers import (
    BudgetExceeded,
    FailedResult,
    MisResult,
    decide_failed,
    failed_forcing_number,
    failed_forcing_number_bruteforce,
    max_independent_set,
)

__version__ = "0.1.0"
