"""Exact zero forcing, propagation time and throttling on small digraphs."""
from .digraph import (
    Digraph, UndirectedGraph, add_vertex, contract_arc, delete_vertex, disjoint_union, flip_arc,
    induced_subgraph, load_digraph, orientation, orientations_of, parse_edge_list, to_double_arc,
    transpose,
)
from .errors import (
    CapacityError, DomainError, ForceSetError, GraphError, NotForcingError, ParseError,
    PreconditionError, WitnessError,
)
from .families import FamilySpec, generate, host_graph
from .forcing import (
    NOT_FORCING, Force, ForceSet, propagate_greedy, pt_k, pt_min, pt_of_set, reverse, terminus,
    timeline_of_forces, zero_forcing_number,
)
from .throttling import OTIReport, merge_oti, oti, th, throttling_number
from .characterization import CharacterizationWitness, apply_witness, witness_for_throttling
from .closed_form import ClosedFormParams, closed_form
from .verifier import SuiteReport, run_suite, verify_alternating_conjecture

__version__ = "0.1.0"
