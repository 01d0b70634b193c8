"""Entanglement-assisted codeword-stabilized quantum codes: construction and verification."""
from .codefile import EacwsCode, load_code, save_code
from .graphs import (
    CodeParams,
    Graph,
    StabilizerSet,
    graph_from_edges,
    initial_generators,
    read_graph,
    ring_graph,
    standard_generators,
)
from .induction import InducedError, cl_map, enumerate_errors, induce_set
from .pauli import PauliOperator, commutes, multiply, parse_pauli, render_pauli, weight
from .pipeline import search_code, verify_eacws
from .search import ClassicalCode, build_compatibility, correction_diff_set, detects, max_clique
from .verify import basis_states, build_encoder, distance, kl_check, stabilizer_state
from .words import (
    CliffordMap,
    equiv_mod_stabilizer,
    pull_back,
    strip_bob,
    synthesize_clifford,
    word_operators,
)

__version__ = "0.1.0"
