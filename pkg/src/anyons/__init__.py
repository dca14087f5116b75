"""Computational toolkit for anyonic topological quantum computation.

Submodules
----------
fusion            fusion rings, fusion trees, quantum dimensions, entropy
fsymbols          F/R symbol tables, pentagon/hexagon/unitarity residuals
braids            braid words and grammar, unitary representations, gate search
laurent           exact integer Laurent polynomials in quarter powers of t
knots             Kauffman bracket state sums and Jones polynomials
trace_estimation  Hadamard-test simulation of normalised traces
pauli             qudit Pauli strings with exact phase bookkeeping
toric             toric-code stabilizer engine and interferometer protocol
stringnet         Levin-Wen Fibonacci vertex and face operators
cli               command-line interface over all of the above
"""

from .braids import (
    BraidRep,
    BraidWord,
    abelian_rep,
    compile_gate,
    evaluate,
    fib_qubit_rep,
    format_braid,
    parse_braid,
    projective_distance,
    relation_residual,
    tl_b3_matrices,
    tl_b3_rep,
)
from .errors import (
    AnyonError,
    BraidSyntaxError,
    CompletenessError,
    InputError,
    InvariantViolation,
    NumericError,
    ResourceError,
)
from .fsymbols import (
    FSymbolTable,
    RSymbolTable,
    f_unitarity_residual,
    fibonacci_data,
    gauge_transform,
    hexagon_residual,
    pentagon_residual,
    su2k_admissible,
    trivial_data,
)
from .fusion import (
    AnyonModel,
    FusionTree,
    composite_fermion_statistics,
    enumerate_fusion_trees,
    fibonacci_model,
    fuse,
    fusion_space_dim,
    named_model,
    quantum_dimensions,
    toric_model,
    total_dimension_entropy,
    zd_model,
)
from .knots import (
    LinkDiagram,
    SmoothingState,
    bracket_tl_b3,
    closure,
    jones,
    kauffman_bracket,
    smoothing_loops,
    writhe,
)
from .laurent import LaurentPoly
from .pauli import PauliString, commutation_phase
from .stringnet import face_operator, face_term_checks, vertex_projector
from .toric import (
    Syndrome,
    TorusLattice,
    build_stabilizers,
    correct,
    dual_path_edges,
    dyon_braiding_phase,
    extract_mutual_statistics,
    ground_space_dim,
    ground_state,
    homology_class,
    honeycomb_effective_coupling,
    honeycomb_phase,
    interferometer_run,
    string_operator,
    syndrome,
    vertex_path_edges,
)
from .trace_estimation import (
    TraceEstimate,
    exact_normalized_trace,
    hadamard_test_trace,
)

__version__ = "0.1.0"
