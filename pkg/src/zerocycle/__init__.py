"""Zero-weight cycles in finite-abelian-group-weighted graphs.

Core surface: group arithmetic and the near-arithmetic-progression
classifier (``groups``), the weighted graph model and JSON codec
(``graphs``), exhaustive search oracles (``oracle``), constructive solvers
and extremal constructions (``solver``), the undirected configuration
reduction (``undirected``), and the experiment harness (``explorer``).
"""

from .errors import BudgetExceeded, CodecError, LemmaViolation
from .graphs import (
    CycleWitness,
    PathFamily,
    PathWitness,
    WeightedDigraph,
    WeightedGraph,
    complete_digraph,
    complete_graph,
    cycle_weight,
    derived_weighting,
    graph_from_doc,
    graph_to_doc,
    normalize_vertex_weights,
    parse_graph,
    path_weight,
    quotient_weighting,
    serialize_graph,
)
from .groups import (
    GroupSpec,
    NearAPClassification,
    ResidueSet,
    classify_near_ap,
    is_near_ap,
    near_ap_witness,
    omega,
    shift_set,
)
from .oracle import (
    HeavyTriple,
    SearchBudget,
    distinct_weight_paths,
    find_heavy_triple,
    find_zero_cycle,
    iter_simple_cycles,
    iter_simple_paths,
    mono_hamiltonian_path,
)
from .solver import (
    DominatingStructure,
    LemmaOneOutcome,
    build_extremal_digraph,
    build_extremal_undirected,
    dominating_order_hampath,
    lemma_one_solve,
    theorem_main_solve,
)
from .undirected import (
    CliquePair,
    ConfigA,
    ConfigB,
    ConfigC,
    ConfigD,
    clique_peel_step,
    detect_configuration,
    lemma_reduction_solve,
    theorem_undirected_solve,
    verify_configuration,
)

__version__ = "0.1.0"
