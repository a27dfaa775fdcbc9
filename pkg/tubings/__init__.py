"""tubings - tubings of graphs and the algebra built on them.

Tubings of a connected graph index the faces of its graph associahedron. This
package enumerates them, substitutes tubings into tubes, computes the signed
boundary and the pre-Lie coproduct, builds the trialgebra of disconnected
tubings, models the operadic category of tubings, and checks every identity
of that calculus by brute force on small graphs.

Basic usage:
    from tubings import complete, enumerate_tubings, boundary

    T = enumerate_tubings(complete(3))[-1]
    chain = boundary(T)

    # Run the CLI
    exit_code = main()
"""

__version__ = "1.0.0"

# Exceptions
from tubings.errors import CapExceededError, InputError, PreconditionError, TubingError

# Shared types
from tubings.types import AxiomResult, CaseFailure, DTubOp, PairClass, SuiteName

# Graphs and node sets
from tubings.graph import (
    FAMILIES,
    MAX_NODES,
    Embedding,
    Graph,
    NodeSet,
    all_tubes,
    complete,
    cycle,
    disjoint_union,
    edgeless,
    is_tube,
    iterated_complement,
    linear,
    nodes_of,
    nodeset,
    reconnected_complement,
)

# Tubings
from tubings.tubing import (
    EMPTY_TUBING,
    ENUMERATION_CAP,
    Tubing,
    classify_pair,
    compatible,
    complement_by_maximal,
    covers,
    enumerate_tubings,
    f_vector,
    from_surjection,
    induce_on_complement,
    is_tubing,
    make_tubing,
    numbered_tubes,
    poset_leq,
    restrict_to_tube,
    restriction_map,
    to_surjection,
    trivial_tubing,
    tubing_count,
)
from tubings.topology import (
    TOPOLOGY_CAP,
    generated_topology,
    is_topological_basis,
    satisfies_connectivity_condition,
    tubing_iff_basis_check,
)

# Substitution
from tubings.substitution import (
    LabeledTubing,
    gamma,
    gamma_full,
    gamma_t,
    generator_decomposition,
    replay_generators,
    tilde_closure,
)

# Chains, signs, boundary and coproduct
from tubings.chains import (
    CoproductChain,
    TubingChain,
    alpha,
    boundary,
    boundary_chain,
    boundary_recursive,
    circ_signed,
    coassociator,
    decompose,
    graph_signature,
    prelie_coproduct,
    sigma_t,
)
from tubings.relations import (
    circ_relation_check,
    d2_check,
    leibniz_independence_check,
    ns_operad_relation_check,
    permutad_relation_check,
    prelie_identity_check,
    signature_cocycle_report,
)

# Disconnected tubings
from tubings.dtub import (
    Component,
    DChain,
    DTubing,
    apply_op,
    canonical_decompose,
    dashv,
    differential,
    evaluate,
    generator,
    l_left,
    l_perp,
    l_right,
    simplex_faces,
    times,
    trias_relation_check,
    vdash,
)

# Operadic category
from tubings.opcat import (
    OcdMorphism,
    OcdObject,
    axiom_suite,
    cardinality_of_morphism,
    fiber,
    fiber_morphism,
    tube_numbering,
)

# Census, serialization, suites
from tubings.census import CENSUS_CAP, TubingCache, census_counts, graph_census
from tubings.serialization import (
    decode_chain,
    decode_dtubing,
    decode_graph,
    decode_tubing,
    encode_chain,
    encode_coproduct,
    encode_dtubing,
    encode_graph,
    encode_tubing,
)
from tubings.suites import SuiteOptions, VerificationReport, run_suite

# CLI
from tubings.cli import main

__all__ = [
    "__version__",
    # Exceptions
    "TubingError",
    "InputError",
    "PreconditionError",
    "CapExceededError",
    # Types
    "AxiomResult",
    "CaseFailure",
    "DTubOp",
    "PairClass",
    "SuiteName",
    # Graphs
    "FAMILIES",
    "MAX_NODES",
    "Embedding",
    "Graph",
    "NodeSet",
    "all_tubes",
    "complete",
    "cycle",
    "disjoint_union",
    "edgeless",
    "is_tube",
    "iterated_complement",
    "linear",
    "nodes_of",
    "nodeset",
    "reconnected_complement",
    # Tubings
    "EMPTY_TUBING",
    "ENUMERATION_CAP",
    "Tubing",
    "classify_pair",
    "compatible",
    "complement_by_maximal",
    "covers",
    "enumerate_tubings",
    "f_vector",
    "from_surjection",
    "induce_on_complement",
    "is_tubing",
    "make_tubing",
    "numbered_tubes",
    "poset_leq",
    "restrict_to_tube",
    "restriction_map",
    "to_surjection",
    "trivial_tubing",
    "tubing_count",
    "TOPOLOGY_CAP",
    "generated_topology",
    "is_topological_basis",
    "satisfies_connectivity_condition",
    "tubing_iff_basis_check",
    # Substitution
    "LabeledTubing",
    "gamma",
    "gamma_full",
    "gamma_t",
    "generator_decomposition",
    "replay_generators",
    "tilde_closure",
    # Chains
    "CoproductChain",
    "TubingChain",
    "alpha",
    "boundary",
    "boundary_chain",
    "boundary_recursive",
    "circ_signed",
    "coassociator",
    "decompose",
    "graph_signature",
    "prelie_coproduct",
    "sigma_t",
    "circ_relation_check",
    "d2_check",
    "leibniz_independence_check",
    "ns_operad_relation_check",
    "permutad_relation_check",
    "prelie_identity_check",
    "signature_cocycle_report",
    # Disconnected tubings
    "Component",
    "DChain",
    "DTubing",
    "apply_op",
    "canonical_decompose",
    "dashv",
    "differential",
    "evaluate",
    "generator",
    "l_left",
    "l_perp",
    "l_right",
    "simplex_faces",
    "times",
    "trias_relation_check",
    "vdash",
    # Operadic category
    "OcdMorphism",
    "OcdObject",
    "axiom_suite",
    "cardinality_of_morphism",
    "fiber",
    "fiber_morphism",
    "tube_numbering",
    # Census, serialization, suites
    "CENSUS_CAP",
    "TubingCache",
    "census_counts",
    "graph_census",
    "decode_chain",
    "decode_dtubing",
    "decode_graph",
    "decode_tubing",
    "encode_chain",
    "encode_coproduct",
    "encode_dtubing",
    "encode_graph",
    "encode_tubing",
    "SuiteOptions",
    "VerificationReport",
    "run_suite",
    # CLI
    "main",
]
