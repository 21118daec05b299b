"""Extremal constructions and exact counts for maximal independent sets."""

__version__ = "0.1.0"

from .constructions import (
    Blowup,
    BlowupSpec,
    PackingGraph,
    behrend_set,
    blowup,
    blowup_spec_from_matching,
    c4_leaves_graph,
    comatching,
    disjoint_gadget_union,
    dominating_clique_graph,
    gadget,
    rs_packing,
    star_hypergraph,
    tight_cycle,
    tight_cycle_blowup,
    trivial_packing,
    window_hypergraph,
)
from .engine import (
    ReductionResult,
    TBoundCheck,
    check_k5_hypothesis,
    count_all_mis,
    count_k_mis,
    count_transversal_mis,
    enumerate_k_mis,
    greedy_mis_partition,
    hypergraph_count_k_mis,
    hypergraph_enumerate_k_mis,
    transversal_mis_list,
    transversal_reduction,
    tripartite_T_bound_check,
)
from .formats import (
    graph6_decode,
    graph6_encode,
    hypergraph_from_json,
    hypergraph_to_json,
    matching_from_json,
    matching_to_json,
)
from .graphs import (
    FractionalMatching,
    Graph,
    Hypergraph,
    PartitionedGraph,
    cliques_of_size,
    disjoint_union,
    has_clique,
    hypergraph_is_independent,
    hypergraph_is_maximal_independent,
    induced_subgraph,
    is_independent,
    is_maximal_independent,
    partite_complement,
    shadow,
    total_weight,
    validate_fractional_matching,
)
from .search import (
    SearchReport,
    SearchSpec,
    VerifyRow,
    canonical_form,
    canonical_hypergraph_json,
    exhaustive_m,
    hujter_tuza_value,
    hyper_m432_value,
    m3n2_value,
    moon_moser_value,
    mt_n1_value,
    nielsen_value,
    uniqueness_check,
    verify_theorem,
)

__all__ = [name for name in dir() if not name.startswith("_")]
