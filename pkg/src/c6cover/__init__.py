"""Covering 3-graphs with the linear triangle C6³: constructions, oracles and small-n search."""

from .claims import (
    check_claim_4_1,
    check_claim_4_2,
    check_lemma_3_1,
    classify_edges,
    eq1_lower_bound,
    partition_around,
)
from .constructions import (
    construction1,
    construction2,
    construction2_degree_formulas,
    threshold_exceeded,
    turan_graph,
)
from .core import (
    DegreeProfile,
    SimpleGraph,
    ThreeGraph,
    complete_three_graph,
    degree,
    degree_profile,
    delete_vertices,
    link_graph,
    new_three_graph,
)
from .covering import C6, C6Witness, CoverReport, cover_report, fast_witness_via_link, find_c6_through, find_f_cover
from .fileio import parse_graph, parse_hypergraph, serialize
from .patterns import (
    components,
    find_p5,
    find_two_disjoint_p3,
    is_triangle_free,
    max_edges_clique_free_bruteforce,
    min_degree_2graph,
    turan_edge_count,
)
from .search import (
    EnumerationPlan,
    ThresholdResult,
    compute_c1,
    compute_c2,
    enumerate_3graphs,
    random_3graph,
    verify_min_deg2_implies_pattern,
)

__version__ = "0.1.0"
