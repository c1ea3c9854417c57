"""Exact multigraded Betti numbers of edge ideals and their witnesses.

The package computes Betti tables of squarefree monomial quotients over
GF(p) or the rationals via Hochster's formula, certifies non-vanishing
through ordered Taylor (Lyubeznik) complexes, searches for vertex-disjoint
complete bipartite families with 3-disjoint representatives, and evaluates
the closed-form projective-dimension formulas those families support on
Cohen-Macaulay and unmixed bipartite graphs.
"""

from .errors import ResourceLimitError
from .graphs import (
    SimpleGraph,
    a_number,
    bipartition,
    c_number,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    ferrers_graph,
    is_chordal,
    is_cochordal,
    is_complete_bipartite,
    is_three_disjoint,
    path_graph,
)
from .hochster import (
    BettiTable,
    betti_table,
    graph_betti_table,
    projective_dimension,
    regularity,
    strand_homology,
    verify_bcp,
    verify_eagon_reiner,
)
from .ideals import (
    Monomial,
    MonomialIdeal,
    alexander_dual,
    cover_ideal,
    edge_ideal,
    independence_complex,
    is_unmixed,
    minimal_vertex_covers,
    stanley_reisner_complex,
)
from .linalg import GF2, RATIONALS, FieldSpec
from .lyubeznik import (
    Cycle,
    admissible_symbols,
    barile_certificate,
    bipartite_cycle,
    check_cycle_certificate,
    is_admissible,
    is_maximal_admissible,
    lyubeznik_betti_table,
    main_theorem_certificate,
    product_cycle,
    taylor_boundary,
)
from .witness import (
    CompleteBipartiteSub,
    DisjointFamily,
    cochordal_pd,
    enumerate_blocks,
    is_valid_family,
    linear_strand_betti,
    max_pd_witness,
    witness_for,
)

__version__ = "0.1.0"
