"""Toolkit for absolutely avoidable order-size pairs of induced subgraphs:
exact integer criteria with constructive certificates, witness graphs,
brute-force arrowing oracles at small scale, and the bipartite
biclique-plus-forest construction showing the method's bipartite limit.
"""

from .bipartite import (
    BicliqueForestDecomp,
    BipartitePair,
    BipartiteVerdict,
    bipartite_realize,
    verify_bipartite_decomp,
)
from .canon import canonical_graph, canonical_key, canonical_order
from .criterion import (
    AvoidabilityCert,
    CertRejection,
    CliqueForestCert,
    CriterionEval,
    Impossible,
    PairMF,
    Realizable,
    avoidability_certificate,
    clique_forest_realizable,
    eval_criterion,
    lr_from_f,
    lr_values,
    scan_interval,
    scan_mod23,
    scan_affine_q,
    scan_offset_disjunction,
    xcheck_lr_equivalence,
)
from .equidist import EquidistReport, diag_equidist
from .errors import DomainError, GuardError, ScanAssertionError
from .exactarith import FixedPointFrac, binom2, frac_sqrt_half, isqrt, surd_floor
from .graphs import Graph, from_graph6, girth, to_graph6
from .oracle import (
    ArrowReport,
    ArrowVerdict,
    arrows,
    arrows_pair,
    clique_forest_oracle,
    compute_S_n,
    enumerate_graphs,
)
from .pell import (
    PellState,
    generate_M,
    is_in_M,
    m_states,
    pell_initial,
    pell_next,
    pell_states,
    verify_pell_state,
)
from .witness import (
    Infeasible,
    WitnessGraph,
    WitnessVerdict,
    build_witness,
    build_witness_or_complement,
    exhaustive_arrow_check,
    verify_witness,
)

__version__ = "0.1.0"
