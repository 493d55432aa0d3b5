"""Exact-arithmetic toolkit for unimodular configurations, centrally
symmetric and Cayley constructions, and their certification pipelines."""

__version__ = "0.1.0"

from .certify import (
    CertificateReport,
    certify_corollary,
    certify_edge,
    certify_main1,
    certify_main2,
    certify_proof_identities,
)
from .configurations import (
    CentrallySymmetric,
    Configuration,
    append_origin,
    as_configuration,
    centrally_symmetric,
    homogenize,
)
from .graphs import (
    Graph,
    edge_configuration,
    edge_polytope_dim,
    family,
    is_bipartite,
    odd_cycles_pairwise_intersect,
    reduced_edge_configuration,
)
from .linalg import (
    IntMatrix,
    SmithInvariants,
    hnf,
    is_unimodular,
    kernel_lattice_basis,
    maximal_minor_profile,
    rank,
    smith_invariants,
    solve_rational,
)
from .polytopes import (
    HRep,
    HStarPoly,
    LatticePolytope,
    cayley_sum,
    check_oda,
    is_unimodular_simplex,
    minkowski_sum,
    polytope_from_columns,
)
from .toric import (
    Binomial,
    GroebnerBasis,
    HPoly,
    MonomialIdeal,
    SimplicialComplex,
    TermOrder,
    buchberger_reduced,
    conform_azeroGB,
    conform_cayleyGB,
    conform_pmGB,
    h_polynomial,
    initial_ideal,
    is_squarefree,
    palindromic,
    stanley_reisner,
    toric_ideal,
    triangulation_unimodular,
)
