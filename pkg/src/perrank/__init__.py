"""Exact permanents, permanental polynomials, permanental rank and nullity.

All arithmetic is exact (``fractions.Fraction`` and Python ints).
"""

from .errors import InputError, PerRankError, ResourceError, TheoremViolation
from .generators import GenConfig, SplitMix64, generate, generate_matrix, named_example
from .matrix import Matrix, diag_similar, principal, psd_check, rank_exact, submatrix
from .permanent import permanent, permanent_naive, permanent_sub
from .polynomial import Poly, perm_nullity, perm_poly, perm_poly_principal_sums
from .rank import (
    PermRankResult,
    perm_rank,
    perm_rank_exact,
    perm_rank_nonnegative,
    support_digraph,
    support_matching_bound,
)
from .sachs import EkOk, SachsSubgraph, criterion_report, ek_ok, enumerate_sachs, sachs_coefficient
from .signed_graph import (
    BalanceCertificate,
    CycleParity,
    SignedGraph,
    cycle_parity_class,
    graph_from_matrix,
    is_balanced,
    matrix_from_graph,
    switch,
    underlying_unsigned,
)
from .verify import VerifyReport, batch_verify, search_counterexample, verify

__version__ = "0.1.0"
