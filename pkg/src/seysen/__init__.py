"""Seysen measure, orthogonality defect and their inequalities for lattice bases.

Exact rational arithmetic is the default; every quantity also has a float
mode.  See :mod:`seysen.measures` for the five evaluation routes of the
Seysen measure, :mod:`seysen.bounds` for the inequalities between it and the
orthogonality defect, and :mod:`seysen.reduction` for greedy pairwise Seysen
reduction with an LLL baseline.
"""

from .bounds import (
    BoundVerdict,
    MeanTriple,
    check_all,
    check_reduced_min_bound,
    hga_upper,
    seysen_existence_bound,
)
from .errors import (
    DomainError,
    GenerationFailed,
    InvariantBroken,
    NoConvergence,
    NotSymmetric,
    ParseError,
    RankDeficient,
    RouteMismatch,
    SeysenError,
    SingularMatrix,
    SweepLimitReached,
)
from .generators import EnsembleSpec, gen_knapsack, gen_uniform
from .lattice import Basis, DualBasis, dual_basis, embed_isometric
from .matrixio import parse_matrix, serialize_matrix
from .measures import (
    MetricReport,
    kappa_sq,
    metric_report,
    orthogonality_defect,
    seysen,
    seysen_angles,
    seysen_cofactor,
    seysen_dual,
    seysen_eigen,
    seysen_trace_form,
)
from .reduction import (
    ReductionConfig,
    ReductionTrace,
    lll_reduce,
    seysen_reduce,
    unimodular_scramble,
)

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "BoundVerdict",
    "DomainError",
    "DualBasis",
    "EnsembleSpec",
    "GenerationFailed",
    "InvariantBroken",
    "MeanTriple",
    "MetricReport",
    "NoConvergence",
    "NotSymmetric",
    "ParseError",
    "RankDeficient",
    "ReductionConfig",
    "ReductionTrace",
    "RouteMismatch",
    "SeysenError",
    "SingularMatrix",
    "SweepLimitReached",
    "check_all",
    "check_reduced_min_bound",
    "dual_basis",
    "embed_isometric",
    "gen_knapsack",
    "gen_uniform",
    "hga_upper",
    "kappa_sq",
    "lll_reduce",
    "metric_report",
    "orthogonality_defect",
    "parse_matrix",
    "serialize_matrix",
    "seysen",
    "seysen_angles",
    "seysen_cofactor",
    "seysen_dual",
    "seysen_eigen",
    "seysen_existence_bound",
    "seysen_reduce",
    "seysen_trace_form",
    "unimodular_scramble",
]
