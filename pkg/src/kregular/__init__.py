"""Exact tools for k-regular partitions and their multiple-sum generating functions."""
from .analysis import (
    ScanReport,
    bessel_coeff,
    bessel_limit_check,
    is_unimodal,
    limit_q1,
    q_bessel_analog,
    q_bessel_mismatch,
    scan_unimodality,
)
from .bijection import (
    BijectionError,
    ForbiddenSizeError,
    ReducedPair,
    build,
    forbidden_sizes,
    forbidden_sizes_empirical,
    reduce,
    reduce_trace,
)
from .genfun import (
    VerificationReport,
    a_direct,
    a_recur,
    ab_relation_check,
    b_poly,
    b_poly_k,
    lemma_sum_series,
    lhs_series,
    rhs_series,
    verify_identity,
)
from .partitions import (
    MultiplicityProfile,
    Partition,
    count_k_regular,
    enumerate_k_regular,
    is_k_regular,
    oracle_series,
    profile,
)
from .qalg import (
    IntPoly,
    QSeries,
    XQSeries,
    poch_finite,
    poly_add,
    poly_mul,
    q_factorial,
    q_int,
    series_from_poly,
    series_recip,
    xq_mul,
)

__version__ = "0.1.0"
