"""Exact partition-rank and marked-Durfee-symbol statistics."""

from .durfee import (
    MarkedDurfeeSymbol,
    d_count,
    enumerate_symbols,
    full_rank,
    ith_ranks,
    nf_class,
    nf_counts,
    vector_rank_counts,
)
from .genfun import (
    RkSeries,
    c9_pipeline,
    mobius_coeff,
    reduce_mod,
    rk_coefficients,
    substitute_root,
)
from .qseries import QSeries, qs_dz, qs_invert, qs_mul, qs_pochhammer
from .rankstats import (
    RankTable,
    atkin_r,
    dyson_rank,
    enumerate_partitions,
    eta_moment,
    r1_series,
    rank_class_count,
    rank_table,
)
from .rings import (
    CyclicResidue,
    CyclotomicElt,
    LaurentPoly,
    NotDivisible,
    RatFunc,
    cyc_eval,
    cyclic_reduce,
    cyclotomic_poly,
    lp_exact_div,
    lp_mul,
    lp_substitute_power,
)

__version__ = "0.1.0"

__all__ = [
    "CyclicResidue",
    "CyclotomicElt",
    "LaurentPoly",
    "MarkedDurfeeSymbol",
    "NotDivisible",
    "QSeries",
    "RankTable",
    "RatFunc",
    "RkSeries",
    "atkin_r",
    "c9_pipeline",
    "cyc_eval",
    "cyclic_reduce",
    "cyclotomic_poly",
    "d_count",
    "dyson_rank",
    "enumerate_partitions",
    "enumerate_symbols",
    "eta_moment",
    "full_rank",
    "ith_ranks",
    "lp_exact_div",
    "lp_mul",
    "lp_substitute_power",
    "mobius_coeff",
    "nf_class",
    "nf_counts",
    "qs_dz",
    "qs_invert",
    "qs_mul",
    "qs_pochhammer",
    "r1_series",
    "rank_class_count",
    "rank_table",
    "reduce_mod",
    "rk_coefficients",
    "substitute_root",
    "vector_rank_counts",
]
