"""Exact and Monte-Carlo laboratory for character-ratio statistics of random partitions.

The package implements Plancherel and Jack measures on integer
partitions, the corner-growth process whose level marginals they are,
exact verification of the associated martingale-moment identities, and
empirical Kolmogorov-distance measurements against the standard normal.
"""

from .partitions import (
    BoxStats,
    add_box,
    addable_corners,
    alpha_content,
    as_alpha,
    as_partition,
    box_stats,
    conjugate,
    content,
    corners,
    dimension,
    enumerate_partitions,
    format_partition,
    hook_products,
    parse_partition,
    removable_corners,
)
from .measures import (
    TStat,
    char_ratio,
    content_elementary,
    content_product,
    jack_prob,
    level_measure,
    plancherel_prob,
    s_value,
    t_statistic,
)
from .growth import (
    GrowthPath,
    KernelRow,
    RngStream,
    enumerate_paths,
    increments,
    kernel,
    plancherel_kernel,
    sample_path,
)
from .jackbasis import pieri_oracle
from .limits import (
    CdfAtom,
    ConcentrationReport,
    DistanceReport,
    RateReport,
    concentration_probe,
    exact_cdf,
    kolmogorov_exact,
    kolmogorov_mc,
    normal_cdf,
    rate_fit,
)
from .verify import CheckResult, run_all, summarize

__version__ = "0.1.0"

__all__ = [
    "BoxStats",
    "CdfAtom",
    "CheckResult",
    "ConcentrationReport",
    "DistanceReport",
    "GrowthPath",
    "KernelRow",
    "RateReport",
    "RngStream",
    "TStat",
    "add_box",
    "addable_corners",
    "alpha_content",
    "as_alpha",
    "as_partition",
    "box_stats",
    "char_ratio",
    "concentration_probe",
    "conjugate",
    "content",
    "content_elementary",
    "content_product",
    "corners",
    "dimension",
    "enumerate_partitions",
    "enumerate_paths",
    "exact_cdf",
    "format_partition",
    "hook_products",
    "increments",
    "jack_prob",
    "kernel",
    "kolmogorov_exact",
    "kolmogorov_mc",
    "level_measure",
    "normal_cdf",
    "parse_partition",
    "pieri_oracle",
    "plancherel_kernel",
    "plancherel_prob",
    "rate_fit",
    "removable_corners",
    "s_value",
    "sample_path",
    "t_statistic",
]
