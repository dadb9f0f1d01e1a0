"""Weighted-sample estimation of distance sums, closeness centrality, point
queries and all-pairs distance sums, with exact oracles and a Monte-Carlo
evaluation harness. Thin wrapper over the C++ core."""

from ._core import (  # noqa: F401
    BadDistribution,
    CoefficientVector,
    DegenerateMetric,
    DisconnectedGraph,
    DistanceSpace,
    DistanceVector,
    DistsketchError,
    ErrorReport,
    NotAMetric,
    PairSample,
    RhoVector,
    TargetStats,
    UnreachablePair,
    WeightedSample,
    __version__,
    approx_median,
    aps_from_estimates,
    classify_well_positioned,
    closeness,
    compute_coefficients,
    compute_rho,
    detect_negative_triangle_via_aps,
    draw_multiset,
    draw_sample,
    estimate_all_nodes,
    estimate_aps_pairs,
    estimate_point,
    estimate_point_coords,
    evaluate,
    exact_aps,
    exact_gamma_bar,
    exact_m_all,
    exact_w_all,
    find_well_positioned,
    find_well_positioned_relaxed,
    graph_space,
    has_negative_triangle,
    make_instance,
    matrix_space,
    median_distance,
    median_rank,
    min_med,
    normalize_coefficients,
    parse_edge_list,
    parse_points,
    point_space,
    quantile_rank,
    reduce_triangle,
    sample_pairs,
    sorted_uniform_draws,
    uniform_estimate_w,
    uniform_median,
)
