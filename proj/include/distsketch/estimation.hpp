#pragma once

#include <span>
#include <vector>

#include "distsketch/distance_space.hpp"
#include "distsketch/sampling.hpp"

namespace distsketch {

/// Inverse-probability estimates of the per-node distance sums W(v).
struct EstimateVector {
    std::vector<double> w_hat;
};

/// Closeness centralities (n-1)/w_hat; +infinity where w_hat is zero.
struct CentralityVector {
    std::vector<double> cc;
};

/// Estimated W(z) from the sample: sum over entries of dist(z,u)/p_u.
/// Point-set backings resolve exactly |sample| distances; graph backings use
/// one single-source computation from z.
double estimate_point(const DistanceSpace& space, const WeightedSample& sample,
                      NodeId z);

/// Same estimator for a coordinate query point outside V (coordinate-mode
/// point sets only).
double estimate_point(const DistanceSpace& space, const WeightedSample& sample,
                      std::span<const double> query_coords);

/// Estimates W(v) for every node with one single-source computation per
/// sample entry, accumulating dist(u,v)/p_u in sample order.
EstimateVector estimate_all_nodes(const DistanceSpace& space,
                                  const WeightedSample& sample);

CentralityVector closeness(const EstimateVector& estimates);

/// Index of the minimum estimate; ties break to the lowest node id.
NodeId approx_median(const EstimateVector& estimates);

}  // namespace distsketch
