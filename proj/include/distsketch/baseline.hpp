#pragma once

#include <cstdint>
#include <span>

#include "distsketch/distance_space.hpp"
#include "distsketch/estimation.hpp"

namespace distsketch {

/// Scaled sample-average estimate (n/|Q|) * sum over a in Q of dist(z,a).
double uniform_estimate_w(const DistanceSpace& space, std::span<const NodeId> q_set,
                          NodeId z);

/// Scaled sample-average estimates for every node from one uniform sample Q
/// of the given size; |Q| single-source computations.
EstimateVector uniform_estimate_all(const DistanceSpace& space, int q_size,
                                    std::uint64_t seed);

struct UniformMedianResult {
    NodeId node = 0;
    double scaled_estimate = 0.0;  // (n/|Q|) * W_Q(node)
    int q_size = 0;
};

/// Approximate 1-median from a uniform sample Q with
/// |Q| = ceil(64 * eps^-2 * ln(n/delta)), capped at n: returns the node
/// minimizing the distance sum to Q, ties to the lowest id.
UniformMedianResult uniform_median_detail(const DistanceSpace& space, double epsilon,
                                          double delta, std::uint64_t seed);

NodeId uniform_median(const DistanceSpace& space, double epsilon, double delta,
                      std::uint64_t seed);

}  // namespace distsketch
