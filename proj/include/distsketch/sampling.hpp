#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "distsketch/distance_space.hpp"

namespace distsketch {

// Constants for the well-positioned-node searches. The candidate set has
// ceil(kCandidateLogFactor * ln n) members; the relaxed finder probes each
// candidate with ceil(kProbeLogFactor * ln n) uniform points, placing the
// sample 0.55-quantile between the true 0.5 and 0.6 quantiles with failure
// probability at most n^-2 per candidate.
inline constexpr int kCandidateLogFactor = 10;
inline constexpr int kProbeLogFactor = 48;
inline constexpr double kRelaxedQuantileFraction = 0.6;
inline constexpr double kProbeQuantile = 0.55;
inline constexpr int kRelaxedMinSize = 20;

/// Per-node sampling coefficients together with the base set that produced
/// them. gamma[v] = max(1/n, max over u in base of dist(u,v)/W(u)).
struct CoefficientVector {
    std::vector<double> gamma;
    std::vector<NodeId> base_set;
};

struct SampleEntry {
    NodeId v = 0;
    double p = 0.0;  // inclusion probability, in (0,1]
};

/// Poisson sample: each node v appears at most once, included independently
/// with probability p_v = min(1, k*gamma_v).
struct WeightedSample {
    std::vector<SampleEntry> entries;  // ascending node id
    double k = 0.0;
    std::uint64_t seed = 0;
};

/// Rank of the median-distance quantile: the node itself occupies rank 1 at
/// distance 0, so m(u) is the distance to the (rank)-th closest node.
int median_rank(int n);

/// ceil(fraction * n), clamped to [1, n].
int quantile_rank(int n, double fraction);

/// Sampling coefficients from the given base set; |base| single-source
/// computations.
CoefficientVector compute_coefficients(const DistanceSpace& space,
                                       std::span<const NodeId> base);

/// Independent Bernoulli inclusion with p_v = min(1, k*gamma_v); pure
/// function of (coeffs, k, seed).
WeightedSample draw_sample(const CoefficientVector& coeffs, double k,
                           std::uint64_t seed);

/// Distance from u to its rank-th closest node (self included at rank 1).
/// One single-source computation.
double median_distance(const DistanceSpace& space, NodeId u, int rank);

/// Minimizes m(u) over ceil(10 ln n) uniform candidates; ties break to the
/// lowest node id.
NodeId find_well_positioned(const DistanceSpace& space, std::uint64_t seed);

/// Sub-linear variant for point sets: scores each candidate by the sample
/// 0.55-quantile of distances to ceil(48 ln n) uniform probes. Falls back to
/// find_well_positioned when n < 20 or for graph backings.
NodeId find_well_positioned_relaxed(const DistanceSpace& space, std::uint64_t seed);

/// k values jointly distributed as the order statistics of k iid uniforms,
/// generated in O(k) via exponential spacings.
std::vector<double> sorted_uniform_draws(int k, std::uint64_t seed);

/// k independent draws with replacement from probs (which must sum to 1
/// within 1e-9); one merge pass over prefix sums, O(n + k) total.
std::vector<NodeId> draw_multiset(std::span<const double> probs, int k,
                                  std::uint64_t seed);

}  // namespace distsketch
