#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "distsketch/distance_space.hpp"
#include "distsketch/estimation.hpp"
#include "distsketch/sampling.hpp"

namespace distsketch {

/// Rough per-node sums anchored at z: w_rough[u] = n*dist(u,z) + W(z),
/// normalized into the pair-sampling marginal rho.
struct RhoVector {
    std::vector<double> rho;
    NodeId anchor = 0;
    std::vector<double> w_rough;
};

struct SampledPair {
    NodeId i = 0;
    NodeId j = 0;
    double p = 0.0;  // gamma_i * rho_j
};

/// k ordered pairs drawn iid from the outer product gamma x rho.
struct PairSample {
    std::vector<SampledPair> pairs;
    int k = 0;
    std::uint64_t seed = 0;
};

/// Half the sum of per-node estimates.
double aps_from_estimates(const EstimateVector& estimates);

/// One single-source computation from z. Throws BadAnchor when every
/// distance is zero.
RhoVector compute_rho(const DistanceSpace& space, NodeId z);

/// Coefficients scaled to sum to 1, ready for pair sampling.
std::vector<double> normalize_coefficients(const CoefficientVector& coeffs);

/// Draws i from gamma_dist and j from rho independently; the j multiset is
/// shuffled with a seed-derived permutation before zipping so the k slots
/// are independent. O(n + k).
PairSample sample_pairs(std::span<const double> gamma_dist, const RhoVector& rho,
                        int k, std::uint64_t seed);

/// Sample-average inverse-probability estimate of the all-pairs sum over
/// unordered pairs: (1/|S|) * sum dist(i,j)/p_ij, halved because the pair
/// distribution ranges over ordered pairs whose distance total is twice the
/// unordered sum. Exactly |S| distance evaluations.
double estimate_aps_pairs(const DistanceSpace& space, const PairSample& pairs);

}  // namespace distsketch
