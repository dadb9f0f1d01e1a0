#pragma once

#include <memory>
#include <vector>

#include "distsketch/distance_space.hpp"

namespace distsketch {

// Exact brute-force ground truth used by tests and the measurement harness.
// The estimators never call into this namespace.
namespace oracle {

/// Full distance matrix plus derived exact quantities. Cached per space
/// fingerprint, so repeated lookups cost distance computations only once.
struct ExactTable {
    int n = 0;
    std::vector<double> dist;  // n*n row-major
    std::vector<double> w;     // W(v)
    double aps = 0.0;
    double diameter = 0.0;

    double at(int i, int j) const {
        return dist[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(j)];
    }
};

std::shared_ptr<const ExactTable> exact_table(const DistanceSpace& space);

/// W(v) for every node; n single-source computations on a cache miss.
std::vector<double> exact_w_all(const DistanceSpace& space);

/// Half the sum of all W(v).
double exact_aps(const DistanceSpace& space);

/// Upper coefficients max over z of dist(z,v)/W(z); DegenerateMetric when
/// every distance is zero.
std::vector<double> exact_gamma_bar(const DistanceSpace& space);

/// m_Q(v) for every v: distance to the rank-th closest node, self at rank 1.
std::vector<double> exact_m_all(const DistanceSpace& space, int rank);

double min_med(const DistanceSpace& space, int rank);

/// classification[v] = (m_rank(v) <= 2 * MinMed_rank).
std::vector<bool> classify_well_positioned(const DistanceSpace& space, int rank);

/// Point-set space backed by the exact distance matrix of the input space;
/// distance lookups on the twin are O(1) and share the same metric.
DistanceSpace matrix_twin(const DistanceSpace& space);

}  // namespace oracle
}  // namespace distsketch
