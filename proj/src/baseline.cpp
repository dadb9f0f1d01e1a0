#include "distsketch/baseline.hpp"

#include <algorithm>
#include <cmath>

#include "distsketch/errors.hpp"
#include "distsketch/rng.hpp"

namespace distsketch {

double uniform_estimate_w(const DistanceSpace& space, std::span<const NodeId> q_set,
                          NodeId z) {
    if (q_set.empty()) throw Error("sample set must be nonempty");
    const double scale = static_cast<double>(space.size()) / static_cast<double>(q_set.size());
    double sum = 0.0;
    if (space.graph_backed()) {
        DistanceVector row = space.single_source(z);
        for (NodeId a : q_set) sum += row.d[static_cast<std::size_t>(a)];
    } else {
        for (NodeId a : q_set) sum += space.distance(z, a);
    }
    return scale * sum;
}

EstimateVector uniform_estimate_all(const DistanceSpace& space, int q_size,
                                    std::uint64_t seed) {
    const int n = space.size();
    if (q_size < 1 || q_size > n) throw Error("sample size must be in [1, n]");
    Rng rng(seed);
    auto q_ids = rng.sample_without_replacement(n, q_size);
    EstimateVector out;
    out.w_hat.assign(static_cast<std::size_t>(n), 0.0);
    const double scale = static_cast<double>(n) / q_size;
    for (int a : q_ids) {
        DistanceVector row = space.single_source(a);
        for (NodeId v = 0; v < n; ++v)
            out.w_hat[static_cast<std::size_t>(v)] += row.d[static_cast<std::size_t>(v)];
    }
    for (auto& w : out.w_hat) w *= scale;
    return out;
}

UniformMedianResult uniform_median_detail(const DistanceSpace& space, double epsilon,
                                          double delta, std::uint64_t seed) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error("epsilon must be in (0,1)");
    if (!(delta > 0.0 && delta < 1.0)) throw Error("delta must be in (0,1)");
    const int n = space.size();
    double raw = 64.0 / (epsilon * epsilon) * std::log(static_cast<double>(n) / delta);
    int q_size = static_cast<int>(std::min<double>(n, std::ceil(raw)));
    q_size = std::max(q_size, 1);

    Rng rng(seed);
    auto q_ids = rng.sample_without_replacement(n, q_size);

    std::vector<double> w_q(static_cast<std::size_t>(n), 0.0);
    for (int a : q_ids) {
        DistanceVector row = space.single_source(a);
        for (NodeId v = 0; v < n; ++v)
            w_q[static_cast<std::size_t>(v)] += row.d[static_cast<std::size_t>(v)];
    }
    NodeId best = 0;
    for (NodeId v = 1; v < n; ++v)
        if (w_q[static_cast<std::size_t>(v)] < w_q[static_cast<std::size_t>(best)]) best = v;

    UniformMedianResult out;
    out.node = best;
    out.q_size = q_size;
    out.scaled_estimate =
        static_cast<double>(n) / q_size * w_q[static_cast<std::size_t>(best)];
    return out;
}

NodeId uniform_median(const DistanceSpace& space, double epsilon, double delta,
                      std::uint64_t seed) {
    return uniform_median_detail(space, epsilon, delta, seed).node;
}

}  // namespace distsketch
