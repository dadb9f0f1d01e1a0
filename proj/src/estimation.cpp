#include "distsketch/estimation.hpp"

#include <limits>

#include "distsketch/errors.hpp"

namespace distsketch {

double estimate_point(const DistanceSpace& space, const WeightedSample& sample,
                      NodeId z) {
    if (sample.entries.empty()) return 0.0;
    double sum = 0.0;
    if (space.graph_backed()) {
        DistanceVector row = space.single_source(z);
        for (const auto& e : sample.entries)
            sum += row.d[static_cast<std::size_t>(e.v)] / e.p;
    } else {
        for (const auto& e : sample.entries) sum += space.distance(z, e.v) / e.p;
    }
    return sum;
}

double estimate_point(const DistanceSpace& space, const WeightedSample& sample,
                      std::span<const double> query_coords) {
    double sum = 0.0;
    for (const auto& e : sample.entries)
        sum += space.query_distance(query_coords, e.v) / e.p;
    return sum;
}

EstimateVector estimate_all_nodes(const DistanceSpace& space,
                                  const WeightedSample& sample) {
    const int n = space.size();
    EstimateVector out;
    out.w_hat.assign(static_cast<std::size_t>(n), 0.0);
    for (const auto& e : sample.entries) {
        DistanceVector row = space.single_source(e.v);
        for (NodeId v = 0; v < n; ++v)
            out.w_hat[static_cast<std::size_t>(v)] += row.d[static_cast<std::size_t>(v)] / e.p;
    }
    return out;
}

CentralityVector closeness(const EstimateVector& estimates) {
    const auto n = estimates.w_hat.size();
    if (n < 2) throw Error("centrality needs at least two nodes");
    CentralityVector out;
    out.cc.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        double w = estimates.w_hat[v];
        out.cc[v] = w == 0.0 ? std::numeric_limits<double>::infinity()
                             : (static_cast<double>(n) - 1.0) / w;
    }
    return out;
}

NodeId approx_median(const EstimateVector& estimates) {
    if (estimates.w_hat.empty()) throw Error("empty estimate vector");
    NodeId best = 0;
    for (NodeId v = 1; v < static_cast<NodeId>(estimates.w_hat.size()); ++v)
        if (estimates.w_hat[static_cast<std::size_t>(v)] <
            estimates.w_hat[static_cast<std::size_t>(best)])
            best = v;
    return best;
}

}  // namespace distsketch
