#include "distsketch/distance_space.hpp"

#include <cmath>
#include <string>

#include "distsketch/errors.hpp"

namespace distsketch {

DistanceSpace::DistanceSpace(Graph g)
    : backing_(std::move(g)),
      n_(std::get<Graph>(backing_).size()),
      fingerprint_(std::get<Graph>(backing_).content_hash()) {}

DistanceSpace::DistanceSpace(PointSet p)
    : backing_(std::move(p)),
      n_(std::get<PointSet>(backing_).size()),
      fingerprint_(std::get<PointSet>(backing_).content_hash()) {}

bool DistanceSpace::graph_backed() const noexcept {
    return std::holds_alternative<Graph>(backing_);
}

double DistanceSpace::distance(NodeId u, NodeId v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw Error("node id out of range");
    if (graph_backed()) {
        if (u == v) return 0.0;
        auto dist = std::get<Graph>(backing_).dijkstra(u);
        counters_->sssp_calls.fetch_add(1, std::memory_order_relaxed);
        double d = dist[static_cast<std::size_t>(v)];
        if (std::isinf(d))
            throw UnreachablePair("no path between " + std::to_string(u) + " and " +
                                  std::to_string(v));
        return d;
    }
    counters_->distance_evals.fetch_add(1, std::memory_order_relaxed);
    return std::get<PointSet>(backing_).resolve(u, v);
}

DistanceVector DistanceSpace::single_source(NodeId s) const {
    if (s < 0 || s >= n_) throw Error("node id out of range");
    DistanceVector out;
    out.source = s;
    if (graph_backed()) {
        out.d = std::get<Graph>(backing_).dijkstra(s);
        counters_->sssp_calls.fetch_add(1, std::memory_order_relaxed);
        for (double d : out.d)
            if (std::isinf(d))
                throw DisconnectedGraph("graph is disconnected (source " + std::to_string(s) +
                                        ")");
    } else {
        const auto& pts = std::get<PointSet>(backing_);
        out.d.resize(static_cast<std::size_t>(n_));
        for (NodeId v = 0; v < n_; ++v)
            out.d[static_cast<std::size_t>(v)] = (v == s) ? 0.0 : pts.resolve(s, v);
        counters_->distance_evals.fetch_add(static_cast<std::uint64_t>(n_ - 1),
                                             std::memory_order_relaxed);
    }
    double sum = 0.0;
    for (double d : out.d) sum += d;
    out.sum = sum;
    return out;
}

double DistanceSpace::query_distance(std::span<const double> coords, NodeId v) const {
    if (graph_backed())
        throw UnsupportedQuery("coordinate queries require a point-set backing");
    const auto& pts = std::get<PointSet>(backing_);
    if (pts.mode() != PointSet::Mode::Coordinates)
        throw UnsupportedQuery("coordinate queries require coordinate-mode points");
    if (static_cast<int>(coords.size()) != pts.dim())
        throw Error("query dimension mismatch");
    if (v < 0 || v >= n_) throw Error("node id out of range");
    counters_->distance_evals.fetch_add(1, std::memory_order_relaxed);
    return pts.resolve_query(coords.data(), v);
}

}  // namespace distsketch
