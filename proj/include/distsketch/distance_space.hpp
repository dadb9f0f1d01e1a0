#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "distsketch/graph.hpp"
#include "distsketch/point_set.hpp"

namespace distsketch {

/// Exact distances from one source, with their sum.
struct DistanceVector {
    NodeId source = 0;
    std::vector<double> d;
    double sum = 0.0;  // W(source)
};

/// Unified handle over a weighted graph (shortest-path metric) or an explicit
/// point set. Immutable after construction and safe to share across threads.
///
/// Cost accounting: point-set backings count every resolved pairwise
/// distance in an atomic counter (a single-source scan resolves n-1 of
/// them); graph backings count single-source computations instead.
class DistanceSpace {
   public:
    explicit DistanceSpace(Graph g);
    explicit DistanceSpace(PointSet p);

    int size() const noexcept { return n_; }
    bool graph_backed() const noexcept;

    const Graph& graph() const { return std::get<Graph>(backing_); }
    const PointSet& points() const { return std::get<PointSet>(backing_); }

    /// Exact metric distance. Graph backing runs one single-source
    /// computation; throws UnreachablePair across components.
    double distance(NodeId u, NodeId v) const;

    /// Exact distances from s to every node; throws DisconnectedGraph if any
    /// node is unreachable.
    DistanceVector single_source(NodeId s) const;

    /// Distance from an arbitrary coordinate query point (coordinate-mode
    /// point sets only).
    double query_distance(std::span<const double> coords, NodeId v) const;

    std::uint64_t distance_evals() const noexcept {
        return counters_->distance_evals.load(std::memory_order_relaxed);
    }
    std::uint64_t sssp_calls() const noexcept {
        return counters_->sssp_calls.load(std::memory_order_relaxed);
    }

    /// Content hash; identical payloads share oracle cache entries.
    std::uint64_t fingerprint() const noexcept { return fingerprint_; }

    DistanceSpace(DistanceSpace&&) noexcept = default;
    DistanceSpace& operator=(DistanceSpace&&) noexcept = default;

   private:
    struct Counters {
        std::atomic<std::uint64_t> distance_evals{0};
        std::atomic<std::uint64_t> sssp_calls{0};
    };

    std::variant<Graph, PointSet> backing_;
    int n_;
    std::uint64_t fingerprint_;
    std::unique_ptr<Counters> counters_ = std::make_unique<Counters>();
};

/// Shared-ownership alias used by result types that keep their space alive.
using SpacePtr = std::shared_ptr<const DistanceSpace>;

}  // namespace distsketch
