#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace distsketch {

using NodeId = int;

struct Edge {
    NodeId u = 0;
    NodeId v = 0;
    double w = 0.0;
};

/// Undirected graph with nonnegative edge lengths.
///
/// Parallel edges collapse to the minimum length and self-loops are dropped.
/// Connectivity is not checked here; distance queries report disconnection
/// lazily.
class Graph {
   public:
    Graph(int n, std::vector<Edge> edges);

    int size() const noexcept { return n_; }

    /// Canonical edge list: u < v, sorted, one entry per node pair.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Neighbors of u as (node, length) pairs.
    std::pair<const std::pair<NodeId, double>*, const std::pair<NodeId, double>*>
    neighbors(NodeId u) const {
        return {adjacency_.data() + offsets_[static_cast<std::size_t>(u)],
                adjacency_.data() + offsets_[static_cast<std::size_t>(u) + 1]};
    }

    /// Shortest-path lengths from s; unreachable nodes hold +infinity.
    std::vector<double> dijkstra(NodeId s) const;

    std::uint64_t content_hash() const noexcept { return hash_; }

   private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<std::pair<NodeId, double>> adjacency_;
    std::uint64_t hash_ = 0;
};

}  // namespace distsketch
