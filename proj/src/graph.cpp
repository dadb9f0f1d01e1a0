#include "distsketch/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <queue>
#include <stdexcept>

#include "distsketch/errors.hpp"

namespace distsketch {

namespace {

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n <= 0) throw Error("graph must have at least one node");
    for (auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw Error("edge endpoint out of range");
        if (!(e.w >= 0.0) || !std::isfinite(e.w))
            throw NegativeWeight("edge length must be finite and nonnegative");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        return a.w < b.w;
    });
    edges_.reserve(edges.size());
    for (const auto& e : edges) {
        if (e.u == e.v) continue;  // self-loop
        if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v)
            continue;  // parallel edge, minimum length already kept
        edges_.push_back(e);
    }

    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& e : edges_) {
        ++offsets_[static_cast<std::size_t>(e.u) + 1];
        ++offsets_[static_cast<std::size_t>(e.v) + 1];
    }
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
    adjacency_.resize(offsets_.back());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
        adjacency_[cursor[static_cast<std::size_t>(e.u)]++] = {e.v, e.w};
        adjacency_[cursor[static_cast<std::size_t>(e.v)]++] = {e.u, e.w};
    }

    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = fnv1a(h, "graph", 5);
    h = fnv1a(h, &n_, sizeof n_);
    for (const auto& e : edges_) {
        h = fnv1a(h, &e.u, sizeof e.u);
        h = fnv1a(h, &e.v, sizeof e.v);
        h = fnv1a(h, &e.w, sizeof e.w);
    }
    hash_ = h;
}

std::vector<double> Graph::dijkstra(NodeId s) const {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(static_cast<std::size_t>(n_), kInf);
    dist[static_cast<std::size_t>(s)] = 0.0;

    using Item = std::pair<double, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.emplace(0.0, s);
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[static_cast<std::size_t>(u)]) continue;  // stale entry
        auto [it, end] = neighbors(u);
        for (; it != end; ++it) {
            double nd = d + it->second;
            if (nd < dist[static_cast<std::size_t>(it->first)]) {
                dist[static_cast<std::size_t>(it->first)] = nd;
                heap.emplace(nd, it->first);
            }
        }
    }
    return dist;
}

}  // namespace distsketch
