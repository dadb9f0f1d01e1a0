#include "distsketch/hardness.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "distsketch/errors.hpp"

namespace distsketch {
namespace hardness {

SignedGraph::SignedGraph(int n_, std::vector<SignedEdge> edges_, long long weight_bound_)
    : n(n_), edges(std::move(edges_)) {
    if (n <= 0) throw Error("signed graph must have at least one node");
    long long max_abs = 0;
    for (auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw Error("edge endpoint out of range");
        if (e.u == e.v) throw Error("self-loops are not allowed");
        if (e.u > e.v) std::swap(e.u, e.v);
        max_abs = std::max(max_abs, std::llabs(e.w));
    }
    weight_bound = weight_bound_ > 0 ? weight_bound_ : std::max(1LL, max_abs);
    if (max_abs > weight_bound) throw Error("edge weight exceeds the stated bound");
    std::sort(edges.begin(), edges.end(), [](const SignedEdge& a, const SignedEdge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v)
            throw Error("duplicate edge in signed graph");
}

ReducedInstance reduce(const SignedGraph& g) {
    const int n0 = g.n;
    const long long big_n = 4 * g.weight_bound;
    ReducedInstance r;
    r.n = 3 * n0;
    r.big_n = big_n;
    const std::size_t stride = static_cast<std::size_t>(r.n);
    r.twice_length.assign(stride * stride, 3 * big_n);  // 2 * (3N/2)
    auto set2 = [&](int i, int j, long long twice_w) {
        r.twice_length[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j)] =
            twice_w;
        r.twice_length[static_cast<std::size_t>(j) * stride + static_cast<std::size_t>(i)] =
            twice_w;
    };
    for (const auto& e : g.edges) {
        // copy layout: V1 = [0,n0), V2 = [n0,2n0), V3 = [2n0,3n0)
        set2(e.u, e.v + n0, 2 * (big_n + e.w));
        set2(e.v, e.u + n0, 2 * (big_n + e.w));
        set2(e.u + n0, e.v + 2 * n0, 2 * (big_n + e.w));
        set2(e.v + n0, e.u + 2 * n0, 2 * (big_n + e.w));
        set2(e.u + 2 * n0, e.v, 2 * (2 * big_n - e.w));
        set2(e.v + 2 * n0, e.u, 2 * (2 * big_n - e.w));
    }
    for (int i = 0; i < r.n; ++i)
        r.twice_length[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(i)] = 0;
    return r;
}

long long twice_exact_aps(const ReducedInstance& r) {
    const int n = r.n;
    std::vector<long long> dist(r.twice_length);
    const std::size_t stride = static_cast<std::size_t>(n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            const long long dik = dist[static_cast<std::size_t>(i) * stride +
                                       static_cast<std::size_t>(k)];
            long long* row_i = dist.data() + static_cast<std::size_t>(i) * stride;
            const long long* row_k = dist.data() + static_cast<std::size_t>(k) * stride;
            for (int j = 0; j < n; ++j) {
                long long via = dik + row_k[j];
                if (via < row_i[j]) row_i[j] = via;
            }
        }
    long long sum = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            sum += dist[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j)];
    return sum;
}

long long twice_edge_sum(const ReducedInstance& r) {
    long long sum = 0;
    for (int i = 0; i < r.n; ++i)
        for (int j = i + 1; j < r.n; ++j) sum += r.twice_at(i, j);
    return sum;
}

bool detect_negative_triangle_via_aps(const SignedGraph& g) {
    ReducedInstance r = reduce(g);
    return twice_exact_aps(r) < twice_edge_sum(r);
}

bool has_negative_triangle_bruteforce(const SignedGraph& g) {
    const int n = g.n;
    constexpr long long kAbsent = std::numeric_limits<long long>::min();
    std::vector<long long> w(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                             kAbsent);
    for (const auto& e : g.edges) {
        w[static_cast<std::size_t>(e.u) * static_cast<std::size_t>(n) +
          static_cast<std::size_t>(e.v)] = e.w;
        w[static_cast<std::size_t>(e.v) * static_cast<std::size_t>(n) +
          static_cast<std::size_t>(e.u)] = e.w;
    }
    auto at = [&](int i, int j) {
        return w[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)];
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (at(i, j) == kAbsent) continue;
            for (int k = j + 1; k < n; ++k) {
                if (at(i, k) == kAbsent || at(j, k) == kAbsent) continue;
                if (at(i, j) + at(i, k) + at(j, k) < 0) return true;
            }
        }
    return false;
}

}  // namespace hardness
}  // namespace distsketch
