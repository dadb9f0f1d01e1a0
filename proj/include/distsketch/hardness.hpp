#pragma once

#include <cstdint>
#include <vector>

#include "distsketch/graph.hpp"

namespace distsketch {
namespace hardness {

struct SignedEdge {
    NodeId u = 0;
    NodeId v = 0;
    long long w = 0;
};

/// Undirected graph with integer weights in [-M, M]; no self-loops.
struct SignedGraph {
    int n = 0;
    std::vector<SignedEdge> edges;
    long long weight_bound = 1;  // M

    SignedGraph(int n, std::vector<SignedEdge> edges, long long weight_bound = 0);
};

/// Complete graph on 3n nodes whose lengths are half-integers, stored
/// doubled so every comparison is exact integer arithmetic.
///
/// With N = 4M: matched copy pairs of an input edge (u,v) get lengths
/// N + w(u,v) (first->second and second->third copy) and 2N - w(u,v)
/// (third->first copy); every other pair gets 3N/2. All lengths are at
/// least 3M > 0.
struct ReducedInstance {
    int n = 0;          // 3 * original size
    long long big_n = 0;  // N = 4M
    std::vector<long long> twice_length;  // n*n doubled lengths, 0 diagonal

    long long twice_at(int i, int j) const {
        return twice_length[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                            static_cast<std::size_t>(j)];
    }
};

ReducedInstance reduce(const SignedGraph& g);

/// Doubled sum of all-pairs shortest-path distances of the reduced
/// instance (Floyd-Warshall over the complete graph).
long long twice_exact_aps(const ReducedInstance& r);

/// Doubled sum of the edge lengths of the reduced instance.
long long twice_edge_sum(const ReducedInstance& r);

/// True iff the all-pairs distance sum of the reduced instance drops below
/// the edge-length sum, i.e. some reduced edge is not a shortest path.
bool detect_negative_triangle_via_aps(const SignedGraph& g);

/// Ground truth: scans all node triples.
bool has_negative_triangle_bruteforce(const SignedGraph& g);

}  // namespace hardness
}  // namespace distsketch
