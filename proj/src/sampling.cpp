#include "distsketch/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "distsketch/errors.hpp"
#include "distsketch/rng.hpp"

namespace distsketch {

int median_rank(int n) { return 1 + (n + 1) / 2; }

int quantile_rank(int n, double fraction) {
    int q = static_cast<int>(std::ceil(fraction * n));
    return std::clamp(q, 1, n);
}

CoefficientVector compute_coefficients(const DistanceSpace& space,
                                       std::span<const NodeId> base) {
    if (base.empty()) throw Error("base set must be nonempty");
    const int n = space.size();
    CoefficientVector out;
    out.gamma.assign(static_cast<std::size_t>(n), 1.0 / n);
    out.base_set.assign(base.begin(), base.end());
    for (NodeId u : base) {
        DistanceVector row = space.single_source(u);
        if (row.sum <= 0.0) continue;  // all distances zero; floor stays
        for (NodeId v = 0; v < n; ++v) {
            double ratio = row.d[static_cast<std::size_t>(v)] / row.sum;
            auto& g = out.gamma[static_cast<std::size_t>(v)];
            if (ratio > g) g = ratio;
        }
    }
    return out;
}

WeightedSample draw_sample(const CoefficientVector& coeffs, double k,
                           std::uint64_t seed) {
    if (!(k > 0.0)) throw Error("sample size parameter k must be positive");
    WeightedSample out;
    out.k = k;
    out.seed = seed;
    Rng rng(seed);
    for (NodeId v = 0; v < static_cast<NodeId>(coeffs.gamma.size()); ++v) {
        double p = std::min(1.0, k * coeffs.gamma[static_cast<std::size_t>(v)]);
        double r = rng.next_double();  // one draw per node keeps the stream aligned
        if (r < p) out.entries.push_back({v, p});
    }
    return out;
}

double median_distance(const DistanceSpace& space, NodeId u, int rank) {
    const int n = space.size();
    if (rank < 1 || rank > n) throw Error("quantile rank out of range");
    DistanceVector row = space.single_source(u);
    std::nth_element(row.d.begin(), row.d.begin() + (rank - 1), row.d.end());
    return row.d[static_cast<std::size_t>(rank - 1)];
}

namespace {

std::vector<NodeId> unique_uniform_candidates(int n, int count, Rng& rng) {
    std::vector<NodeId> ids;
    ids.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) ids.push_back(rng.next_index(n));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

}  // namespace

NodeId find_well_positioned(const DistanceSpace& space, std::uint64_t seed) {
    const int n = space.size();
    if (n < 2) throw Error("need at least two nodes");
    Rng rng(seed);
    int count = static_cast<int>(std::ceil(kCandidateLogFactor * std::log(n)));
    auto candidates = unique_uniform_candidates(n, count, rng);
    const int rank = median_rank(n);
    NodeId best = candidates.front();
    double best_m = median_distance(space, best, rank);
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        double m = median_distance(space, candidates[i], rank);
        if (m < best_m) {  // candidates ascend, so ties keep the lowest id
            best_m = m;
            best = candidates[i];
        }
    }
    return best;
}

NodeId find_well_positioned_relaxed(const DistanceSpace& space, std::uint64_t seed) {
    const int n = space.size();
    if (n < kRelaxedMinSize || space.graph_backed())
        return find_well_positioned(space, seed);
    Rng rng(seed);
    int cand_count = static_cast<int>(std::ceil(kCandidateLogFactor * std::log(n)));
    int probe_count = static_cast<int>(std::ceil(kProbeLogFactor * std::log(n)));
    auto candidates = unique_uniform_candidates(n, cand_count, rng);
    int q_index = static_cast<int>(std::ceil(kProbeQuantile * probe_count));  // 1-based
    NodeId best = -1;
    double best_score = 0.0;
    std::vector<double> probes(static_cast<std::size_t>(probe_count));
    for (NodeId v : candidates) {
        for (int i = 0; i < probe_count; ++i)
            probes[static_cast<std::size_t>(i)] = space.distance(v, rng.next_index(n));
        std::nth_element(probes.begin(), probes.begin() + (q_index - 1), probes.end());
        double score = probes[static_cast<std::size_t>(q_index - 1)];
        if (best < 0 || score < best_score) {
            best_score = score;
            best = v;
        }
    }
    return best;
}

std::vector<double> sorted_uniform_draws(int k, std::uint64_t seed) {
    if (k < 1) throw Error("draw count must be positive");
    Rng rng(seed);
    std::vector<double> xs(static_cast<std::size_t>(k));
    double running = 0.0;
    for (int i = 1; i <= k; ++i) {
        // spacing ~ Exp(k + 1 - i); prefix sums are sorted unit exponentials
        double y = -std::log(rng.next_double_positive()) / (k + 1 - i);
        running += y;
        xs[static_cast<std::size_t>(i - 1)] = 1.0 - std::exp(-running);
    }
    return xs;
}

std::vector<NodeId> draw_multiset(std::span<const double> probs, int k,
                                  std::uint64_t seed) {
    const int n = static_cast<int>(probs.size());
    if (n == 0) throw BadDistribution("empty probability vector");
    double total = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) throw BadDistribution("negative probability");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw BadDistribution("probabilities sum to " + std::to_string(total));

    std::vector<double> prefix(static_cast<std::size_t>(n) + 1, 0.0);
    for (int i = 0; i < n; ++i)
        prefix[static_cast<std::size_t>(i) + 1] =
            prefix[static_cast<std::size_t>(i)] + probs[static_cast<std::size_t>(i)];

    auto draws = sorted_uniform_draws(k, seed);
    std::vector<NodeId> out(static_cast<std::size_t>(k));
    int idx = 0;
    for (int t = 0; t < k; ++t) {
        double x = draws[static_cast<std::size_t>(t)];
        while (idx + 1 < n && x >= prefix[static_cast<std::size_t>(idx) + 1]) ++idx;
        int j = idx;
        while (j > 0 && probs[static_cast<std::size_t>(j)] == 0.0) --j;  // x past the mass
        out[static_cast<std::size_t>(t)] = j;
    }
    return out;
}

}  // namespace distsketch
