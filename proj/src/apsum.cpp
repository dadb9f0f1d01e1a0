#include "distsketch/apsum.hpp"

#include "distsketch/errors.hpp"
#include "distsketch/rng.hpp"

namespace distsketch {

double aps_from_estimates(const EstimateVector& estimates) {
    double sum = 0.0;
    for (double w : estimates.w_hat) sum += w;
    return 0.5 * sum;
}

RhoVector compute_rho(const DistanceSpace& space, NodeId z) {
    const int n = space.size();
    DistanceVector row = space.single_source(z);
    RhoVector out;
    out.anchor = z;
    out.w_rough.resize(static_cast<std::size_t>(n));
    double total = 0.0;
    for (NodeId u = 0; u < n; ++u) {
        double rough = static_cast<double>(n) * row.d[static_cast<std::size_t>(u)] + row.sum;
        out.w_rough[static_cast<std::size_t>(u)] = rough;
        total += rough;
    }
    if (total <= 0.0) throw BadAnchor("anchor sees only zero distances");
    out.rho.resize(static_cast<std::size_t>(n));
    for (NodeId u = 0; u < n; ++u)
        out.rho[static_cast<std::size_t>(u)] = out.w_rough[static_cast<std::size_t>(u)] / total;
    return out;
}

std::vector<double> normalize_coefficients(const CoefficientVector& coeffs) {
    double total = 0.0;
    for (double g : coeffs.gamma) total += g;
    if (total <= 0.0) throw Error("coefficient vector has zero mass");
    std::vector<double> out(coeffs.gamma);
    for (double& g : out) g /= total;
    return out;
}

PairSample sample_pairs(std::span<const double> gamma_dist, const RhoVector& rho,
                        int k, std::uint64_t seed) {
    if (k < 1) throw Error("pair count must be positive");
    auto i_ids = draw_multiset(gamma_dist, k, derive_seed(seed, 0));
    auto j_ids = draw_multiset(rho.rho, k, derive_seed(seed, 1));
    Rng shuffle_rng(derive_seed(seed, 2));
    shuffle_rng.shuffle(j_ids);
    PairSample out;
    out.k = k;
    out.seed = seed;
    out.pairs.resize(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) {
        NodeId i = i_ids[static_cast<std::size_t>(t)];
        NodeId j = j_ids[static_cast<std::size_t>(t)];
        out.pairs[static_cast<std::size_t>(t)] = {
            i, j,
            gamma_dist[static_cast<std::size_t>(i)] * rho.rho[static_cast<std::size_t>(j)]};
    }
    return out;
}

double estimate_aps_pairs(const DistanceSpace& space, const PairSample& pairs) {
    if (pairs.pairs.empty()) throw Error("empty pair sample");
    double sum = 0.0;
    for (const auto& pr : pairs.pairs) sum += space.distance(pr.i, pr.j) / pr.p;
    return sum / (2.0 * static_cast<double>(pairs.pairs.size()));
}

}  // namespace distsketch
